"""Machine-checkable certificates for negative verdicts.

Each certificate re-checks against the decision procedures of the space it
refers to: a catalog name dispatches to the symbolic procedures, an embedded
space document to the finite-space ones. Re-checking never trusts the
producing code path.
"""

from dataclasses import dataclass

from .errors import ParseError, WorkbenchError

CERT_KINDS = {}


def _register(cls):
    CERT_KINDS[cls.kind] = cls
    return cls


def _is_finite_ref(space_ref) -> bool:
    return isinstance(space_ref, dict)


def _finite_space(space_ref):
    from .docio import space_from_doc

    return space_from_doc(space_ref)


@_register
@dataclass(frozen=True)
class NotSoberCertificate:
    space_ref: object
    closed_set: object
    sampled_candidates: tuple = ()
    kind = "not-sober"

    def recheck(self) -> bool:
        if _is_finite_ref(self.space_ref):
            return self._recheck_finite()
        if self.space_ref == "chain-omega1-omega-scott":
            return self._recheck_chain()
        if self.space_ref == "cofinite-nat":
            return self._recheck_cofinite()
        return False

    def _recheck_finite(self) -> bool:
        from .core import closed_sets, is_irreducible, point_closures

        space = _finite_space(self.space_ref)
        mask = int(self.closed_set)
        if mask not in closed_sets(space) or not is_irreducible(space, mask):
            return False
        return all(c != mask for c in point_closures(space))

    def _recheck_chain(self) -> bool:
        from .chain_space import ChainRay, ray_is_omega_scott_open
        from .ordinals import OMEGA1, parse_ordinal

        if self.closed_set != {"kind": "ordinals-below-omega1"}:
            return False
        # the set is closed: its complement is the omega-Scott-open ray at Omega
        if not ray_is_omega_scott_open(ChainRay(OMEGA1)):
            return False
        # irreducible: any two open rays meeting the set intersect inside it,
        # sampled via the candidates' principal rays
        rays = [parse_ordinal(str(c)) for c in self.sampled_candidates]
        for a in rays:
            for b in rays:
                meet = max(a, b)
                if meet.is_omega1:
                    return False
        # no generic point: each candidate inside the set is exceeded by its
        # successor, and Omega lies outside the set
        for c in self.sampled_candidates:
            x = parse_ordinal(str(c))
            if x.is_omega1:
                continue
            if not x < x.succ():
                return False
        return True

    def _recheck_cofinite(self) -> bool:
        from .cofinite_space import (
            canonical_filtered_family,
            opens_intersect,
            point_closure,
            refute_generic_candidate,
        )

        if self.closed_set != {"kind": "whole-space"}:
            return False
        opens = [canonical_filtered_family(i) for i in range(8)]
        for a in opens:
            for b in opens:
                if opens_intersect(a, b) is None:
                    return False
        for c in self.sampled_candidates:
            x = int(c)
            away = refute_generic_candidate(x)
            if point_closure(x).contains(away):
                return False
        return True

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "space": self.space_ref,
            "closed_set": self.closed_set,
            "sampled_candidates": list(self.sampled_candidates),
        }

    @classmethod
    def from_json(cls, doc):
        return cls(doc["space"], _roundtrip_set(doc["closed_set"]),
                   tuple(doc.get("sampled_candidates", ())))


@_register
@dataclass(frozen=True)
class NotDSpaceCertificate:
    space_ref: object
    directed_set: object
    sampled_candidates: tuple = ()
    kind = "not-d-space"

    def recheck(self) -> bool:
        if _is_finite_ref(self.space_ref):
            return self._recheck_finite()
        if self.space_ref == "chain-omega1-omega-scott":
            return self._recheck_chain()
        return False

    def _recheck_finite(self) -> bool:
        from .core import closure, is_directed, point_closures

        space = _finite_space(self.space_ref)
        mask = int(self.directed_set)
        if not is_directed(space, mask):
            return False
        cl = closure(space, mask)
        return all(c != cl for c in point_closures(space))

    def _recheck_chain(self) -> bool:
        from .chain_space import (
            ChainRay,
            ray_is_omega_scott_open,
            refute_chain_generic_candidate,
        )
        from .ordinals import OMEGA1, parse_ordinal

        if self.directed_set != {"kind": "ordinals-below-omega1"}:
            return False
        # directed: the set is a chain, any two members are comparable;
        # spot-checked on the sampled candidates
        xs = [parse_ordinal(str(c)) for c in self.sampled_candidates]
        for a in xs:
            for b in xs:
                if not (a <= b or b <= a):
                    return False
        # closed: the complement {Omega} passes the omega-Scott-open decision
        if not ray_is_omega_scott_open(ChainRay(OMEGA1)):
            return False
        # every candidate generic point inside the set is exceeded by its
        # successor, which stays in the set; Omega itself lies outside
        for x in xs:
            if x.is_omega1:
                continue
            above = refute_chain_generic_candidate(x)
            if above is None or above.is_omega1 or not x < above:
                return False
        return True

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "space": self.space_ref,
            "directed_set": self.directed_set,
            "sampled_candidates": list(self.sampled_candidates),
        }

    @classmethod
    def from_json(cls, doc):
        return cls(doc["space"], _roundtrip_set(doc["directed_set"]),
                   tuple(doc.get("sampled_candidates", ())))


@_register
@dataclass(frozen=True)
class NotOmegaWFCertificate:
    space_ref: object
    family: object
    open_set: object
    member_witnesses: tuple = ()
    kind = "not-omega-well-filtered"

    def recheck(self) -> bool:
        if _is_finite_ref(self.space_ref):
            return self._recheck_finite()
        if self.space_ref == "cofinite-nat":
            return self._recheck_cofinite()
        return False

    def _recheck_finite(self) -> bool:
        from .power import compact_saturated

        space = _finite_space(self.space_ref)
        members = [int(m) for m in self.family]
        u = int(self.open_set)
        if u not in space.opens:
            return False
        ks = set(compact_saturated(space).members)
        if any(m not in ks for m in members):
            return False
        for a, b in zip(members, members[1:]):
            if b & ~a:
                return False
        inter = space.full
        for m in members:
            inter &= m
        if inter & ~u:
            return False
        witness = dict(self.member_witnesses)
        for i, m in enumerate(members):
            w = witness.get(i)
            if w is None or not m >> w & 1 or u >> w & 1:
                return False
        return True

    def _recheck_cofinite(self) -> bool:
        from .cofinite_space import (
            canonical_filtered_family,
            family_intersection_is_empty,
            family_is_descending,
        )

        if self.family != {"kind": "naturals-minus-initial-segments"}:
            return False
        if self.open_set != {"kind": "empty"}:
            return False
        if not family_is_descending(16) or not family_intersection_is_empty(24):
            return False
        for index, w in self.member_witnesses:
            member = canonical_filtered_family(int(index))
            if not member.contains(int(w)):
                return False
            # the open set is empty, so the witness certifies non-containment
        return True

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "space": self.space_ref,
            "family": self.family,
            "open_set": self.open_set,
            "member_witnesses": [list(p) for p in self.member_witnesses],
        }

    @classmethod
    def from_json(cls, doc):
        family = doc["family"]
        if isinstance(family, list):
            family = tuple(int(m) for m in family)
        return cls(
            doc["space"],
            family,
            _roundtrip_set(doc["open_set"]),
            tuple(tuple(p) for p in doc.get("member_witnesses", ())),
        )


@_register
@dataclass(frozen=True)
class NotFirstCountableCertificate:
    space_ref: object
    at: str
    witnesses: tuple
    candidates: tuple
    kind = "not-first-countable"

    def recheck(self) -> bool:
        from .fan_space import (
            FanPoint,
            diagonal_open_from_witnesses,
            fan_is_scott_open,
            fan_open_from_doc,
        )

        if self.space_ref != "fan-lattice-scott" or self.at != "top":
            return False
        diagonal = diagonal_open_from_witnesses(self.witnesses)
        if not (diagonal.has_top and fan_is_scott_open(diagonal)):
            return False
        if len(self.witnesses) != len(self.candidates):
            return False
        for (n, m), cand in zip(self.witnesses, self.candidates):
            u = fan_open_from_doc(cand)
            if not (u.has_top and fan_is_scott_open(u)):
                return False
            probe = FanPoint.pair(int(n), int(m))
            if not u.contains(probe):
                return False
            if diagonal.contains(probe):
                return False
        return True

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "space": self.space_ref,
            "at": self.at,
            "witnesses": [list(w) for w in self.witnesses],
            "candidates": [dict(c) for c in self.candidates],
        }

    @classmethod
    def from_json(cls, doc):
        return cls(
            doc["space"],
            doc["at"],
            tuple((int(n), int(m)) for n, m in doc["witnesses"]),
            tuple(doc["candidates"]),
        )


def _roundtrip_set(value):
    if isinstance(value, dict):
        return value
    return int(value)


def certificate_from_json(doc: dict):
    if not isinstance(doc, dict) or "kind" not in doc:
        raise ParseError("certificate documents carry a 'kind'")
    cls = CERT_KINDS.get(doc["kind"])
    if cls is None:
        raise ParseError(f"unknown certificate kind {doc['kind']!r}")
    try:
        return cls.from_json(doc)
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed certificate: {exc}") from exc


def recheck_certificate(cert) -> bool:
    try:
        return bool(cert.recheck())
    except WorkbenchError:
        return False
