"""The complete chain [0, Omega] under the Scott or omega-Scott topology.

Opens are rays [lo, Omega]; a ray is encoded by its left endpoint. Closed
sets are the complements [0, lo), so the space's decision procedures are
endpoint arithmetic. The omega-Scott topology differs from the Scott one in
exactly one family of rays: those whose endpoint has uncountable cofinality.
"""

from dataclasses import dataclass

from .errors import IllFormedFamilyError, NotCoveredError, WorkbenchError
from .ordinals import Ordinal, ZERO


@dataclass(frozen=True)
class ChainRay:
    """The up-set [lo, Omega] of the chain."""

    lo: Ordinal


def ray_is_scott_open(ray: ChainRay) -> bool:
    """Scott-open iff no directed set without members in the ray can reach its
    endpoint: exactly the non-limit endpoints."""
    return not ray.lo.is_limit()


def ray_is_omega_scott_open(ray: ChainRay) -> bool:
    """Countable directed sets cannot reach an endpoint of uncountable
    cofinality either, so Omega joins the admissible endpoints."""
    return not ray.lo.is_limit() or ray.lo.cofinality() == "omega1"


def chain_is_scott_open(ray: ChainRay) -> bool:
    return ray_is_scott_open(ray)


def chain_is_omega_scott_open(ray: ChainRay) -> bool:
    return ray_is_omega_scott_open(ray)


@dataclass(frozen=True)
class ConstantTailRayFamily:
    """Countable descending ray family that is eventually constant: entry i is
    rays[min(i, len-1)]. Descending means the endpoints never decrease."""

    rays: tuple[ChainRay, ...]

    def __post_init__(self):
        if not self.rays:
            raise IllFormedFamilyError("family must be nonempty")
        for a, b in zip(self.rays, self.rays[1:]):
            if b.lo < a.lo:
                raise IllFormedFamilyError("endpoints must be non-decreasing")

    def endpoint(self, i: int) -> Ordinal:
        return self.rays[min(i, len(self.rays) - 1)].lo

    def sup_endpoint(self) -> Ordinal:
        return self.rays[-1].lo

    def sup_attained(self) -> bool:
        return True


@dataclass(frozen=True)
class FundamentalTailRayFamily:
    """Countable descending ray family whose endpoints follow the canonical
    fundamental sequence of a limit below Omega after a finite prefix.

    A descriptor claiming the tail converges to Omega is rejected: that is
    the regularity axiom of the ordinal layer.
    """

    prefix: tuple[ChainRay, ...]
    limit: Ordinal

    def __post_init__(self):
        if self.limit.is_omega1:
            raise IllFormedFamilyError(
                "no countable family of endpoints has supremum Omega"
            )
        if not self.limit.is_limit():
            raise IllFormedFamilyError("tail descriptor needs a limit ordinal")
        if self.limit.cofinality() != "omega":
            raise IllFormedFamilyError("tail limit must have countable cofinality")
        for a, b in zip(self.prefix, self.prefix[1:]):
            if b.lo < a.lo:
                raise IllFormedFamilyError("endpoints must be non-decreasing")
        if self.prefix and self.limit < self.prefix[-1].lo:
            raise IllFormedFamilyError("prefix endpoints must stay below the limit")

    def endpoint(self, i: int) -> Ordinal:
        if i < len(self.prefix):
            return self.prefix[i].lo
        return self.limit.fundamental(i - len(self.prefix))

    def sup_endpoint(self) -> Ordinal:
        return self.limit

    def sup_attained(self) -> bool:
        return False


def family_intersection(family) -> ChainRay:
    """Intersection of the descending ray family: the ray at the endpoint sup."""
    return ChainRay(family.sup_endpoint())


def least_fundamental_index(limit: Ordinal, target: Ordinal) -> int:
    """Least n with the n-th fundamental-sequence member of the limit at or
    above the target; requires target strictly below the limit."""
    if not target < limit:
        raise WorkbenchError("target must lie strictly below the limit")
    p = limit.fundamental(0)
    if target <= p:
        return 0
    delta = p.left_sub(target)
    step_exp = limit.terms[-1][0] - 1
    lead_exp, lead_coeff = delta.terms[0]
    if lead_exp < step_exp:
        n = 1
    elif len(delta.terms) == 1:
        n = lead_coeff
    else:
        n = lead_coeff + 1
    assert target <= limit.fundamental(n)
    assert n == 0 or limit.fundamental(n - 1) < target
    return n


def chain_omega_wf_select(family, u: ChainRay) -> int:
    """Index of a family member contained in u, assuming the family
    intersection is; this realizes the omega-well-filtered implication for
    representable families.

    Raises NotCoveredError when the intersection is not inside u.
    """
    if not ray_is_omega_scott_open(u):
        raise WorkbenchError("u must be omega-Scott open")
    sup = family.sup_endpoint()
    if sup < u.lo:
        raise NotCoveredError("family intersection is not contained in u")
    if family.sup_attained():
        i = 0
        while family.endpoint(i) < u.lo:
            i += 1
        return i
    # sup is a limit of countable cofinality; u's endpoint lies strictly
    # below it (the limit itself is not an admissible open endpoint and
    # Omega exceeds the sup), so the tail passes u.lo at a computable index
    for i, ray in enumerate(family.prefix):
        if u.lo <= ray.lo:
            return i
    return len(family.prefix) + least_fundamental_index(family.limit, u.lo)


@dataclass(frozen=True)
class ChainBase:
    """Countable neighborhood base at a chain point: explicit rays, or the
    successor rays over the point's fundamental sequence."""

    at: Ordinal
    kind: str  # "principal" | "fundamental-succ"

    def element(self, n: int) -> ChainRay:
        if self.kind == "principal":
            return ChainRay(self.at)
        return ChainRay(self.at.fundamental(n).succ())


def chain_first_countable_base(x: Ordinal) -> ChainBase:
    """A countable base at x in the omega-Scott chain: the principal ray when
    x is not a limit of countable cofinality, successor rays over the
    fundamental sequence otherwise."""
    if x.cofinality() in ("1", "omega1"):
        base = ChainBase(x, "principal")
        if not ray_is_omega_scott_open(base.element(0)):
            raise WorkbenchError("principal ray unexpectedly not open")
        return base
    return ChainBase(x, "fundamental-succ")


def verify_chain_base(x: Ordinal, base: ChainBase, sample_opens, depth: int = 16) -> bool:
    """Every checked base element is an open ray containing x, and every
    sampled open ray containing x contains some base element."""
    count = 1 if base.kind == "principal" else depth
    for n in range(count):
        el = base.element(n)
        if not ray_is_omega_scott_open(el):
            return False
        if x < el.lo:
            return False
    for ray in sample_opens:
        if not ray_is_omega_scott_open(ray) or x < ray.lo:
            continue
        if base.kind == "principal":
            if not ray.lo <= base.element(0).lo:
                return False
            continue
        # successor rays over the fundamental sequence of x: the element at
        # the computed index is the first to fit inside the sampled ray
        if ray.lo == ZERO:
            continue
        n = least_fundamental_index(x, ray.lo)
        el = base.element(n)
        if not (ray.lo <= el.lo and x >= el.lo and ray_is_omega_scott_open(el)):
            return False
    return True


def chain_not_dspace_certificate():
    """Directed set [0, Omega): closed in the omega-Scott topology, yet no
    point generates its closure; each candidate is refuted by its successor."""
    from .certificates import NotDSpaceCertificate

    samples = ("0", "1", "w", "w*5", "w^2+3", "w^3*2+w*4+7")
    return NotDSpaceCertificate(
        space_ref="chain-omega1-omega-scott",
        directed_set={"kind": "ordinals-below-omega1"},
        sampled_candidates=samples,
    )


def chain_not_sober_certificate():
    """[0, Omega) is irreducible closed (any two open rays meeting it
    intersect inside it) with no generic point."""
    from .certificates import NotSoberCertificate

    samples = ("0", "5", "w", "w^2", "w^2*4+w", "w^3+1")
    return NotSoberCertificate(
        space_ref="chain-omega1-omega-scott",
        closed_set={"kind": "ordinals-below-omega1"},
        sampled_candidates=samples,
    )


def refute_chain_generic_candidate(x: Ordinal) -> Ordinal | None:
    """A member of [0, Omega) above the candidate, or None if the candidate
    cannot even lie in the set."""
    if x.is_omega1:
        return None
    return x.succ()
