"""The naturals under the cofinite topology, finitely presented.

Opens are complements of finite sets (plus the empty set); closed sets are
the finite sets plus the whole space. The space is T1, so its specialization
order is discrete. All checks are arithmetic on the finite descriptors.
"""

from dataclasses import dataclass

from .errors import WorkbenchError


@dataclass(frozen=True)
class CofiniteClosed:
    """Finite(S) or the whole space."""

    whole: bool = False
    finite: tuple[int, ...] = ()

    def __post_init__(self):
        if self.whole and self.finite:
            raise WorkbenchError("whole-space descriptor carries no finite part")
        if tuple(sorted(set(self.finite))) != self.finite:
            raise WorkbenchError("finite part must be sorted and duplicate-free")

    def contains(self, x: int) -> bool:
        return self.whole or x in self.finite


@dataclass(frozen=True)
class CofiniteOpen:
    """Complement of a finite set, or empty."""

    empty: bool = False
    excluded: tuple[int, ...] = ()

    def __post_init__(self):
        if self.empty and self.excluded:
            raise WorkbenchError("the empty open excludes everything already")
        if tuple(sorted(set(self.excluded))) != self.excluded:
            raise WorkbenchError("excluded set must be sorted and duplicate-free")

    def contains(self, x: int) -> bool:
        return not self.empty and x not in self.excluded

    def witness(self) -> int:
        """Smallest natural inside the open; opens here are never empty unless
        flagged so."""
        if self.empty:
            raise WorkbenchError("the empty open has no witness")
        x = 0
        while x in self.excluded:
            x += 1
        return x


def opens_intersect(a: CofiniteOpen, b: CofiniteOpen) -> int | None:
    """A common point of two nonempty opens; their exclusions are finite while
    the naturals are not, so one always exists."""
    if a.empty or b.empty:
        return None
    x = 0
    while x in a.excluded or x in b.excluded:
        x += 1
    return x


def whole_space_is_irreducible(sample_pairs) -> bool:
    """Any two nonempty opens intersect: verified on the sampled pairs and
    forced in general because two finite exclusion sets cannot cover the
    naturals."""
    for a, b in sample_pairs:
        if a.empty or b.empty:
            continue
        if opens_intersect(a, b) is None:
            return False
    return True


def point_closure(x: int) -> CofiniteClosed:
    """Closed sets are finite, so the closure of a point is itself: T1."""
    return CofiniteClosed(finite=(x,))


def refute_generic_candidate(x: int) -> int:
    """A point of the whole space outside the candidate's closure."""
    return x + 1


def canonical_filtered_family(index: int) -> CofiniteOpen:
    """The descending chain K_i = N minus {0..i-1} of compact saturated sets;
    every member is cofinite hence compact, and saturation is trivial in a T1
    space. The family is the spine of the cofinite counterexamples."""
    return CofiniteOpen(excluded=tuple(range(index)))


def family_is_descending(upto: int) -> bool:
    for i in range(upto):
        a = canonical_filtered_family(i)
        b = canonical_filtered_family(i + 1)
        # b's member set must sit inside a's
        if any(a.contains(x) != (x >= i) for x in range(upto + 2)):
            return False
        if any(b.contains(x) and not a.contains(x) for x in range(upto + 2)):
            return False
    return True


def family_intersection_is_empty(upto: int) -> bool:
    """Every natural n is expelled by the member of index n+1."""
    return all(not canonical_filtered_family(n + 1).contains(n) for n in range(upto))


def member_nonempty_witness(index: int) -> int:
    w = canonical_filtered_family(index).witness()
    if w != index:
        raise WorkbenchError("canonical member witness must be its index")
    return w


def whole_space_in_m_of_family(sample_closed) -> bool:
    """The whole space meets every member, and no proper closed set does:
    a finite set S misses the member excluding S. Verified per sample."""
    for closed in sample_closed:
        if closed.whole:
            continue
        member = CofiniteOpen(excluded=closed.finite)
        if any(member.contains(x) for x in closed.finite):
            return False
    return True


def is_d_space_verdict(sample_points=range(8)) -> bool:
    """T1 specialization order is discrete: directed sets are singletons, and
    a singleton's closure is generated by its point."""
    for x in sample_points:
        for y in sample_points:
            if x != y and point_closure(y).contains(x):
                return False
    return True


def whole_space_not_directed_closure(sample_points=range(8)) -> bool:
    """Directed sets are singletons with finite closures, so the whole space
    is no directed-set closure: the separating content of the example."""
    return all(not point_closure(x).whole for x in sample_points)


def cofinite_checks(sample_count: int = 16) -> dict:
    """The cofinite space's report: irreducibility of the whole space without
    a generic point, the empty-intersection filtered family, the whole space
    as a minimal meeting set (hence an omega-Rudin set), and d-spaceness."""
    sample_pairs = [
        (canonical_filtered_family(i), canonical_filtered_family(j))
        for i in range(sample_count)
        for j in range(0, sample_count, 3)
    ]
    sample_closed = [CofiniteClosed(finite=(i, i * 2 + 1)) for i in range(sample_count)]
    report = {
        "whole-irreducible": whole_space_is_irreducible(sample_pairs),
        "whole-not-point-closure": all(
            refute_generic_candidate(x) is not None
            and not point_closure(x).contains(refute_generic_candidate(x))
            for x in range(sample_count)
        ),
        "family-descending": family_is_descending(sample_count),
        "family-intersection-empty": family_intersection_is_empty(sample_count),
        "family-members-nonempty": all(
            member_nonempty_witness(i) == i for i in range(sample_count)
        ),
        "whole-in-m": whole_space_in_m_of_family(sample_closed),
        "d-space": is_d_space_verdict(),
        "whole-not-directed-closure": whole_space_not_directed_closure(),
    }
    report["rd-dc-separation"] = (
        report["whole-in-m"] and report["whole-not-directed-closure"]
    )
    return report


def not_sober_certificate():
    from .certificates import NotSoberCertificate

    return NotSoberCertificate(
        space_ref="cofinite-nat",
        closed_set={"kind": "whole-space"},
        sampled_candidates=tuple(str(i) for i in range(12)),
    )


def not_omega_wf_certificate():
    from .certificates import NotOmegaWFCertificate

    sampled = tuple(range(0, 24, 3))
    return NotOmegaWFCertificate(
        space_ref="cofinite-nat",
        family={"kind": "naturals-minus-initial-segments"},
        open_set={"kind": "empty"},
        member_witnesses=tuple((i, i) for i in sampled),
    )
