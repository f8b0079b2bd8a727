"""Finite T0 spaces and finite posets with exact topological primitives.

Point sets are int bitmasks over point indices 0..n-1. A space stores its
full open-set family canonically ordered, so equality and hashing are
structural. Everything here is immutable and pure.
"""

from dataclasses import dataclass, field
from functools import lru_cache

from .bitsets import bits, canonical, full_mask, submasks
from .caps import POINT_CAP, check as cap_check
from .errors import EmptySetError, NotT0Error, PointOutOfRangeError, WorkbenchError

TOPOLOGY_KINDS = ("alexandroff", "scott", "omega-scott", "lower", "lawson")


@dataclass(frozen=True)
class FinitePoset:
    """Partial order on 0..n-1. up[i] is the bitmask of {j : i <= j}."""

    n: int
    up: tuple[int, ...]

    def __post_init__(self):
        if len(self.up) != self.n:
            raise WorkbenchError("up must have one row per element")
        full = full_mask(self.n)
        for i, row in enumerate(self.up):
            if row & ~full:
                raise PointOutOfRangeError(f"row {i} leaves 0..{self.n - 1}")
            if not row >> i & 1:
                raise WorkbenchError(f"not reflexive at {i}")
        for i in range(self.n):
            for j in bits(self.up[i]):
                if i != j and self.up[j] >> i & 1:
                    raise WorkbenchError(f"not antisymmetric at {i},{j}")
                if self.up[j] & ~self.up[i]:
                    raise WorkbenchError(f"not transitive at {i},{j}")

    @classmethod
    def from_pairs(cls, n: int, pairs) -> "FinitePoset":
        """Build from (lower, upper) pairs; reflexive-transitive closure is taken."""
        up = [1 << i for i in range(n)]
        for lo, hi in pairs:
            if not (0 <= lo < n and 0 <= hi < n):
                raise PointOutOfRangeError(f"pair ({lo},{hi})")
            up[lo] |= 1 << hi
        changed = True
        while changed:
            changed = False
            for i in range(n):
                row = up[i]
                for j in bits(row):
                    row |= up[j]
                if row != up[i]:
                    up[i] = row
                    changed = True
        return cls(n, tuple(up))

    def leq(self, i: int, j: int) -> bool:
        return bool(self.up[i] >> j & 1)

    def down(self, i: int) -> int:
        return sum(1 << j for j in range(self.n) if self.up[j] >> i & 1)

    def up_closure(self, mask: int) -> int:
        out = 0
        for i in bits(mask):
            out |= self.up[i]
        return out

    def down_closure(self, mask: int) -> int:
        out = 0
        for j in range(self.n):
            if self.up[j] & mask:
                out |= 1 << j
        return out

    def is_up_set(self, mask: int) -> bool:
        return self.up_closure(mask) == mask

    def upper_bounds(self, mask: int) -> int:
        out = full_mask(self.n)
        for i in bits(mask):
            out &= self.up[i]
        return out

    def greatest(self, mask: int):
        """Greatest element of the subset, or None."""
        for i in bits(mask):
            if mask & ~self.down(i) == 0:
                return i
        return None

    def lub(self, mask: int):
        """Least upper bound of the subset in the whole poset, or None."""
        ubs = self.upper_bounds(mask)
        for i in bits(ubs):
            if ubs & ~self.up[i] == 0:
                return i
        return None


@dataclass(frozen=True)
class FiniteSpace:
    """Finite T0 space: point count plus canonically ordered open family."""

    n: int
    opens: tuple[int, ...]
    names: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        full = full_mask(self.n)
        if self.opens != canonical(self.opens):
            raise WorkbenchError("opens must be canonically ordered and duplicate-free")
        if 0 not in self.opens or full not in self.opens:
            raise WorkbenchError("opens must contain the empty set and the full set")
        for u in self.opens:
            if u & ~full:
                raise PointOutOfRangeError("open set leaves 0..n-1")
        if self.names is not None and len(self.names) != self.n:
            raise WorkbenchError("names must have one entry per point")

    @property
    def full(self) -> int:
        return full_mask(self.n)

    def point_name(self, i: int) -> str:
        return self.names[i] if self.names else f"p{i}"

    def validate(self) -> None:
        """Full validation: closure under pairwise union/intersection and T0."""
        opens = set(self.opens)
        for u in self.opens:
            for v in self.opens:
                if u | v not in opens or u & v not in opens:
                    raise WorkbenchError("opens not closed under union/intersection")
        seen = {}
        for x in range(self.n):
            key = tuple(u for u in self.opens if u >> x & 1)
            if key in seen:
                raise NotT0Error(
                    f"points {self.point_name(seen[key])} and {self.point_name(x)} "
                    "are topologically indistinguishable"
                )
            seen[key] = x


@dataclass(frozen=True)
class SetFamily:
    """A canonically ordered family of point sets over a fixed base space."""

    base: FiniteSpace
    members: tuple[int, ...]

    def __post_init__(self):
        if self.members != canonical(self.members):
            raise WorkbenchError("family members must be canonically ordered")
        for m in self.members:
            if m & ~self.base.full:
                raise PointOutOfRangeError("family member leaves the base space")

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.members)

    def __contains__(self, mask: int):
        return mask in self.members


def topology_from_min_nbhds(n: int, min_nbhds) -> tuple[int, ...]:
    """All unions of the given minimal neighborhoods, plus the empty set.

    Every open of the generated topology is the union of the minimal
    neighborhoods of its points, so the closure under arbitrary unions of the
    finite intersections of a subbasis is exactly this set.
    """
    gens = sorted(set(min_nbhds))
    seen = {0}
    frontier = [0]
    while frontier:
        m = frontier.pop()
        for g in gens:
            u = m | g
            if u not in seen:
                seen.add(u)
                frontier.append(u)
    return canonical(seen)


def generate_topology(n: int, subbasis, names=None) -> FiniteSpace:
    """Smallest topology containing the subbasis; rejects non-T0 results."""
    cap_check(n, POINT_CAP, "generate_topology point count")
    if n <= 0:
        raise WorkbenchError("point count must be positive")
    full = full_mask(n)
    sub = list(subbasis)
    for s in sub:
        if s & ~full:
            raise PointOutOfRangeError(f"subbasis member {s:#x} leaves 0..{n - 1}")
    min_nbhds = []
    for x in range(n):
        m = full
        for s in sub:
            if s >> x & 1:
                m &= s
        min_nbhds.append(m)
    if len(set(min_nbhds)) != n:
        by_nbhd = {}
        for x, m in enumerate(min_nbhds):
            if m in by_nbhd:
                raise NotT0Error(f"points {by_nbhd[m]} and {x} are indistinguishable")
            by_nbhd[m] = x
    opens = topology_from_min_nbhds(n, min_nbhds)
    if full not in opens:
        opens = canonical(opens + (full,))
    space = FiniteSpace(n, opens, tuple(names) if names else None)
    space.validate()
    return space


@lru_cache(maxsize=None)
def closed_sets(space: FiniteSpace) -> tuple[int, ...]:
    return canonical(space.full ^ u for u in space.opens)


@lru_cache(maxsize=None)
def min_neighborhoods(space: FiniteSpace) -> tuple[int, ...]:
    """Per point, the intersection of all opens containing it (itself open)."""
    out = []
    for x in range(space.n):
        m = space.full
        for u in space.opens:
            if u >> x & 1:
                m &= u
        out.append(m)
    return tuple(out)


@lru_cache(maxsize=None)
def point_closures(space: FiniteSpace) -> tuple[int, ...]:
    out = []
    for x in range(space.n):
        c = space.full
        for f in closed_sets(space):
            if f >> x & 1:
                c &= f
        out.append(c)
    return tuple(out)


def closure(space: FiniteSpace, mask: int) -> int:
    """Least closed superset."""
    _check_range(space, mask)
    out = space.full
    for f in closed_sets(space):
        if mask & ~f == 0:
            out &= f
    return out


def saturation(space: FiniteSpace, mask: int) -> int:
    """Intersection of all opens containing the set (its up-set)."""
    _check_range(space, mask)
    out = space.full
    for u in space.opens:
        if mask & ~u == 0:
            out &= u
    return out


def interior(space: FiniteSpace, mask: int) -> int:
    """Greatest open subset."""
    _check_range(space, mask)
    out = 0
    for u in space.opens:
        if u & ~mask == 0:
            out |= u
    return out


def _check_range(space: FiniteSpace, mask: int) -> None:
    if mask & ~space.full:
        raise PointOutOfRangeError(f"set {mask:#x} leaves the space")


@lru_cache(maxsize=None)
def specialization_order(space: FiniteSpace) -> FinitePoset:
    """x <= y iff every open containing x contains y (iff x lies in cl{y})."""
    return FinitePoset(space.n, min_neighborhoods(space))


def poset_topology(poset: FinitePoset, kind: str) -> FiniteSpace:
    """Topology of the given kind on a finite poset.

    On finite posets every directed set has a maximum, so the Scott and
    omega-Scott opens are exactly the up-sets; `scott_opens_by_definition`
    is the independent oracle for that collapse.
    """
    cap_check(poset.n, POINT_CAP, "poset_topology point count")
    if kind not in TOPOLOGY_KINDS:
        raise WorkbenchError(f"unknown topology kind {kind!r}")
    if kind in ("alexandroff", "scott", "omega-scott"):
        opens = canonical(
            m for m in submasks(full_mask(poset.n)) if poset.is_up_set(m)
        )
        return FiniteSpace(poset.n, opens)
    if kind == "lower":
        sub = [full_mask(poset.n) ^ poset.up[i] for i in range(poset.n)]
        return generate_topology(poset.n, sub)
    # lawson: join of scott and lower
    scott = poset_topology(poset, "scott")
    sub = list(scott.opens) + [full_mask(poset.n) ^ poset.up[i] for i in range(poset.n)]
    return generate_topology(poset.n, sub)


def scott_opens_by_definition(poset: FinitePoset) -> tuple[int, ...]:
    """Scott opens computed from the directed-sup clause, not the up-set collapse."""
    out = []
    directed = directed_subsets_of_poset(poset)
    for m in submasks(full_mask(poset.n)):
        if not poset.is_up_set(m):
            continue
        ok = True
        for d in directed:
            sup = poset.lub(d)
            if sup is not None and m >> sup & 1 and d & m == 0:
                ok = False
                break
        if ok:
            out.append(m)
    return canonical(out)


def directed_subsets_of_poset(poset: FinitePoset) -> tuple[int, ...]:
    ubs = [[poset.upper_bounds((1 << i) | (1 << j)) for j in range(poset.n)]
           for i in range(poset.n)]
    out = []
    for m in submasks(full_mask(poset.n)):
        if m == 0:
            continue
        members = list(bits(m))
        ok = True
        for a in members:
            row = ubs[a]
            for b in members:
                if not row[b] & m:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(m)
    return canonical(out)


def is_directed(space: FiniteSpace, mask: int) -> bool:
    """Directedness in the specialization order; empty sets are not directed."""
    _check_range(space, mask)
    if mask == 0:
        return False
    poset = specialization_order(space)
    members = list(bits(mask))
    for a in members:
        for b in members:
            if not poset.upper_bounds((1 << a) | (1 << b)) & mask:
                return False
    return True


@lru_cache(maxsize=None)
def directed_subsets(space: FiniteSpace) -> tuple[int, ...]:
    """All nonempty directed subsets (in the specialization order)."""
    return directed_subsets_of_poset(specialization_order(space))


def directed_subsets_with_maxima(space: FiniteSpace) -> tuple[tuple[int, int], ...]:
    """Each directed subset with its greatest element, which finite
    directedness guarantees."""
    poset = specialization_order(space)
    out = []
    for d in directed_subsets(space):
        top = poset.greatest(d)
        if top is None:
            raise WorkbenchError("finite directed set without a maximum")
        out.append((d, top))
    return tuple(out)


def is_irreducible(space: FiniteSpace, mask: int) -> bool:
    """Definition test over all pairs of closed sets."""
    _check_range(space, mask)
    if mask == 0:
        raise EmptySetError("irreducibility is only defined for nonempty sets")
    closed = closed_sets(space)
    for f1 in closed:
        if mask & ~f1 == 0:
            continue
        for f2 in closed:
            if mask & ~(f1 | f2) == 0 and mask & ~f2:
                return False
    return True


def _irreducible_by_base(space: FiniteSpace, mask: int, min_nbhds) -> bool:
    # Base-pair form of the same definition: the minimal neighborhoods form a
    # base, and irreducibility is checkable on base pairs. Cross-validated
    # against is_irreducible in the test suite.
    if mask == 0:
        return False
    touching = [m for x, m in enumerate(min_nbhds) if mask >> x & 1]
    touching = sorted(set(touching))
    for i, b1 in enumerate(touching):
        for b2 in touching[i + 1:]:
            if not b1 & b2 & mask:
                return False
    return True


def irreducible_via_base(space: FiniteSpace, mask: int) -> bool:
    """Irreducibility via base pairs; same verdict as is_irreducible, cheaper
    on spaces with large open families."""
    _check_range(space, mask)
    if mask == 0:
        raise EmptySetError("irreducibility is only defined for nonempty sets")
    return _irreducible_by_base(space, mask, min_neighborhoods(space))


@lru_cache(maxsize=None)
def irreducible_sets(space: FiniteSpace) -> SetFamily:
    """All irreducible closed subsets (Irr_c)."""
    mn = min_neighborhoods(space)
    members = [f for f in closed_sets(space) if f and _irreducible_by_base(space, f, mn)]
    return SetFamily(space, canonical(members))


def irreducible_subsets(space: FiniteSpace) -> tuple[int, ...]:
    """Every irreducible subset, closed or not. Exponential; for small spaces."""
    mn = min_neighborhoods(space)
    return canonical(
        m for m in submasks(space.full) if m and _irreducible_by_base(space, m, mn)
    )


@lru_cache(maxsize=None)
def closure_of_points_family(space: FiniteSpace) -> SetFamily:
    """S_c: the family of point closures."""
    return SetFamily(space, canonical(point_closures(space)))


@dataclass(frozen=True)
class SoberReport:
    verdict: bool
    generic_points: tuple[tuple[int, int], ...]  # (closed irreducible, its point)


@lru_cache(maxsize=None)
def sober_check(space: FiniteSpace) -> SoberReport:
    """For each closed irreducible set, the unique point whose closure it is."""
    cls = point_closures(space)
    pairs = []
    ok = True
    for a in irreducible_sets(space).members:
        generators = [x for x in range(space.n) if cls[x] == a]
        if len(generators) == 1:
            pairs.append((a, generators[0]))
        else:
            ok = False
    return SoberReport(ok, tuple(pairs))


def is_omega_noetherian(poset: FinitePoset) -> bool:
    """Every (countable) directed subset has a largest element, by enumeration."""
    for d in directed_subsets_of_poset(poset):
        if poset.greatest(d) is None:
            return False
    return True


def is_omega_compact(poset: FinitePoset, x: int) -> bool:
    """x << x for countable directed sets, by enumeration."""
    if not 0 <= x < poset.n:
        raise PointOutOfRangeError(f"element {x}")
    for d in directed_subsets_of_poset(poset):
        sup = poset.lub(d)
        if sup is None or not poset.leq(x, sup):
            continue
        if not any(poset.leq(x, e) for e in bits(d)):
            return False
    return True


def family(space: FiniteSpace, members) -> SetFamily:
    return SetFamily(space, canonical(members))


def set_repr(space: FiniteSpace, mask: int) -> str:
    return "{" + ",".join(space.point_name(i) for i in bits(mask)) + "}"
