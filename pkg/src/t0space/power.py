"""Smyth and Hoare power spaces, their embeddings, and compact-family checks.

Power-space points are indexed: an IndexedSpace pairs a FiniteSpace with the
list of base-space subsets its points denote, so all topology computation
goes through integer indices rather than nested set comparisons.
"""

from dataclasses import dataclass
from functools import lru_cache

from .bitsets import bits, canonical, full_mask, submasks
from .caps import PRODUCT_CAP, SMYTH_MEMBER_CAP, UNION_MAP_CAP, check as cap_check
from .core import (
    FiniteSpace,
    SetFamily,
    closed_sets,
    closure,
    specialization_order,
    irreducible_sets,
    is_irreducible,
    min_neighborhoods,
    point_closures,
    topology_from_min_nbhds,
)
from .errors import (
    EmptySetError,
    NotIrreducibleFamilyError,
    PointOutOfRangeError,
    WorkbenchError,
)
from .maps import ContinuousMap


@dataclass(frozen=True)
class IndexedSpace:
    """A finite space whose points denote subsets of a base space."""

    space: FiniteSpace
    base: FiniteSpace
    elems: tuple[int, ...]

    def __post_init__(self):
        if len(self.elems) != self.space.n:
            raise WorkbenchError("one element per point required")
        if len(set(self.elems)) != len(self.elems):
            raise WorkbenchError("indexed elements must be distinct")

    def index_of(self, mask: int) -> int:
        return self.elems.index(mask)

    def member_mask(self, masks) -> int:
        """Point-set of this space selecting the given base subsets."""
        out = 0
        for m in masks:
            out |= 1 << self.elems.index(m)
        return out


@lru_cache(maxsize=None)
def compact_saturated(space: FiniteSpace) -> SetFamily:
    """K(X): on a finite space, the nonempty up-sets of the specialization order."""
    poset = specialization_order(space)
    members = [m for m in submasks(space.full) if m and poset.is_up_set(m)]
    return SetFamily(space, canonical(members))


def is_supercompact(space: FiniteSpace, k: int) -> bool:
    """Every open cover of k has a single member covering k.

    The quantifier over covers reduces exactly: k fails iff the union of all
    opens not containing k still covers k.
    """
    if k == 0:
        raise EmptySetError("supercompactness is for nonempty sets")
    avoid = 0
    for u in space.opens:
        if k & ~u:
            avoid |= u
    return bool(k & ~avoid)


@lru_cache(maxsize=None)
def smyth_space(space: FiniteSpace) -> IndexedSpace:
    """P_S(X): K(X) under the topology generated by the base {box(U)}."""
    ks = compact_saturated(space).members
    cap_check(len(ks), SMYTH_MEMBER_CAP, "smyth_space member count")
    nk = len(ks)
    base_sets = {box_mask(ks, u) for u in space.opens}
    min_nbhds = []
    for i in range(nk):
        m = full_mask(nk)
        for b in base_sets:
            if b >> i & 1:
                m &= b
        min_nbhds.append(m)
    opens = topology_from_min_nbhds(nk, base_sets | {full_mask(nk)})
    names = tuple("K" + str(i) for i in range(nk))
    ps = FiniteSpace(nk, opens, names)
    ps.validate()
    # the specialization order must equal the Smyth preorder (reverse inclusion)
    order = specialization_order(ps)
    for i in range(nk):
        for j in range(nk):
            if order.leq(i, j) != (ks[j] & ~ks[i] == 0):
                raise WorkbenchError("Smyth specialization mismatch")
    return IndexedSpace(ps, space, ks)


def box_mask(members, u: int) -> int:
    """Indices of members contained in u."""
    out = 0
    for i, k in enumerate(members):
        if k & ~u == 0:
            out |= 1 << i
    return out


def diamond_mask(members, u: int) -> int:
    """Indices of members meeting u."""
    out = 0
    for i, k in enumerate(members):
        if k & u:
            out |= 1 << i
    return out


def xi_map(space: FiniteSpace, ps: IndexedSpace | None = None) -> ContinuousMap:
    """x -> up(x), the canonical embedding into the Smyth space."""
    if ps is None:
        ps = smyth_space(space)
    poset = specialization_order(space)
    table = tuple(ps.index_of(poset.up[x]) for x in range(space.n))
    return ContinuousMap(space, ps.space, table)


def hoare_space(space: FiniteSpace, members) -> IndexedSpace:
    """P_H(G) for a family G of irreducible closed sets: opens are the diamonds."""
    fam = members.members if isinstance(members, SetFamily) else canonical(members)
    closed = set(closed_sets(space))
    for m in fam:
        if m not in closed or not is_irreducible(space, m):
            raise NotIrreducibleFamilyError(
                f"family member {m:#x} is not an irreducible closed set"
            )
    ng = len(fam)
    opens = canonical(diamond_mask(fam, u) for u in space.opens)
    names = tuple("A" + str(i) for i in range(ng))
    hs = FiniteSpace(ng, opens, names)
    hs.validate()
    return IndexedSpace(hs, space, fam)


def eta_map(space: FiniteSpace, hs: IndexedSpace) -> ContinuousMap:
    """x -> cl{x} into a Hoare space whose family contains every point closure."""
    cls = point_closures(space)
    for c in cls:
        if c not in hs.elems:
            raise WorkbenchError("family must contain all point closures for eta")
    table = tuple(hs.index_of(cls[x]) for x in range(space.n))
    return ContinuousMap(space, hs.space, table)


def family_irreducible_in_smyth(space: FiniteSpace, members) -> bool:
    """Whether a family of compact saturated sets is irreducible in P_S(X).

    Checked on base pairs: box(U) and box(V) meeting the family forces
    box(U & V) to meet it. Base pairs suffice because the boxes form a base
    closed under intersection.
    """
    fam = tuple(members)
    if not fam:
        return False
    ks = compact_saturated(space).members
    kset = set(ks)
    for m in fam:
        if m not in kset:
            raise PointOutOfRangeError("family member is not compact saturated")
    for u in space.opens:
        if not any(k & ~u == 0 for k in fam):
            continue
        for v in space.opens:
            if not any(k & ~v == 0 for k in fam):
                continue
            if not any(k & ~(u & v) == 0 for k in fam):
                return False
    return True


def check_intersection_closure(space: FiniteSpace, members) -> bool:
    """Intersection of a compact family equals intersection of its Smyth closure."""
    fam = tuple(members)
    if not fam:
        raise EmptySetError("family must be nonempty")
    ps = smyth_space(space)
    sel = ps.member_mask(fam)
    closed_sel = closure(ps.space, sel)
    inter = space.full
    for m in fam:
        inter &= m
    inter_closure = space.full
    for i in bits(closed_sel):
        inter_closure &= ps.elems[i]
    return inter == inter_closure


def check_sup_is_intersection(space: FiniteSpace, members) -> bool:
    """Sup in (K(X), Smyth order) exists iff the intersection is compact saturated,
    and then the two coincide. Both sides computed independently."""
    fam = tuple(members)
    if not fam:
        raise EmptySetError("family must be nonempty")
    ks = compact_saturated(space).members
    inter = space.full
    for m in fam:
        inter &= m
    rhs = inter if inter in ks else None
    # brute-force least upper bound under the Smyth order (reverse inclusion)
    ubs = [k for k in ks if all(k & ~m == 0 for m in fam)]
    lub = None
    for k in ubs:
        if all(u & ~k == 0 for u in ubs):
            lub = k
            break
    return lub == rhs


def union_map_check(space: FiniteSpace) -> bool:
    """Unioning a compact family of compact sets lands in K(X), and the union
    map P_S(P_S(X)) -> P_S(X) is continuous.

    Openness of each base-box preimage is verified by a per-point neighborhood
    search over boxes of P_S(X)-opens; the double power space topology is
    never materialized.
    """
    cap_check(space.n, UNION_MAP_CAP, "union_map_check point count")
    ps = smyth_space(space)
    ks = ps.elems
    kset = set(ks)
    outer_poset = specialization_order(ps.space)
    outer_members = [
        m for m in submasks(full_mask(ps.space.n)) if m and outer_poset.is_up_set(m)
    ]
    unions = {}
    for fam_mask in outer_members:
        u = 0
        for i in bits(fam_mask):
            u |= ks[i]
        if u not in kset:
            return False
        unions[fam_mask] = u
    # members of the double-power base box(v), per open v of P_S(X)
    boxed = {
        v: [fm for fm in outer_members if fm & ~v == 0] for v in ps.space.opens
    }
    for u in space.opens:
        pre = {fm for fm in outer_members if unions[fm] & ~u == 0}
        for fm in pre:
            found = False
            for v in ps.space.opens:
                if fm & ~v == 0 and all(other in pre for other in boxed[v]):
                    found = True
                    break
            if not found:
                return False
    return True


@dataclass(frozen=True)
class ProductSpace:
    """Product of finite spaces with projection maps."""

    space: FiniteSpace
    factors: tuple[FiniteSpace, ...]
    projections: tuple[ContinuousMap, ...]

    def coords(self, point: int) -> tuple[int, ...]:
        out = []
        rem = point
        for f in reversed(self.factors):
            out.append(rem % f.n)
            rem //= f.n
        return tuple(reversed(out))

    def point(self, coords) -> int:
        idx = 0
        for f, c in zip(self.factors, coords):
            idx = idx * f.n + c
        return idx

    def project(self, mask: int, i: int) -> int:
        return self.projections[i].image(mask)

    def box(self, factor_masks) -> int:
        """Product set of per-factor masks."""
        out = 0
        for p in range(self.space.n):
            cs = self.coords(p)
            if all(fm >> c & 1 for fm, c in zip(factor_masks, cs)):
                out |= 1 << p
        return out


def product_space(factors) -> ProductSpace:
    factors = tuple(factors)
    if not factors:
        raise WorkbenchError("product needs at least one factor")
    total = 1
    for f in factors:
        total *= f.n
    cap_check(total, PRODUCT_CAP, "product point count")
    strides = []
    acc = 1
    for f in reversed(factors):
        strides.append(acc)
        acc *= f.n
    strides = list(reversed(strides))

    def point(coords):
        return sum(c * s for c, s in zip(coords, strides))

    def coords(p):
        out = []
        for f, s in zip(factors, strides):
            out.append((p // s) % f.n)
        return tuple(out)

    mn_factors = [min_neighborhoods(f) for f in factors]
    min_nbhds = []
    for p in range(total):
        cs = coords(p)
        m = 0
        for q in range(total):
            qs = coords(q)
            if all(mn_factors[i][cs[i]] >> qs[i] & 1 for i in range(len(factors))):
                m |= 1 << q
        min_nbhds.append(m)
    opens = topology_from_min_nbhds(total, min_nbhds)
    names = tuple(
        "(" + ",".join(factors[i].point_name(coords(p)[i]) for i in range(len(factors))) + ")"
        for p in range(total)
    )
    space = FiniteSpace(total, opens, names)
    space.validate()
    projections = []
    for i, f in enumerate(factors):
        table = tuple(coords(p)[i] for p in range(total))
        projections.append(ContinuousMap(space, f, table))
    return ProductSpace(space, factors, projections)


def product_checks(prod: ProductSpace, subset: int | None = None) -> dict[str, bool]:
    """Product lemmas: closure factorization for irreducible sets, componentwise
    irreducibility of product sets, and factorization of closed irreducibles."""
    from .core import irreducible_subsets, irreducible_via_base

    report = {}
    # closure of an irreducible set is the product of the factor closures
    if subset is not None:
        candidates = [subset] if subset and irreducible_via_base(prod.space, subset) else []
    else:
        candidates = list(irreducible_subsets(prod.space))
    ok = True
    for a in candidates:
        cl = closure(prod.space, a)
        pieces = [closure(f, prod.project(a, i)) for i, f in enumerate(prod.factors)]
        if cl != prod.box(pieces):
            ok = False
            break
    report["closure-factorizes"] = ok

    # a product of nonempty sets is irreducible iff every factor is
    ok = True
    for factor_masks in _factor_mask_tuples(prod):
        boxed = prod.box(factor_masks)
        lhs = bool(boxed) and irreducible_via_base(prod.space, boxed)
        rhs = all(irreducible_via_base(f, m) for f, m in zip(prod.factors, factor_masks))
        if lhs != rhs:
            ok = False
            break
    report["product-irreducible-componentwise"] = ok

    # closed irreducibles factor exactly, with closed irreducible factors
    ok = True
    for a in irreducible_sets(prod.space).members:
        pieces = [prod.project(a, i) for i in range(len(prod.factors))]
        if a != prod.box(pieces):
            ok = False
            break
        if any(m not in irreducible_sets(f).members
               for f, m in zip(prod.factors, pieces)):
            ok = False
            break
    report["closed-irreducible-factors"] = ok
    return report


def _factor_mask_tuples(prod: ProductSpace):
    def rec(i):
        if i == len(prod.factors):
            yield ()
            return
        for rest in rec(i + 1):
            for m in range(1, prod.factors[i].full + 1):
                yield (m,) + rest

    yield from rec(0)
