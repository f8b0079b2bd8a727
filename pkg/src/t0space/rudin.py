"""Topological Rudin machinery: M/m families, minimal-set search, and the
omega-Rudin / omega-well-filtered-determined set families.

The search descends the closed-set lattice; the test suite holds the
independent enumerate-filter-minimize oracle it is compared against.
"""

from dataclasses import dataclass

from .bitsets import bits, canonical
from .core import (
    FiniteSpace,
    SetFamily,
    closed_sets,
    closure,
    directed_subsets,
    irreducible_sets,
    is_irreducible,
    point_closures,
)
from .classify import is_omega_well_filtered
from .errors import (
    EmptySetError,
    FamilyNotIrreducibleError,
    PremiseViolatedError,
    WorkbenchError,
)
from .maps import ContinuousMap
from .power import compact_saturated, family_irreducible_in_smyth


@dataclass(frozen=True)
class RudinProblem:
    base: FiniteSpace
    family: tuple[int, ...]
    closed_set: int


@dataclass(frozen=True)
class RudinSolution:
    minimal_members: tuple[int, ...]
    irreducible_flags: tuple[bool, ...]


def M_family(space: FiniteSpace, members) -> SetFamily:
    """All closed sets meeting every member of the compact family."""
    fam = tuple(members)
    ks = set(compact_saturated(space).members)
    for m in fam:
        if m not in ks:
            raise WorkbenchError("family member is not compact saturated")
    hit = [c for c in closed_sets(space) if all(c & k for k in fam)]
    return SetFamily(space, canonical(hit))


def m_family(space: FiniteSpace, members) -> SetFamily:
    """Inclusion-minimal members of M."""
    hits = M_family(space, members).members
    minimal = [
        a for a in hits if not any(b != a and b & ~a == 0 for b in hits)
    ]
    return SetFamily(space, canonical(minimal))


def rudin_search(problem: RudinProblem) -> RudinSolution:
    """All inclusion-minimal closed subsets of the problem's closed set that
    meet every family member, found by descending the closed-set lattice;
    at least one is guaranteed irreducible and all are flagged."""
    space = problem.base
    fam = tuple(problem.family)
    c = problem.closed_set
    if not fam:
        raise EmptySetError("family must be nonempty")
    ks = set(compact_saturated(space).members)
    for m in fam:
        if m not in ks:
            raise WorkbenchError("family member is not compact saturated")
    if c not in closed_sets(space):
        raise PremiseViolatedError("C must be closed")
    if not all(c & k for k in fam):
        raise PremiseViolatedError("C must meet every family member")
    if not family_irreducible_in_smyth(space, fam):
        raise FamilyNotIrreducibleError(
            "family is not irreducible in the Smyth power space"
        )

    qualifying = [
        b for b in closed_sets(space) if b & ~c == 0 and all(b & k for k in fam)
    ]
    below = {b: [b2 for b2 in qualifying if b2 != b and b2 & ~b == 0]
             for b in qualifying}
    minimal = []
    seen = set()
    stack = [c]
    while stack:
        b = stack.pop()
        if b in seen:
            continue
        seen.add(b)
        children = below[b]
        if not children:
            minimal.append(b)
        else:
            stack.extend(children)
    members = canonical(minimal)
    flags = tuple(is_irreducible(space, m) for m in members)
    if not any(flags):
        raise WorkbenchError("no minimal member is irreducible; lemma violated")
    return RudinSolution(members, flags)


def rd_omega(space: FiniteSpace) -> SetFamily:
    """Closed sets minimal over some countable filtered compact family.

    A finite filtered family collapses onto its least member, so the
    countable filtered families reduce to principal ones; rd_omega_full
    enumerates all filtered subfamilies for cross-validation.
    """
    out = set()
    for k in compact_saturated(space).members:
        out.update(m_family(space, (k,)).members)
    return SetFamily(space, canonical(out))


def rd_omega_full(space: FiniteSpace, max_members: int = 15) -> SetFamily:
    """rd_omega by full filtered-subfamily enumeration."""
    ks = compact_saturated(space).members
    nk = len(ks)
    if nk > max_members:
        raise WorkbenchError(f"K(X) has {nk} members")
    lb = [[0] * nk for _ in range(nk)]
    for i in range(nk):
        for j in range(nk):
            m = 0
            for t in range(nk):
                if ks[t] & ~(ks[i] & ks[j]) == 0:
                    m |= 1 << t
            lb[i][j] = m
    out = set()
    for fam_mask in range(1, 1 << nk):
        members = list(bits(fam_mask))
        filtered = True
        for a in members:
            row = lb[a]
            for b in members:
                if not row[b] & fam_mask:
                    filtered = False
                    break
            if not filtered:
                break
        if filtered:
            out.update(m_family(space, tuple(ks[i] for i in members)).members)
    return SetFamily(space, canonical(out))


def d_c_omega(space: FiniteSpace) -> SetFamily:
    """Closures of (countable) directed subsets."""
    return SetFamily(
        space, canonical(closure(space, d) for d in directed_subsets(space))
    )


def wd_omega(space: FiniteSpace) -> SetFamily:
    """Omega-well-filtered determined closed sets.

    There is no direct decision procedure (the definition quantifies over all
    continuous maps into all omega-well-filtered spaces); the family is pinned
    by the sandwich S_c <= D_c^omega <= RD_omega <= WD_omega <= Irr_c, whose
    ends coincide on finite spaces. wd_refute runs the definition directly
    against concrete targets and can only falsify membership.
    """
    sc = canonical(point_closures(space))
    dc = d_c_omega(space).members
    rd = rd_omega(space).members
    irr = irreducible_sets(space).members
    if not (set(sc) <= set(dc) <= set(rd) <= set(irr)):
        raise WorkbenchError("family sandwich violated")
    if rd != irr:
        raise WorkbenchError(
            "sandwich does not pin WD on this space; finite input expected"
        )
    return SetFamily(space, rd)


def wd_refute(space: FiniteSpace, mask: int, maps) -> ContinuousMap | None:
    """First continuous map into an omega-well-filtered target under which the
    image closure of the candidate set is no point closure; None if all pass."""
    for f in maps:
        if f.dom != space:
            raise WorkbenchError("map domain mismatch")
        if not is_omega_well_filtered(f.cod):
            raise WorkbenchError("refutation targets must be omega-well-filtered")
        img_cl = closure(f.cod, f.image(mask))
        if img_cl not in point_closures(f.cod):
            return f
    return None


def rd_image_check(f: ContinuousMap, mask: int) -> bool:
    """Continuous images of omega-Rudin sets have omega-Rudin closures."""
    if closure(f.dom, mask) not in rd_omega(f.dom).members:
        raise WorkbenchError("input set is not an omega-Rudin set")
    return closure(f.cod, f.image(mask)) in rd_omega(f.cod).members


def wd_image_check(f: ContinuousMap, mask: int) -> bool:
    if closure(f.dom, mask) not in wd_omega(f.dom).members:
        raise WorkbenchError("input set is not omega-well-filtered determined")
    return closure(f.cod, f.image(mask)) in wd_omega(f.cod).members


def product_rudin_checks(prod) -> dict[str, bool]:
    """Componentwise characterization of omega-Rudin and omega-WD sets among
    the closed irreducibles of a product, plus exact factorization."""
    space = prod.space
    rd = set(rd_omega(space).members)
    wd = set(wd_omega(space).members)
    rd_factors = [set(rd_omega(f).members) for f in prod.factors]
    wd_factors = [set(wd_omega(f).members) for f in prod.factors]
    rd_ok = wd_ok = factor_ok = True
    for a in irreducible_sets(space).members:
        pieces = [prod.project(a, i) for i in range(len(prod.factors))]
        if (a in rd) != all(p in rd_factors[i] for i, p in enumerate(pieces)):
            rd_ok = False
        if (a in wd) != all(p in wd_factors[i] for i, p in enumerate(pieces)):
            wd_ok = False
        if a != prod.box(pieces):
            factor_ok = False
    return {
        "rudin-componentwise": rd_ok,
        "wd-componentwise": wd_ok,
        "irreducible-factorization": factor_ok,
    }
