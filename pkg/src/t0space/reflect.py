"""Sobrification and the omega-well-filtered reflection, with the universal
property, functoriality, and preservation theorems as executable checks."""

from dataclasses import dataclass
from functools import lru_cache
from itertools import product as iter_product

from .caps import EXTENSION_ENUM_CAP, check as cap_check
from .classify import (
    is_c_space,
    is_compact,
    is_core_compact,
    is_locally_compact,
    is_locally_hypercompact,
    is_omega_well_filtered,
)
from .core import (
    FiniteSpace,
    closure,
    irreducible_sets,
    point_closures,
    sober_check,
)
from .errors import (
    NoGenericPointError,
    NotOmegaWellFilteredError,
    NotRetractionError,
    WorkbenchError,
)
from .maps import ContinuousMap, compose, find_homeomorphism, identity_map, is_embedding
from .power import IndexedSpace, diamond_mask, eta_map, hoare_space, product_space
from .rudin import wd_omega


@dataclass(frozen=True)
class Reflection:
    """A Hoare space over the WD family together with the unit embedding."""

    space: IndexedSpace
    eta: ContinuousMap

    def __post_init__(self):
        if not is_embedding(self.eta):
            raise WorkbenchError("unit map is not a topological embedding")


@lru_cache(maxsize=None)
def sobrify(space: FiniteSpace) -> Reflection:
    """Hoare space over all closed irreducibles with the point-closure unit."""
    hs = hoare_space(space, irreducible_sets(space))
    return Reflection(hs, eta_map(space, hs))


@lru_cache(maxsize=None)
def reflect_omega(space: FiniteSpace) -> Reflection:
    """Hoare space over the omega-WD sets; the classifier must confirm the
    result omega-well-filtered."""
    hs = hoare_space(space, wd_omega(space))
    if not is_omega_well_filtered(hs.space):
        raise WorkbenchError("reflection failed the omega-well-filtered classifier")
    return Reflection(hs, eta_map(space, hs))


def extend_map(f: ContinuousMap, reflection: Reflection | None = None) -> ContinuousMap:
    """Unique continuous extension along the unit: sends each WD set to the
    generic point of its image closure in the omega-well-filtered target."""
    if not is_omega_well_filtered(f.cod):
        raise NotOmegaWellFilteredError("target fails the classifier")
    if reflection is None:
        reflection = reflect_omega(f.dom)
    cls = point_closures(f.cod)
    table = []
    for a in reflection.space.elems:
        img_cl = closure(f.cod, f.image(a))
        found = [y for y in range(f.cod.n) if cls[y] == img_cl]
        if len(found) != 1:
            raise NoGenericPointError(
                "image closure of a WD set has no unique generic point"
            )
        table.append(found[0])
    ext = ContinuousMap(reflection.space.space, f.cod, tuple(table))
    if compose(ext, reflection.eta).table != f.table:
        raise WorkbenchError("extension does not factor the original map")
    return ext


def count_extensions(f: ContinuousMap, reflection: Reflection | None = None) -> int:
    """Number of continuous maps g with g after the unit equal to f, found by
    enumerating all point mappings; the universal property demands exactly 1."""
    if reflection is None:
        reflection = reflect_omega(f.dom)
    rspace = reflection.space.space
    cap_check(rspace.n, EXTENSION_ENUM_CAP, "extension enumeration domain")
    cap_check(f.cod.n, EXTENSION_ENUM_CAP, "extension enumeration codomain")
    eta = reflection.eta
    count = 0
    for table in iter_product(range(f.cod.n), repeat=rspace.n):
        if any(table[eta(x)] != f(x) for x in range(f.dom.n)):
            continue
        try:
            ContinuousMap(rspace, f.cod, table)
        except WorkbenchError:
            continue
        count += 1
    return count


def functor_map(f: ContinuousMap) -> ContinuousMap:
    """Action on reflections: a WD set goes to the closure of its image; the
    unit square is verified to commute."""
    dom_r = reflect_omega(f.dom)
    cod_r = reflect_omega(f.cod)
    table = []
    for a in dom_r.space.elems:
        img_cl = closure(f.cod, f.image(a))
        table.append(cod_r.space.index_of(img_cl))
    out = ContinuousMap(dom_r.space.space, cod_r.space.space, tuple(table))
    lhs = compose(out, dom_r.eta)
    rhs = compose(cod_r.eta, f)
    if lhs.table != rhs.table:
        raise WorkbenchError("functor square does not commute")
    return out


def retract_check(space: FiniteSpace, r: ContinuousMap, s: ContinuousMap) -> bool:
    """Given an omega-well-filtered space and a retraction onto some image
    space, the image must pass the classifier too."""
    if r.dom != space or s.cod != space or r.cod != s.dom:
        raise NotRetractionError("retraction shape mismatch")
    if compose(r, s).table != identity_map(r.cod).table:
        raise NotRetractionError("maps do not compose to the identity")
    if not is_omega_well_filtered(space):
        raise NotOmegaWellFilteredError("source space fails the classifier")
    return is_omega_well_filtered(r.cod)


def product_reflection_check(factors) -> dict[str, bool]:
    """The reflection of a product is the product of the reflections (via the
    projection tuple map, checked to be a homeomorphism), and a product is
    omega-well-filtered exactly when all factors are."""
    factors = tuple(factors)
    prod = product_space(factors)
    lhs = reflect_omega(prod.space)
    factor_reflections = [reflect_omega(f) for f in factors]
    rhs = product_space([fr.space.space for fr in factor_reflections])

    table = []
    for a in lhs.space.elems:
        coords = []
        for i, fr in enumerate(factor_reflections):
            piece = prod.project(a, i)
            coords.append(fr.space.index_of(piece))
        table.append(rhs.point(coords))
    report = {}
    bijective = len(set(table)) == len(table) == rhs.space.n
    report["gamma-bijective"] = bijective
    if bijective:
        try:
            ContinuousMap(lhs.space.space, rhs.space, tuple(table))
            inverse = [0] * rhs.space.n
            for i, t in enumerate(table):
                inverse[t] = i
            ContinuousMap(rhs.space, lhs.space.space, tuple(inverse))
            report["gamma-homeomorphism"] = True
        except WorkbenchError:
            report["gamma-homeomorphism"] = False
    else:
        report["gamma-homeomorphism"] = False
    report["product-omega-wf-iff-factors"] = (
        is_omega_well_filtered(prod.space)
        == all(is_omega_well_filtered(f) for f in factors)
    )
    return report


def preservation_checks(space: FiniteSpace) -> dict[str, bool]:
    """Biconditionals between a space and its reflection: compactness, local
    hypercompactness, C-space, core compactness, the open-lattice isomorphism,
    and the reflection-is-sobrification equivalence."""
    refl = reflect_omega(space)
    rspace = refl.space.space
    report = {}
    report["compact-iff"] = is_compact(space, space.full) == is_compact(
        rspace, rspace.full
    )
    report["locally-hypercompact-iff"] = is_locally_hypercompact(
        space
    ) == is_locally_hypercompact(rspace)
    report["c-space-iff"] = is_c_space(space) == is_c_space(rspace)
    cc_x = is_core_compact(space)
    report["core-compact-iff"] = cc_x == is_core_compact(rspace)
    report["reflection-locally-compact-iff-core-compact"] = (
        is_locally_compact(rspace) == cc_x
    )

    # U -> diamond(U) is a lattice isomorphism onto the reflection's opens
    elems = refl.space.elems
    mapping = {u: diamond_mask(elems, u) for u in space.opens}
    iso = len(set(mapping.values())) == len(space.opens) and set(
        mapping.values()
    ) == set(rspace.opens)
    if iso:
        for u in space.opens:
            for v in space.opens:
                if mapping[u | v] != mapping[u] | mapping[v]:
                    iso = False
                    break
                if mapping[u & v] != mapping[u] & mapping[v]:
                    iso = False
                    break
            if not iso:
                break
    report["open-lattice-isomorphism"] = iso

    wd = set(refl.space.elems)
    irr = set(irreducible_sets(space).members)
    sides_equal = wd == irr
    report["sobrification-match"] = sober_check(rspace).verdict == sides_equal
    if sides_equal:
        report["reflection-equals-sobrification"] = (
            find_homeomorphism(rspace, sobrify(space).space.space) is not None
        )
    return report
