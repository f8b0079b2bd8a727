import pytest

from t0space.core import (
    FinitePoset,
    FiniteSpace,
    closure,
    directed_subsets,
    generate_topology,
    interior,
    irreducible_sets,
    irreducible_via_base,
    is_directed,
    is_irreducible,
    is_omega_compact,
    is_omega_noetherian,
    poset_topology,
    saturation,
    scott_opens_by_definition,
    sober_check,
    specialization_order,
)
from t0space.errors import (
    EmptySetError,
    NotT0Error,
    PointOutOfRangeError,
    WorkbenchError,
)
from t0space.generators import (
    discrete_space,
    enumerate_posets,
    random_poset,
    sierpinski,
    v_space,
)
from t0space.maps import enumerate_continuous_maps

from oracles import brute_directed_subsets, brute_irreducible

import random


def test_generate_topology_one_point():
    sp = generate_topology(1, [])
    assert sp.opens == (0, 1)


def test_generate_topology_sierpinski():
    sp = generate_topology(2, [0b10])
    assert sp.opens == (0, 0b10, 0b11)


def test_generate_topology_indiscrete_rejected():
    with pytest.raises(NotT0Error):
        generate_topology(2, [])


def test_generate_topology_out_of_range():
    with pytest.raises(PointOutOfRangeError):
        generate_topology(2, [0b100])


def test_specialization_sierpinski():
    po = specialization_order(sierpinski())
    assert po.leq(0, 1) and not po.leq(1, 0)


def test_specialization_discrete_antichain():
    po = specialization_order(discrete_space(2))
    assert not po.leq(0, 1) and not po.leq(1, 0)


def test_specialization_v_space_from_closures():
    # derived by intersecting the closed sets containing each point
    v = v_space()
    assert closure(v, 0b010) == 0b011  # cl{b} = {a,b}
    assert closure(v, 0b100) == 0b101  # cl{c} = {a,c}
    po = specialization_order(v)
    assert po.leq(0, 1) and po.leq(0, 2)
    assert not po.leq(1, 2) and not po.leq(2, 1)


def test_closure_saturation_interior():
    v = v_space()
    assert closure(sierpinski(), 0b10) == 0b11
    assert saturation(v, 0b001) == 0b111  # every open at a is the whole space
    assert interior(v, v.full) == v.full
    assert interior(v, 0b011) == 0b010


def test_closure_saturation_monotone_idempotent_extensive(spaces_upto3):
    for sp in spaces_upto3:
        for a in range(sp.full + 1):
            ca, sa = closure(sp, a), saturation(sp, a)
            assert a & ~ca == 0 and a & ~sa == 0
            assert closure(sp, ca) == ca and saturation(sp, sa) == sa
            for b in range(a, sp.full + 1):
                if a & ~b == 0:
                    assert closure(sp, a) & ~closure(sp, b) == 0
                    assert saturation(sp, a) & ~saturation(sp, b) == 0


def test_poset_topology_chain_scott():
    chain = FinitePoset.from_pairs(2, [(0, 1)])
    assert poset_topology(chain, "scott").opens == (0, 0b10, 0b11)


def test_poset_topology_lawson_discrete_on_chain():
    chain = FinitePoset.from_pairs(2, [(0, 1)])
    lower = poset_topology(chain, "lower")
    assert 0b01 in lower.opens  # complement of the principal filter at 1
    lawson = poset_topology(chain, "lawson")
    assert len(lawson.opens) == 4  # discrete


def test_scott_equals_alexandroff_equals_omega_scott(posets_upto4):
    for p in posets_upto4:
        alex = poset_topology(p, "alexandroff").opens
        assert poset_topology(p, "scott").opens == alex
        assert poset_topology(p, "omega-scott").opens == alex
        if p.n <= 3:
            assert scott_opens_by_definition(p) == alex


def test_directed_subsets_chain():
    chain = poset_topology(FinitePoset.from_pairs(2, [(0, 1)]), "alexandroff")
    assert directed_subsets(chain) == (1, 2, 3)


def test_directed_subsets_against_oracle(spaces_upto3):
    for sp in spaces_upto3:
        assert directed_subsets(sp) == brute_directed_subsets(sp)


def test_is_directed_basics():
    v = v_space()
    assert not is_directed(v, 0b110)  # b,c have no upper bound
    for x in range(3):
        assert is_directed(v, 1 << x)
    assert not is_directed(v, 0)


def test_irreducible_sierpinski():
    s = sierpinski()
    assert irreducible_sets(s).members == (0b01, 0b11)


def test_irreducible_v_space():
    v = v_space()
    assert irreducible_sets(v).members == (0b001, 0b011, 0b101)


def test_directed_sets_are_irreducible(spaces_upto3):
    for sp in spaces_upto3:
        for d in directed_subsets(sp):
            assert is_irreducible(sp, d)


def test_irreducible_empty_raises():
    with pytest.raises(EmptySetError):
        is_irreducible(sierpinski(), 0)


def test_irreducible_base_form_agrees(spaces_upto4):
    for sp in spaces_upto4[:300]:
        for m in range(1, sp.full + 1):
            assert irreducible_via_base(sp, m) == is_irreducible(sp, m)
            assert is_irreducible(sp, m) == brute_irreducible(sp, m)


def test_irreducible_iff_closure_irreducible(spaces_upto3):
    for sp in spaces_upto3:
        for m in range(1, sp.full + 1):
            assert is_irreducible(sp, m) == is_irreducible(sp, closure(sp, m))


def test_continuous_image_of_irreducible_is_irreducible(spaces_upto3):
    small = spaces_upto3[:12]
    for dom in small:
        for cod in small:
            for f in enumerate_continuous_maps(dom, cod):
                for m in range(1, dom.full + 1):
                    if is_irreducible(dom, m):
                        assert is_irreducible(cod, f.image(m))


def test_sober_check_sierpinski():
    rep = sober_check(sierpinski())
    assert rep.verdict
    assert rep.generic_points == ((0b01, 0), (0b11, 1))


def test_sober_check_v_space():
    rep = sober_check(v_space())
    assert rep.verdict and len(rep.generic_points) == 3


def test_every_small_space_sober(spaces_upto3, spaces_upto4):
    for sp in spaces_upto3 + spaces_upto4:
        assert sober_check(sp).verdict


def test_alexandroff_roundtrip(posets_upto4):
    for p in posets_upto4:
        sp = poset_topology(p, "alexandroff")
        assert specialization_order(sp) == p


def test_omega_noetherian_and_compact_elements(posets_upto4):
    rng = random.Random(5)
    sample = rng.sample(posets_upto4, 100)
    for p in sample:
        assert is_omega_noetherian(p)
        for x in range(p.n):
            assert is_omega_compact(p, x)


def test_omega_compact_out_of_range():
    with pytest.raises(PointOutOfRangeError):
        is_omega_compact(FinitePoset.from_pairs(1, []), 3)


def test_poset_validation():
    with pytest.raises(WorkbenchError):
        FinitePoset(2, (0b01, 0b01))  # not reflexive at 1
    with pytest.raises(WorkbenchError):
        FinitePoset(2, (0b11, 0b11))  # not antisymmetric


def test_space_requires_canonical_opens():
    with pytest.raises(WorkbenchError):
        FiniteSpace(2, (0b11, 0b10, 0))
    with pytest.raises(WorkbenchError):
        FiniteSpace(2, (0, 0b10))  # missing the full set


def test_random_posets_valid():
    rng = random.Random(11)
    for _ in range(50):
        p = random_poset(rng, 6)
        assert p.n == 6  # construction validates order axioms


def test_enumerate_posets_counts():
    assert [len(enumerate_posets(n)) for n in (1, 2, 3, 4)] == [1, 3, 19, 219]


def test_directed_subsets_report_maxima(spaces_upto3):
    from t0space.core import directed_subsets_with_maxima

    for sp in spaces_upto3:
        po = specialization_order(sp)
        for d, top in directed_subsets_with_maxima(sp):
            assert d >> top & 1
            for x in range(sp.n):
                if d >> x & 1:
                    assert po.leq(x, top)
