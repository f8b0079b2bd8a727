import random

from t0space.classify import (
    classify,
    directed_irreducibles_check,
    is_compact,
    is_omega_well_filtered,
    is_well_filtered,
    omega_d_equivalences,
    omega_wf_via_chains,
    smyth_transfer,
    way_below,
    well_filtered_full,
)
from t0space.core import point_closures
from t0space.generators import point_space, random_space, sierpinski, v_space


def test_all_properties_true_on_small_spaces(spaces_upto3):
    for sp in spaces_upto3:
        report = classify(sp)
        assert all(report.verdicts.values()), report.verdicts
        assert report.certificates == {}


def test_classify_exhaustive_4_point_sample(spaces_upto4):
    rng = random.Random(1)
    for sp in rng.sample(spaces_upto4, 60):
        report = classify(sp)
        assert all(report.verdicts.values())


def test_implication_omega_wf_implies_omega_d(spaces_upto3):
    for sp in spaces_upto3:
        v = classify(sp).verdicts
        assert not v["omega-well-filtered"] or v["omega-d-space"]


def test_reduced_wf_agrees_with_full_enumeration(spaces_upto3):
    for sp in spaces_upto3:
        assert is_well_filtered(sp) == well_filtered_full(sp)


def test_reduced_wf_agrees_with_full_on_4_points(spaces_upto4):
    rng = random.Random(2)
    for sp in rng.sample(spaces_upto4, 4):
        assert is_well_filtered(sp) == well_filtered_full(sp)


def test_chain_form_agrees_with_filtered_form(spaces_upto3):
    for sp in spaces_upto3:
        assert omega_wf_via_chains(sp) == is_omega_well_filtered(sp)


def test_way_below_on_finite_lattices_is_inclusion(spaces_upto3):
    # the cover-refinement computation must land on inclusion at finite scale
    for sp in spaces_upto3:
        for u in sp.opens:
            for v in sp.opens:
                assert way_below(sp, u, v) == (u & ~v == 0)


def test_omega_d_six_conditions(spaces_upto3):
    assert omega_d_equivalences(point_space())
    assert omega_d_equivalences(v_space())
    for sp in spaces_upto3:
        assert omega_d_equivalences(sp)


def test_smyth_transfer_sierpinski_and_exhaustive(spaces_upto3):
    assert smyth_transfer(point_space())
    assert smyth_transfer(sierpinski())
    for sp in spaces_upto3:
        assert smyth_transfer(sp)


def test_directed_irreducibles(spaces_upto3):
    v = v_space()
    assert directed_irreducibles_check(v)
    for sp in spaces_upto3:
        assert directed_irreducibles_check(sp)


def test_first_countable_minimal_neighborhoods(spaces_upto3):
    for sp in spaces_upto3:
        assert classify(sp).verdicts["first-countable"]


def test_sierpinski_is_c_space():
    assert classify(sierpinski()).verdicts["c-space"]


def test_is_compact_subsets(spaces_upto3):
    for sp in spaces_upto3[:8]:
        for m in range(sp.full + 1):
            assert is_compact(sp, m)


def test_prop_3_8_harness():
    # the Alexandroff space of a poset is an omega-d-space iff the poset is
    # omega-Noetherian; on finite posets both sides are computed and agree
    from t0space.classify import is_omega_d_space
    from t0space.core import is_omega_noetherian, poset_topology
    from t0space.generators import random_poset

    rng = random.Random(4)
    for _ in range(100):
        p = random_poset(rng, rng.randint(1, 5))
        assert is_omega_d_space(poset_topology(p, "alexandroff")) == \
            is_omega_noetherian(p)


def test_classify_random_spaces_cert_free():
    rng = random.Random(9)
    for _ in range(50):
        sp = random_space(rng, 4)
        rep = classify(sp)
        assert all(rep.verdicts.values())
        assert rep.certificates == {}
        assert set(point_closures(sp))  # smoke: closures computed


def test_directed_irreducibles_exhaustive_4_points(spaces_upto4):
    for sp in spaces_upto4:
        assert directed_irreducibles_check(sp)
