import random

import pytest

from t0space.cofinite_space import (
    CofiniteClosed,
    CofiniteOpen,
    canonical_filtered_family,
    cofinite_checks,
    not_omega_wf_certificate,
    not_sober_certificate,
    opens_intersect,
    point_closure,
    whole_space_in_m_of_family,
)
from t0space.errors import NotNeighborhoodOfTopError, WorkbenchError
from t0space.fan_space import (
    FanClosed,
    FanFamily,
    FanOpen,
    FanPoint,
    diagonal_open_from_witnesses,
    fan_closed_classify,
    fan_diagonal_refuter,
    fan_is_scott_open,
    fan_leq,
    fan_open_from_doc,
    fan_open_intersection,
    fan_open_to_doc,
    fan_open_to_sublattice_mask,
    fan_open_union,
    fan_point_closure,
    fan_sober_check,
    fan_sublattice_oracle,
    fan_sup,
    oracle_scott_open,
)


def test_fan_order():
    bot, top = FanPoint.bottom(), FanPoint.top()
    p = FanPoint.pair(2, 3)
    assert fan_leq(bot, p) and fan_leq(p, top) and fan_leq(bot, top)
    assert fan_leq(p, FanPoint.pair(2, 5))
    assert not fan_leq(p, FanPoint.pair(3, 5))
    assert not fan_leq(top, p)


def test_scott_open_decisions():
    # a single raised column with top but default untouched is not Scott open
    u = FanOpen(has_top=True, default=None, exceptions=((3, 5),))
    assert not fan_is_scott_open(u)
    assert fan_is_scott_open(FanOpen(has_top=True, default=0))
    assert fan_is_scott_open(FanOpen.empty())
    assert fan_is_scott_open(FanOpen.whole())
    assert fan_is_scott_open(FanOpen(has_top=True, default=2, exceptions=((1, 9),)))


def test_fan_open_validation():
    with pytest.raises(WorkbenchError):
        FanOpen(has_top=False, default=0)  # a touched column forces top
    with pytest.raises(WorkbenchError):
        FanOpen(has_top=True, has_bottom=True, default=1)  # bottom forces whole


def test_fan_membership():
    u = FanOpen(has_top=True, default=4, exceptions=((2, 0),))
    assert u.contains(FanPoint.pair(2, 0))
    assert u.contains(FanPoint.pair(0, 4))
    assert not u.contains(FanPoint.pair(0, 3))
    assert u.contains(FanPoint.top())
    assert not u.contains(FanPoint.bottom())
    assert FanOpen.whole().contains(FanPoint.bottom())


def test_fan_sup_by_structure():
    assert fan_sup(FanFamily("column", column=2)) == FanPoint.top()
    fam = FanFamily("finite", points=(FanPoint.pair(1, 0), FanPoint.pair(1, 4)))
    assert fan_sup(fam) == FanPoint.pair(1, 4)
    assert fan_sup(FanFamily("spread")) == FanPoint.top()
    with pytest.raises(WorkbenchError):
        FanFamily("finite", points=(FanPoint.pair(1, 0), FanPoint.pair(2, 0)))


def test_union_intersection_thresholds():
    a = FanOpen(has_top=True, default=3, exceptions=((0, 1),))
    b = FanOpen(has_top=True, default=2, exceptions=((1, 7),))
    u = fan_open_union(a, b)
    assert u.threshold(0) == 1 and u.threshold(1) == 3 and u.threshold(5) == 2
    i = fan_open_intersection(a, b)
    assert i.threshold(0) == 2 and i.threshold(1) == 7 and i.threshold(5) == 3


def test_diagonal_refuter_structured_battery():
    batteries = [
        lambda n: FanOpen(has_top=True, default=n),
        lambda n: FanOpen(has_top=True, default=0),
        lambda n: FanOpen(has_top=True, default=2 * n + 1),
        lambda n: FanOpen(has_top=True, default=n * n % 17),
        lambda n: FanOpen(has_top=True, default=n, exceptions=((n, n + 3),)),
    ]
    for base in batteries:
        cert = fan_diagonal_refuter(base, 64)
        assert cert.recheck()
        diag = diagonal_open_from_witnesses(cert.witnesses)
        assert fan_is_scott_open(diag) and diag.has_top
        for (n, m), cand in zip(cert.witnesses, cert.candidates):
            u = fan_open_from_doc(cand)
            assert u.contains(FanPoint.pair(n, m))
            assert not diag.contains(FanPoint.pair(n, m))


def test_diagonal_refuter_rejects_non_neighborhood():
    with pytest.raises(NotNeighborhoodOfTopError):
        fan_diagonal_refuter(lambda n: FanOpen.empty(), 4)
    with pytest.raises(NotNeighborhoodOfTopError):
        fan_diagonal_refuter(
            lambda n: FanOpen(has_top=True, default=None, exceptions=((0, 1),)), 4
        )


def test_fan_point_closures():
    assert fan_point_closure(FanPoint.bottom()).contains(FanPoint.bottom())
    c = fan_point_closure(FanPoint.pair(4, 7))
    assert c.contains(FanPoint.pair(4, 7))
    assert c.contains(FanPoint.pair(4, 0))
    assert c.contains(FanPoint.bottom())
    assert not c.contains(FanPoint.pair(4, 8))
    assert not c.contains(FanPoint.pair(3, 0))
    assert fan_point_closure(FanPoint.top()).contains(FanPoint.top())


def test_fan_closed_classification():
    single = FanClosed(FanOpen(has_top=True, default=0, exceptions=((4, 8),)))
    irr, generic = fan_closed_classify(single)
    assert irr and generic == FanPoint.pair(4, 7)
    double = FanClosed(
        FanOpen(has_top=True, default=0, exceptions=((1, 3), (2, 5)))
    )
    irr, _ = fan_closed_classify(double)
    assert not irr
    whole = FanClosed(FanOpen.empty())
    irr, generic = fan_closed_classify(whole)
    assert irr and generic == FanPoint.top()


def test_fan_sober_with_sampled_splits():
    rng = random.Random(19)
    samples = []
    for _ in range(200):
        a, b = rng.sample(range(10), 2)
        exc = tuple(sorted(((a, rng.randint(1, 5)), (b, rng.randint(1, 5)))))
        samples.append(FanClosed(FanOpen(has_top=True, default=0, exceptions=exc)))
    verdict, generic, splits = fan_sober_check(samples)
    assert verdict and splits == 200
    assert generic["whole-lattice"] == "top"


def test_fan_scott_oracle_agreement():
    width = height = 6
    poset, idx, bottom, top = fan_sublattice_oracle(width, height)
    rng = random.Random(23)
    for _ in range(1000):
        has_top = rng.random() < 0.8
        if not has_top:
            u = FanOpen.empty()
        else:
            default = rng.choice([0, 1, 2, 3, 4, 5, None])
            exc = []
            for c in sorted(rng.sample(range(width), rng.randint(0, 3))):
                t = rng.choice([0, 1, 2, 3, 4, 5, None])
                if t != default:
                    exc.append((c, t))
            try:
                u = FanOpen(has_top=True, default=default, exceptions=tuple(exc))
            except WorkbenchError:
                continue
        mask = fan_open_to_sublattice_mask(u, idx, width, height, bottom, top)
        assert fan_is_scott_open(u) == oracle_scott_open(
            poset, idx, bottom, top, width, height, mask
        )
    # the whole lattice maps to the full mask and stays open
    whole_mask = fan_open_to_sublattice_mask(
        FanOpen.whole(), idx, width, height, bottom, top
    )
    assert whole_mask == (1 << poset.n) - 1
    assert oracle_scott_open(poset, idx, bottom, top, width, height, whole_mask)


def test_fan_open_doc_roundtrip():
    u = FanOpen(has_top=True, default=3, exceptions=((1, None), (4, 0)))
    assert fan_open_from_doc(fan_open_to_doc(u)) == u


# cofinite space


def test_cofinite_opens_intersect():
    a = CofiniteOpen(excluded=(0, 1, 2))
    b = CofiniteOpen(excluded=(3, 4))
    assert opens_intersect(a, b) == 5
    assert a.witness() == 3


def test_cofinite_member_witness_example():
    assert canonical_filtered_family(3).witness() == 3
    assert not canonical_filtered_family(3).contains(2)


def test_cofinite_minimality_examples():
    closed = CofiniteClosed(finite=(5, 9))
    member = CofiniteOpen(excluded=(5, 9))
    assert not any(member.contains(x) for x in closed.finite)
    assert whole_space_in_m_of_family([closed])


def test_cofinite_minimality_sampled():
    rng = random.Random(29)
    samples = []
    for _ in range(200):
        size = rng.randint(1, 6)
        samples.append(CofiniteClosed(finite=tuple(sorted(rng.sample(range(40), size)))))
    assert whole_space_in_m_of_family(samples)


def test_cofinite_point_closures_discrete():
    assert point_closure(7).contains(7)
    assert not point_closure(7).contains(8)


def test_cofinite_report_and_certificates():
    report = cofinite_checks()
    assert all(report.values())
    assert not_sober_certificate().recheck()
    assert not_omega_wf_certificate().recheck()
