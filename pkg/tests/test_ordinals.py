import random

import pytest

from t0space.errors import ParseError, WorkbenchError
from t0space.ordinals import (
    OMEGA1,
    Ordinal,
    ZERO,
    ord_cofinality,
    ord_compare,
    ord_is_limit,
    ord_succ,
    parse_ordinal,
    random_ordinal,
)


def test_cnf_comparison():
    assert parse_ordinal("w*2+3") < parse_ordinal("w^2")
    assert parse_ordinal("w^2") < parse_ordinal("w^2+1")
    assert parse_ordinal("w^2*2") > parse_ordinal("w^2+w*9+9")
    assert parse_ordinal("5") < parse_ordinal("w")
    assert ord_compare(parse_ordinal("w"), parse_ordinal("w")) == 0
    assert OMEGA1 > parse_ordinal("w^3*9+w*2")


def test_succ_pred():
    assert str(ord_succ(ZERO)) == "1"
    assert str(ord_succ(parse_ordinal("w"))) == "w+1"
    assert str(ord_succ(parse_ordinal("w+4"))) == "w+5"
    assert str(parse_ordinal("w+5").pred()) == "w+4"
    with pytest.raises(WorkbenchError):
        ord_succ(OMEGA1)
    with pytest.raises(WorkbenchError):
        parse_ordinal("w").pred()


def test_limits_and_cofinality():
    assert not ord_is_limit(ZERO)
    assert not ord_is_limit(parse_ordinal("7"))
    assert ord_is_limit(parse_ordinal("w"))
    assert ord_is_limit(parse_ordinal("w^3*2"))
    assert not ord_is_limit(parse_ordinal("w^3*2+1"))
    assert ord_cofinality(ZERO) == "1"
    assert ord_cofinality(parse_ordinal("9")) == "1"
    assert ord_cofinality(parse_ordinal("w^2")) == "omega"
    assert ord_cofinality(OMEGA1) == "omega1"


def test_fundamental_sequences():
    w2 = parse_ordinal("w^2")
    assert [str(w2.fundamental(n)) for n in range(4)] == ["0", "w", "w*2", "w*3"]
    w = parse_ordinal("w")
    assert [str(w.fundamental(n)) for n in range(4)] == ["0", "1", "2", "3"]
    big = parse_ordinal("w^3+w^2*2")
    seq = [big.fundamental(n) for n in range(6)]
    assert all(a < b for a, b in zip(seq, seq[1:]))
    assert all(x < big for x in seq)
    with pytest.raises(WorkbenchError):
        OMEGA1.fundamental(0)
    with pytest.raises(WorkbenchError):
        parse_ordinal("3").fundamental(0)


def test_fundamental_sups_to_limit():
    rng = random.Random(2)
    for _ in range(100):
        lam = random_ordinal(rng, max_exp=4, max_coeff=5)
        if not lam.is_limit():
            continue
        seq = [lam.fundamental(n) for n in range(8)]
        assert all(a < b for a, b in zip(seq, seq[1:]))
        assert all(x < lam for x in seq)
        # anything strictly below the limit is eventually dominated
        below = lam.fundamental(5)
        assert below < lam.fundamental(6)


def test_left_sub():
    rng = random.Random(3)
    for _ in range(200):
        a = random_ordinal(rng, max_exp=4, max_coeff=5)
        b = random_ordinal(rng, max_exp=4, max_coeff=5)
        if b < a:
            a, b = b, a
        d = a.left_sub(b)
        # validate via string-free recomposition: a + d == b
        assert _add(a, d) == b
    with pytest.raises(WorkbenchError):
        parse_ordinal("w^2").left_sub(parse_ordinal("w"))


def _add(a: Ordinal, b: Ordinal) -> Ordinal:
    if not b.terms:
        return a
    lead = b.terms[0][0]
    kept = tuple(t for t in a.terms if t[0] > lead)
    if a.terms and len(kept) < len(a.terms) and a.terms[len(kept)][0] == lead:
        c = a.terms[len(kept)][1] + b.terms[0][1]
        return Ordinal(kept + ((lead, c),) + b.terms[1:])
    return Ordinal(kept + b.terms)


def test_parse_roundtrip():
    rng = random.Random(5)
    for _ in range(200):
        x = random_ordinal(rng, allow_omega1=True)
        assert parse_ordinal(str(x)) == x
    with pytest.raises(ParseError):
        parse_ordinal("w^")
    with pytest.raises(ParseError):
        parse_ordinal("chaos")


def test_cnf_validation():
    with pytest.raises(WorkbenchError):
        Ordinal(((1, 0),))
    with pytest.raises(WorkbenchError):
        Ordinal(((1, 1), (1, 1)))
    with pytest.raises(WorkbenchError):
        Ordinal(((0, 1), (1, 1)))
