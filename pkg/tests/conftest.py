import pytest

from t0space.generators import (
    all_spaces_up_to,
    enumerate_posets,
    enumerate_t0_topologies,
    named_pool,
)


@pytest.fixture(scope="session")
def pool():
    return named_pool()


@pytest.fixture(scope="session")
def spaces_upto3():
    """Every T0 topology on 1..3 labeled points, via brute-force generation."""
    out = []
    for n in (1, 2, 3):
        out.extend(enumerate_t0_topologies(n))
    return out


@pytest.fixture(scope="session")
def spaces_upto4():
    """Alexandroff spaces of every labeled poset on 1..4 points."""
    return all_spaces_up_to(4)


@pytest.fixture(scope="session")
def posets_upto4():
    out = []
    for n in (1, 2, 3, 4):
        out.extend(enumerate_posets(n))
    return out
