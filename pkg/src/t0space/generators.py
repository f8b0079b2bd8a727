"""Space enumeration and seeded random generation.

Enumeration is exhaustive over labeled objects: posets via relation search,
topologies via brute force over set families closed under union and
intersection. The two routes cross-validate each other at small sizes.
"""

import random
from functools import lru_cache
from itertools import combinations

from .bitsets import canonical, full_mask, submasks
from .core import FinitePoset, FiniteSpace, generate_topology, poset_topology
from .errors import NotT0Error


@lru_cache(maxsize=None)
def enumerate_posets(n: int) -> tuple[FinitePoset, ...]:
    """All partial orders on n labeled elements."""
    if n == 0:
        return ()
    out = []

    def extend(rows, i):
        if i == n:
            out.append(FinitePoset(n, tuple(rows)))
            return
        base = 1 << i
        for extra in submasks(full_mask(n) ^ base):
            row = base | extra
            ok = True
            for j in range(i):
                above = bool(row >> j & 1)          # i <= j
                below = bool(rows[j] >> i & 1)      # j <= i
                if above and below:
                    ok = False
                    break
                if above and rows[j] & ~row:        # transitivity through j
                    ok = False
                    break
                if below and row & ~rows[j]:
                    ok = False
                    break
            if not ok:
                continue
            rows.append(row)
            extend(rows, i + 1)
            rows.pop()

    extend([], 0)
    return tuple(out)


@lru_cache(maxsize=None)
def enumerate_t0_topologies(n: int) -> tuple[FiniteSpace, ...]:
    """All T0 topologies on n labeled points, by brute force over families."""
    full = full_mask(n)
    proper = [m for m in range(1, full)]
    out = []
    for picks in submasks(full_mask(len(proper))):
        fam = {0, full}
        for i in range(len(proper)):
            if picks >> i & 1:
                fam.add(proper[i])
        if not _closed_family(fam):
            continue
        opens = canonical(fam)
        try:
            space = FiniteSpace(n, opens)
            space.validate()
        except NotT0Error:
            continue
        out.append(space)
    return tuple(sorted(out, key=lambda s: s.opens))


def _closed_family(fam):
    items = list(fam)
    s = set(fam)
    for i, a in enumerate(items):
        for b in items[i:]:
            if a | b not in s or a & b not in s:
                return False
    return True


def all_spaces_up_to(n: int) -> list[FiniteSpace]:
    """Alexandroff spaces of every labeled poset on 1..n points."""
    out = []
    for k in range(1, n + 1):
        for p in enumerate_posets(k):
            out.append(poset_topology(p, "alexandroff"))
    return out


def random_poset(rng: random.Random, n: int) -> FinitePoset:
    """Random partial order: random edges along a shuffled order, then closure."""
    order = list(range(n))
    rng.shuffle(order)
    p = rng.choice([0.2, 0.35, 0.5, 0.7])
    pairs = []
    for i, j in combinations(range(n), 2):
        if rng.random() < p:
            pairs.append((order[i], order[j]))
    return FinitePoset.from_pairs(n, pairs)


def random_space(rng: random.Random, n: int) -> FiniteSpace:
    """Random T0 space: poset topology or a T0 sub-topology of one."""
    poset = random_poset(rng, n)
    kind = rng.choice(["alexandroff", "scott", "sub", "sub"])
    base = poset_topology(poset, "alexandroff" if kind == "sub" else kind)
    if kind != "sub":
        return base
    for _ in range(8):
        keep = [u for u in base.opens if u in (0, base.full) or rng.random() < 0.6]
        try:
            return generate_topology(n, keep)
        except NotT0Error:
            continue
    return base


# Named pool of tiny spaces used across tests and checks.


def _space_from_pairs(n, pairs, names):
    return poset_topology_with_names(FinitePoset.from_pairs(n, pairs), names)


def poset_topology_with_names(poset: FinitePoset, names) -> FiniteSpace:
    sp = poset_topology(poset, "alexandroff")
    return FiniteSpace(sp.n, sp.opens, tuple(names))


def sierpinski() -> FiniteSpace:
    """Two points 0 < 1; opens are {}, {1}, {0,1}."""
    return _space_from_pairs(2, [(0, 1)], ("0", "1"))


def point_space() -> FiniteSpace:
    return _space_from_pairs(1, [], ("0",))


def v_space() -> FiniteSpace:
    """Points a,b,c with a below b and c; opens {}, {b}, {c}, {b,c}, X."""
    return _space_from_pairs(3, [(0, 1), (0, 2)], ("a", "b", "c"))


def wedge_space() -> FiniteSpace:
    """Two bottoms a,b under one top c."""
    return _space_from_pairs(3, [(0, 2), (1, 2)], ("a", "b", "c"))


def chain3_space() -> FiniteSpace:
    return _space_from_pairs(3, [(0, 1), (1, 2)], ("a", "b", "c"))


def discrete_space(n: int) -> FiniteSpace:
    return _space_from_pairs(n, [], tuple(str(i) for i in range(n)))


def chain_plus_point() -> FiniteSpace:
    """Sierpinski next to an isolated point."""
    return _space_from_pairs(3, [(0, 1)], ("a", "b", "c"))


def named_pool() -> dict[str, FiniteSpace]:
    return {
        "point": point_space(),
        "sierpinski": sierpinski(),
        "discrete2": discrete_space(2),
        "discrete3": discrete_space(3),
        "chain3": chain3_space(),
        "v": v_space(),
        "wedge": wedge_space(),
        "chain-plus-point": chain_plus_point(),
    }
