"""Continuous maps between finite spaces, map enumeration, homeomorphism search."""

from dataclasses import dataclass
from itertools import product as iter_product

from .bitsets import bits, canonical, popcount
from .core import FiniteSpace, min_neighborhoods, point_closures
from .errors import NotContinuousError, PointOutOfRangeError


@dataclass(frozen=True)
class ContinuousMap:
    """A point mapping verified continuous at construction."""

    dom: FiniteSpace
    cod: FiniteSpace
    table: tuple[int, ...]

    def __post_init__(self):
        if len(self.table) != self.dom.n:
            raise NotContinuousError("table must map every domain point")
        for y in self.table:
            if not 0 <= y < self.cod.n:
                raise PointOutOfRangeError(f"image point {y}")
        dom_opens = set(self.dom.opens)
        for v in self.cod.opens:
            if self.preimage(v) not in dom_opens:
                raise NotContinuousError(
                    f"preimage of {v:#x} is not open in the domain"
                )

    def __call__(self, x: int) -> int:
        return self.table[x]

    def image(self, mask: int) -> int:
        out = 0
        for x in bits(mask):
            out |= 1 << self.table[x]
        return out

    def preimage(self, mask: int) -> int:
        out = 0
        for x, y in enumerate(self.table):
            if mask >> y & 1:
                out |= 1 << x
        return out


def identity_map(space: FiniteSpace) -> ContinuousMap:
    return ContinuousMap(space, space, tuple(range(space.n)))


def compose(outer: ContinuousMap, inner: ContinuousMap) -> ContinuousMap:
    """outer after inner."""
    if inner.cod != outer.dom:
        raise NotContinuousError("composition mismatch")
    return ContinuousMap(inner.dom, outer.cod, tuple(outer.table[y] for y in inner.table))


def is_continuous_table(dom: FiniteSpace, cod: FiniteSpace, table) -> bool:
    dom_opens = set(dom.opens)
    for v in cod.opens:
        pre = 0
        for x, y in enumerate(table):
            if v >> y & 1:
                pre |= 1 << x
        if pre not in dom_opens:
            return False
    return True


def enumerate_continuous_maps(dom: FiniteSpace, cod: FiniteSpace):
    """All continuous maps dom -> cod, deterministically ordered."""
    out = []
    for table in iter_product(range(cod.n), repeat=dom.n):
        if is_continuous_table(dom, cod, table):
            out.append(ContinuousMap(dom, cod, table))
    return out


def subspace(space: FiniteSpace, mask: int) -> tuple[FiniteSpace, tuple[int, ...]]:
    """Subspace on the points of mask; returns the space and the point list."""
    pts = list(bits(mask))
    index = {p: i for i, p in enumerate(pts)}
    opens = set()
    for u in space.opens:
        m = 0
        for p in bits(u & mask):
            m |= 1 << index[p]
        opens.add(m)
    names = tuple(space.point_name(p) for p in pts) if space.names else None
    return FiniteSpace(len(pts), canonical(opens), names), tuple(pts)


def is_embedding(f: ContinuousMap) -> bool:
    """Injective, continuous, and a homeomorphism onto its image subspace."""
    if len(set(f.table)) != f.dom.n:
        return False
    img = f.image(f.dom.full)
    image_opens = {v & img for v in f.cod.opens}
    mapped_opens = {f.image(u) for u in f.dom.opens}
    return image_opens == mapped_opens


def _refined_invariants(space: FiniteSpace) -> tuple[tuple, ...]:
    """Per-point invariant vectors, iteratively refined along the order."""
    mn = min_neighborhoods(space)
    cl = point_closures(space)
    inv = [(popcount(mn[x]), popcount(cl[x])) for x in range(space.n)]
    for _ in range(space.n):
        nxt = []
        for x in range(space.n):
            ups = tuple(sorted(inv[y] for y in bits(mn[x])))
            downs = tuple(sorted(inv[y] for y in bits(cl[x])))
            nxt.append((inv[x], ups, downs))
        if len(set(nxt)) == len(set(inv)):
            inv = nxt
            break
        inv = nxt
    return tuple(inv)


def find_homeomorphism(a: FiniteSpace, b: FiniteSpace):
    """A homeomorphism a -> b, or None.

    Fast path: if the refined point invariants totally order both spaces and
    agree, the induced bijection is checked directly. Otherwise a backtracking
    search over invariant-compatible images runs.
    """
    if a.n != b.n or len(a.opens) != len(b.opens):
        return None
    if sorted(map(popcount, a.opens)) != sorted(map(popcount, b.opens)):
        return None
    inv_a = _refined_invariants(a)
    inv_b = _refined_invariants(b)
    if sorted(inv_a) != sorted(inv_b):
        return None
    b_opens = set(b.opens)

    if len(set(inv_a)) == a.n:
        order_a = sorted(range(a.n), key=lambda x: inv_a[x])
        order_b = sorted(range(b.n), key=lambda x: inv_b[x])
        table = [0] * a.n
        for x, y in zip(order_a, order_b):
            table[x] = y

        def img(u):
            out = 0
            for x in bits(u):
                out |= 1 << table[x]
            return out

        if {img(u) for u in a.opens} == b_opens:
            return ContinuousMap(a, b, tuple(table))
        return None

    candidates = [
        [y for y in range(b.n) if inv_b[y] == inv_a[x]] for x in range(a.n)
    ]
    table = [-1] * a.n
    used = [False] * b.n
    mn_a = min_neighborhoods(a)
    mn_b = min_neighborhoods(b)

    def consistent(x, y):
        # partial order compatibility through minimal neighborhoods
        for x2 in range(a.n):
            y2 = table[x2]
            if y2 < 0:
                continue
            if bool(mn_a[x] >> x2 & 1) != bool(mn_b[y] >> y2 & 1):
                return False
            if bool(mn_a[x2] >> x & 1) != bool(mn_b[y2] >> y & 1):
                return False
        return True

    def rec(x):
        if x == a.n:
            def img(u):
                out = 0
                for p in bits(u):
                    out |= 1 << table[p]
                return out

            return {img(u) for u in a.opens} == b_opens
        for y in candidates[x]:
            if used[y] or not consistent(x, y):
                continue
            table[x] = y
            used[y] = True
            if rec(x + 1):
                return True
            table[x] = -1
            used[y] = False
        return False

    if rec(0):
        return ContinuousMap(a, b, tuple(table))
    return None


def is_homeomorphic(a: FiniteSpace, b: FiniteSpace) -> bool:
    return find_homeomorphism(a, b) is not None
