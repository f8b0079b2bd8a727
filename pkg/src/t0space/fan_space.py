"""The fan lattice: bottom, countably many disjoint ascending columns, top.

Scott opens are finitely presented by a default column threshold plus a
finite exception map; a pair (n, m) lies in an open iff m reaches column n's
threshold. Every nonempty proper Scott open contains the top element, and
membership of bottom singles out the whole lattice; those two flags complete
the encoding.
"""

from dataclasses import dataclass, field

from .core import FinitePoset
from .errors import NotNeighborhoodOfTopError, WorkbenchError

INF = None  # threshold value for "column untouched"


@dataclass(frozen=True)
class FanPoint:
    kind: str  # "bottom" | "pair" | "top"
    n: int = 0
    m: int = 0

    def __post_init__(self):
        if self.kind not in ("bottom", "pair", "top"):
            raise WorkbenchError(f"bad fan point kind {self.kind!r}")

    @classmethod
    def bottom(cls):
        return cls("bottom")

    @classmethod
    def top(cls):
        return cls("top")

    @classmethod
    def pair(cls, n: int, m: int):
        return cls("pair", n, m)

    def __str__(self):
        if self.kind == "pair":
            return f"({self.n},{self.m})"
        return self.kind


def fan_leq(a: FanPoint, b: FanPoint) -> bool:
    if a.kind == "bottom" or b.kind == "top":
        return True
    if a.kind == "top":
        return b.kind == "top"
    if b.kind == "bottom":
        return False
    return a.n == b.n and a.m <= b.m


@dataclass(frozen=True)
class FanOpen:
    """An up-set of the fan lattice in threshold form.

    threshold(n) = exceptions.get(n, default); None means the column is
    untouched. Bottom membership forces the whole lattice.
    """

    has_top: bool = False
    has_bottom: bool = False
    default: int | None = INF
    exceptions: tuple[tuple[int, int | None], ...] = field(default=())

    def __post_init__(self):
        cols = [c for c, _ in self.exceptions]
        if sorted(set(cols)) != cols:
            raise WorkbenchError("exception columns must be sorted and distinct")
        for _, t in self.exceptions:
            if t is not None and t < 0:
                raise WorkbenchError("thresholds are naturals")
        if not self.has_top:
            if self.default is not None or any(
                t is not None for _, t in self.exceptions
            ):
                raise WorkbenchError("an up-set touching a column contains top")
        if self.has_bottom:
            if not (self.has_top and self.default == 0
                    and all(t == 0 for _, t in self.exceptions)):
                raise WorkbenchError("bottom belongs to the whole lattice only")

    @classmethod
    def empty(cls):
        return cls()

    @classmethod
    def whole(cls):
        return cls(has_top=True, has_bottom=True, default=0)

    def threshold(self, n: int) -> int | None:
        for c, t in self.exceptions:
            if c == n:
                return t
        return self.default

    def contains(self, p: FanPoint) -> bool:
        if p.kind == "top":
            return self.has_top
        if p.kind == "bottom":
            return self.has_bottom
        t = self.threshold(p.n)
        return t is not None and p.m >= t

    def is_whole(self) -> bool:
        return self.has_bottom


def fan_is_scott_open(u: FanOpen) -> bool:
    """Scott-open iff every column chain that sups into the set meets it: with
    top present all thresholds must be finite; without top the set is empty."""
    if not u.has_top:
        return True  # the empty up-set
    if u.default is None:
        return False
    return all(t is not None for _, t in u.exceptions)


def fan_open_union(a: FanOpen, b: FanOpen) -> FanOpen:
    cols = sorted({c for c, _ in a.exceptions} | {c for c, _ in b.exceptions})

    def mint(x, y):
        if x is None:
            return y
        if y is None:
            return x
        return min(x, y)

    default = mint(a.default, b.default)
    exc = []
    for c in cols:
        t = mint(a.threshold(c), b.threshold(c))
        if t != default:
            exc.append((c, t))
    return FanOpen(a.has_top or b.has_top, a.has_bottom or b.has_bottom,
                   default, tuple(exc))


def fan_open_intersection(a: FanOpen, b: FanOpen) -> FanOpen:
    cols = sorted({c for c, _ in a.exceptions} | {c for c, _ in b.exceptions})

    def maxt(x, y):
        if x is None or y is None:
            return None
        return max(x, y)

    default = maxt(a.default, b.default)
    exc = []
    for c in cols:
        t = maxt(a.threshold(c), b.threshold(c))
        if t != default:
            exc.append((c, t))
    has_top = a.has_top and b.has_top
    if not has_top:
        return FanOpen.empty()
    return FanOpen(has_top, a.has_bottom and b.has_bottom, default, tuple(exc))


@dataclass(frozen=True)
class FanFamily:
    """A directed family of fan points with a structural descriptor: an
    explicit finite set, one full column, or a spread reaching top."""

    kind: str  # "finite" | "column" | "spread"
    points: tuple[FanPoint, ...] = ()
    column: int = 0

    def __post_init__(self):
        if self.kind not in ("finite", "column", "spread"):
            raise WorkbenchError(f"bad fan family kind {self.kind!r}")
        if self.kind == "finite":
            if not self.points:
                raise WorkbenchError("finite family must be nonempty")
            for a in self.points:
                for b in self.points:
                    if not any(
                        fan_leq(a, c) and fan_leq(b, c) for c in self.points
                    ):
                        raise WorkbenchError("finite family is not directed")

    def enumerate(self, i: int) -> FanPoint:
        if self.kind == "finite":
            return self.points[i % len(self.points)]
        if self.kind == "column":
            return FanPoint.pair(self.column, i)
        # spread: alternate between two columns; top caps the family
        if i % 3 == 2:
            return FanPoint.top()
        return FanPoint.pair(i % 3, i // 3)


def fan_sup(family: FanFamily) -> FanPoint:
    """Supremum computed from the structural descriptor: a finite directed
    family has a greatest member, a full column sups to top, and any spread
    across columns can only bound at top."""
    if family.kind == "finite":
        for c in family.points:
            if all(fan_leq(a, c) for a in family.points):
                return c
        raise WorkbenchError("finite directed family lacks a greatest member")
    return FanPoint.top()


def fan_diagonal_refuter(candidate_base, test_bound: int):
    """Defeat a claimed countable base at top: pick a witness inside each
    candidate on its own column, then raise every threshold just past the
    witnesses. Every candidate then sticks out of the resulting Scott open.

    candidate_base maps an index n to a FanOpen; indices 0..test_bound are
    consulted. Raises NotNeighborhoodOfTopError if some candidate is not a
    Scott-open neighborhood of top.
    """
    from .certificates import NotFirstCountableCertificate

    witnesses = []
    candidates = []
    for n in range(test_bound + 1):
        u = candidate_base(n)
        if not (u.has_top and fan_is_scott_open(u)):
            raise NotNeighborhoodOfTopError(
                f"candidate {n} is not a Scott-open neighborhood of top"
            )
        t = u.threshold(n)
        if t is None:
            raise NotNeighborhoodOfTopError(
                f"candidate {n} misses column {n} entirely"
            )
        witnesses.append((n, t))
        candidates.append(fan_open_to_doc(u))
    return NotFirstCountableCertificate(
        space_ref="fan-lattice-scott",
        at="top",
        witnesses=tuple(witnesses),
        candidates=tuple(candidates),
    )


def diagonal_open_from_witnesses(witnesses) -> FanOpen:
    """The separating open: threshold one past each witness, default 0 beyond
    the tested columns (keeping it Scott-open with top)."""
    exc = tuple((n, m + 1) for n, m in sorted(witnesses))
    return FanOpen(has_top=True, has_bottom=False, default=0, exceptions=exc)


def fan_open_to_doc(u: FanOpen) -> dict:
    return {
        "has_top": u.has_top,
        "has_bottom": u.has_bottom,
        "default": u.default,
        "exceptions": [[c, t] for c, t in u.exceptions],
    }


def fan_open_from_doc(doc: dict) -> FanOpen:
    return FanOpen(
        bool(doc["has_top"]),
        bool(doc["has_bottom"]),
        doc["default"],
        tuple((int(c), t if t is None else int(t)) for c, t in doc["exceptions"]),
    )


@dataclass(frozen=True)
class FanClosed:
    """Complement of a FanOpen: bottom plus finite column prefixes, possibly
    with top (exactly when the open lacks it)."""

    open_complement: FanOpen

    def contains(self, p: FanPoint) -> bool:
        if self.open_complement.is_whole():
            return False
        if p.kind == "bottom":
            return True
        return not self.open_complement.contains(p)

    def column_height(self, n: int) -> int | None:
        """Points (n, m) with m below the height lie in the set; None means
        the whole column does."""
        return self.open_complement.threshold(n)


def fan_closed_points(closed: FanClosed) -> list[FanPoint]:
    """Every point of a proper closed set with finite support (complement has
    default threshold 0, so only the exception columns carry prefixes)."""
    u = closed.open_complement
    if u.default != 0 or not u.has_top:
        raise WorkbenchError("only finite-support proper closed sets enumerate")
    pts = [FanPoint.bottom()]
    for c, t in u.exceptions:
        if t is None:
            raise WorkbenchError("whole-column closed sets do not enumerate")
        pts.extend(FanPoint.pair(c, m) for m in range(t))
    return pts


def fan_closed_classify(closed: FanClosed):
    """Irreducibility of a closed set by the symbolic case split: the whole
    lattice (generic top), bottom alone (generic bottom), one column prefix
    (generic at its tip), and anything touching two columns is reducible."""
    u = closed.open_complement
    if u.is_whole():
        raise WorkbenchError("the empty set is not classified")
    if not u.has_top:
        return True, FanPoint.top()  # complement of the empty open: the lattice
    if not fan_is_scott_open(u):
        raise WorkbenchError("complement is not Scott open; not a closed set")
    if u.default > 0:
        return False, None  # every column touched: splits across any two
    touched = [(c, t) for c, t in u.exceptions if t > 0]
    if not touched:
        return True, FanPoint.bottom()
    if len(touched) == 1:
        c, t = touched[0]
        return True, FanPoint.pair(c, t - 1)
    return False, None


def fan_split_closed(closed: FanClosed):
    """For a closed set touching at least two columns: two closed sets that
    cover it while each missing part of it."""
    u = closed.open_complement
    if u.default != 0:
        raise WorkbenchError("splitting needs finite column support")
    touched = [(c, t) for c, t in u.exceptions if t is not None and t > 0]
    if len(touched) < 2:
        raise WorkbenchError("splitting needs two touched columns")
    a, ha = touched[0]
    left = FanClosed(FanOpen(has_top=True, default=0, exceptions=((a, ha),)))
    rest = tuple((c, t) for c, t in u.exceptions if c != a)
    right = FanClosed(FanOpen(has_top=True, default=0, exceptions=rest))
    return left, right


def fan_sober_check(samples=()):
    """Sobriety by symbolic case analysis.

    Proper nonempty closed sets are bottom plus finite column prefixes; one
    touching two columns splits into two closed sets covering it with neither
    containing it, so the irreducible closed sets are exactly the point
    closures. The split is validated point-by-point on each sampled
    multi-column closed set, which is finite and fully enumerated.

    Returns (verdict, generic-point descriptor, number of validated splits).
    """
    split_checked = 0
    for closed in samples:
        u = closed.open_complement
        if not fan_is_scott_open(u):
            return False, None, split_checked
        irreducible, _ = fan_closed_classify(closed)
        if irreducible:
            continue
        left, right = fan_split_closed(closed)
        if not (fan_is_scott_open(left.open_complement)
                and fan_is_scott_open(right.open_complement)):
            return False, None, split_checked
        pts = fan_closed_points(closed)
        if not all(left.contains(p) or right.contains(p) for p in pts):
            return False, None, split_checked
        if all(left.contains(p) for p in pts) or all(
            right.contains(p) for p in pts
        ):
            return False, None, split_checked
        split_checked += 1
    generic = {
        "bottom-closure": "bottom",
        "pair-closure": "(n,m) generates bottom plus its column prefix",
        "whole-lattice": "top",
    }
    return True, generic, split_checked


def fan_point_closure(p: FanPoint) -> FanClosed:
    if p.kind == "top":
        return FanClosed(FanOpen.empty())
    if p.kind == "bottom":
        return FanClosed(FanOpen(has_top=True, default=0))
    return FanClosed(
        FanOpen(has_top=True, default=0, exceptions=((p.n, p.m + 1),))
    )


def fan_sublattice_oracle(width: int = 6, height: int = 6):
    """Finite truncation {bottom, top} plus a width-by-height pair grid, as a
    concrete poset; its Scott opens with column sups redirected to top serve
    as the brute-force oracle for fan_is_scott_open."""
    n = width * height + 2
    bottom = 0
    top = n - 1

    def idx(c, m):
        return 1 + c * height + m

    pairs = []
    for c in range(width):
        for m in range(height):
            pairs.append((bottom, idx(c, m)))
            pairs.append((idx(c, m), top))
            if m + 1 < height:
                pairs.append((idx(c, m), idx(c, m + 1)))
    pairs.append((bottom, top))
    poset = FinitePoset.from_pairs(n, pairs)
    return poset, idx, bottom, top


def oracle_scott_open(poset: FinitePoset, idx, bottom: int, top: int,
                      width: int, height: int, mask: int) -> bool:
    """Scott-openness on the truncated fan with every full column treated as
    supping to top (simulating the infinite columns)."""
    if not poset.is_up_set(mask):
        return False
    if mask >> top & 1:
        for c in range(width):
            if not any(mask >> idx(c, m) & 1 for m in range(height)):
                return False
    if mask >> bottom & 1 and mask != (1 << poset.n) - 1:
        return False
    return True


def fan_open_to_sublattice_mask(u: FanOpen, idx, width: int, height: int,
                                bottom: int, top: int) -> int:
    mask = 0
    for c in range(width):
        t = u.threshold(c)
        if t is None:
            continue
        for m in range(height):
            if m >= t:
                mask |= 1 << idx(c, m)
    if u.has_top:
        mask |= 1 << top
    if u.has_bottom:
        mask |= 1 << bottom
    return mask
