"""Countable directed streams and chain extraction.

A stream presents a countable directed set through three callables: an
enumerator (index to element), a comparability oracle, and a binary
upper-bound oracle returning an element of the set. Chain extraction folds
the upper-bound oracle over the enumeration prefix, validating every oracle
answer on the way.
"""

from dataclasses import dataclass
from typing import Callable

from .errors import OracleInconsistentError, WorkbenchError


@dataclass(frozen=True)
class CountableDirectedStream:
    elems: Callable[[int], object]
    leq: Callable[[object, object], bool]
    upper_bound: Callable[[object, object], object]

    def checked_upper_bound(self, a, b):
        u = self.upper_bound(a, b)
        if not (self.leq(a, u) and self.leq(b, u)):
            raise OracleInconsistentError(
                f"claimed upper bound {u!r} does not dominate {a!r} and {b!r}"
            )
        return u


def extract_chain(stream: CountableDirectedStream, k: int) -> list:
    """First k members of a chain C inside the stream's set with the n-th
    chain member dominating the n-th enumerated element."""
    if k < 1:
        raise WorkbenchError("prefix length must be at least 1")
    chain = [stream.elems(0)]
    for i in range(1, k):
        c = stream.elems(i)
        for prev in chain:
            c = stream.checked_upper_bound(c, prev)
        chain.append(c)
    for a, b in zip(chain, chain[1:]):
        if not stream.leq(a, b):
            raise OracleInconsistentError("extracted sequence is not a chain")
    for i in range(k):
        if not stream.leq(stream.elems(i), chain[i]):
            raise OracleInconsistentError("chain member fails to dominate prefix")
    return chain


def finite_cycle_stream(elements, leq) -> CountableDirectedStream:
    """A finite directed set enumerated with repetition; upper bounds are
    found by scanning the set."""
    elements = list(elements)
    if not elements:
        raise WorkbenchError("stream needs at least one element")

    def ub(a, b):
        for c in elements:
            if leq(a, c) and leq(b, c):
                return c
        raise OracleInconsistentError("set is not directed")

    return CountableDirectedStream(
        elems=lambda i: elements[i % len(elements)], leq=leq, upper_bound=ub
    )


def fan_column_stream(column: int) -> CountableDirectedStream:
    from .fan_space import FanPoint, fan_leq

    def ub(a, b):
        return a if fan_leq(b, a) else b

    return CountableDirectedStream(
        elems=lambda i: FanPoint.pair(column, i), leq=fan_leq, upper_bound=ub
    )


def permuted_nat_stream(rng, block: int = 16) -> CountableDirectedStream:
    """The naturals under their usual order, enumerated out of order: each
    block of `block` consecutive values appears in a seeded shuffle."""
    perms = {}

    def elems(i):
        b = i // block
        if b not in perms:
            order = list(range(b * block, (b + 1) * block))
            rng.shuffle(order)
            perms[b] = order
        return perms[b][i % block]

    return CountableDirectedStream(
        elems=elems, leq=lambda a, b: a <= b, upper_bound=max
    )
