"""Ordinals below omega^omega in Cantor normal form, plus the symbol Omega
standing for the first uncountable ordinal.

A value is a strictly-decreasing list of (exponent, coefficient) terms with
positive coefficients, summing omega^e * c. Regularity of Omega is an axiom
of this layer: no countable family descriptor may claim to reach it.
"""

import re
from dataclasses import dataclass
from functools import total_ordering

from .errors import ParseError, WorkbenchError


@total_ordering
@dataclass(frozen=True)
class Ordinal:
    terms: tuple[tuple[int, int], ...] = ()
    is_omega1: bool = False

    def __post_init__(self):
        if self.is_omega1:
            if self.terms:
                raise WorkbenchError("Omega carries no CNF terms")
            return
        last = None
        for e, c in self.terms:
            if e < 0 or c < 1:
                raise WorkbenchError("exponents nonnegative, coefficients positive")
            if last is not None and e >= last:
                raise WorkbenchError("exponents must strictly decrease")
            last = e

    @classmethod
    def nat(cls, k: int) -> "Ordinal":
        if k < 0:
            raise WorkbenchError("naturals only")
        return cls(((0, k),)) if k else cls()

    @classmethod
    def omega_power(cls, e: int, c: int = 1) -> "Ordinal":
        return cls(((e, c),))

    def is_zero(self) -> bool:
        return not self.is_omega1 and not self.terms

    def is_limit(self) -> bool:
        """Limit ordinals only; zero does not count."""
        if self.is_omega1:
            return True
        return bool(self.terms) and self.terms[-1][0] > 0

    def is_successor(self) -> bool:
        return bool(self.terms) and self.terms[-1][0] == 0

    def succ(self) -> "Ordinal":
        if self.is_omega1:
            raise WorkbenchError("successor beyond Omega is out of range")
        if self.terms and self.terms[-1][0] == 0:
            e, c = self.terms[-1]
            return Ordinal(self.terms[:-1] + ((0, c + 1),))
        return Ordinal(self.terms + ((0, 1),))

    def pred(self) -> "Ordinal":
        if not self.is_successor():
            raise WorkbenchError("only successors have predecessors")
        e, c = self.terms[-1]
        if c > 1:
            return Ordinal(self.terms[:-1] + ((0, c - 1),))
        return Ordinal(self.terms[:-1])

    def cofinality(self) -> str:
        """'1' for zero and successors, 'omega' for limits in range, 'omega1'
        for Omega (regularity assumed)."""
        if self.is_omega1:
            return "omega1"
        if not self.is_limit():
            return "1"
        return "omega"

    def fundamental(self, n: int) -> "Ordinal":
        """n-th member of the canonical increasing sequence with supremum this
        limit ordinal; only limits below Omega have one."""
        if self.is_omega1:
            raise WorkbenchError("Omega has no countable fundamental sequence")
        if not self.is_limit():
            raise WorkbenchError("fundamental sequences exist for limits only")
        head = self.terms[:-1]
        e, c = self.terms[-1]
        if c > 1:
            head = head + ((e, c - 1),)
        if n == 0:
            return Ordinal(head)
        if e - 1 == 0:
            return Ordinal(head + ((0, n),))
        return Ordinal(head + ((e - 1, n),))

    def left_sub(self, other: "Ordinal") -> "Ordinal":
        """The unique d with self + d = other; requires self <= other < Omega."""
        if self.is_omega1 or other.is_omega1:
            raise WorkbenchError("left subtraction is for CNF ordinals")
        if other < self:
            raise WorkbenchError("left subtraction needs self <= other")
        for j, (ea, ca) in enumerate(self.terms):
            if j >= len(other.terms):
                raise WorkbenchError("left subtraction needs self <= other")
            eb, cb = other.terms[j]
            if (ea, ca) == (eb, cb):
                continue
            if ea < eb:
                return Ordinal(other.terms[j:])
            # ea == eb with ca < cb: the difference restores the coefficient
            return Ordinal(((eb, cb - ca),) + other.terms[j + 1:])
        return Ordinal(other.terms[len(self.terms):])

    def __lt__(self, other: "Ordinal") -> bool:
        if self.is_omega1:
            return False
        if other.is_omega1:
            return True
        # compare term lists lexicographically; missing terms rank lowest
        for (e1, c1), (e2, c2) in zip(self.terms, other.terms):
            if (e1, c1) != (e2, c2):
                return (e1, c1) < (e2, c2)
        return len(self.terms) < len(other.terms)

    def __str__(self) -> str:
        if self.is_omega1:
            return "Omega"
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.terms:
            if e == 0:
                parts.append(str(c))
            elif e == 1:
                parts.append("w" if c == 1 else f"w*{c}")
            else:
                parts.append(f"w^{e}" if c == 1 else f"w^{e}*{c}")
        return "+".join(parts)


OMEGA1 = Ordinal(is_omega1=True)
ZERO = Ordinal()
OMEGA = Ordinal.omega_power(1)

_TERM = re.compile(r"^(?:w(?:\^(\d+))?(?:\*(\d+))?|(\d+))$")


def parse_ordinal(text: str) -> Ordinal:
    """Inverse of str(): '0', 'Omega', or '+'-joined CNF terms like w^2*3."""
    text = text.strip()
    if text == "Omega":
        return OMEGA1
    if text == "0":
        return ZERO
    terms = []
    for part in text.split("+"):
        m = _TERM.match(part.strip())
        if not m:
            raise ParseError(f"bad ordinal term {part!r}")
        if m.group(3) is not None:
            terms.append((0, int(m.group(3))))
        else:
            e = int(m.group(1)) if m.group(1) else 1
            c = int(m.group(2)) if m.group(2) else 1
            terms.append((e, c))
    try:
        return Ordinal(tuple(terms))
    except WorkbenchError as exc:
        raise ParseError(str(exc)) from exc


def ord_compare(a: Ordinal, b: Ordinal) -> int:
    if a < b:
        return -1
    return 0 if a == b else 1


def ord_succ(a: Ordinal) -> Ordinal:
    return a.succ()


def ord_is_limit(a: Ordinal) -> bool:
    return a.is_limit()


def ord_cofinality(a: Ordinal) -> str:
    return a.cofinality()


def random_ordinal(rng, max_exp: int = 3, max_coeff: int = 6, allow_omega1=False) -> Ordinal:
    if allow_omega1 and rng.random() < 0.1:
        return OMEGA1
    exps = sorted(rng.sample(range(max_exp + 1), rng.randint(0, max_exp)), reverse=True)
    return Ordinal(tuple((e, rng.randint(1, max_coeff)) for e in exps))
