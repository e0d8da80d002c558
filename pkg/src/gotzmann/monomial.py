"""Monomials in n variables, the lexicographic order and lexsegment spaces.

The order throughout is the lexicographic order induced by x1 > x2 > ... > xn;
comparing exponent tuples componentwise from the left implements it directly.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

from .errors import ParseError
from .macaulay import binom

__all__ = [
    "Monomial",
    "MonomialSpace",
    "lex_compare",
    "enumerate_degree",
    "lex_top",
    "multiply_space",
    "parse_monomial",
    "format_monomial",
]


@dataclass(frozen=True)
class Monomial:
    """A monomial given by its exponent vector (index i holds the power of x_{i+1})."""

    exponents: tuple[int, ...]

    def __post_init__(self):
        if not self.exponents:
            raise ValueError("monomial needs at least one variable")
        if any(e < 0 for e in self.exponents):
            raise ValueError(f"negative exponent in {self.exponents}")

    @property
    def n(self) -> int:
        return len(self.exponents)

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    @property
    def max_index(self) -> int:
        """Largest i (1-based) with x_i dividing the monomial; undefined for 1."""
        for i in range(self.n, 0, -1):
            if self.exponents[i - 1] > 0:
                return i
        raise ValueError("max_index is undefined for the constant monomial 1")

    def divides(self, other: "Monomial") -> bool:
        self._check_same_ring(other)
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def __mul__(self, other: "Monomial") -> "Monomial":
        self._check_same_ring(other)
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def times_var(self, i: int) -> "Monomial":
        """Multiply by x_i (1-based)."""
        e = list(self.exponents)
        e[i - 1] += 1
        return Monomial(tuple(e))

    def divide_by_var(self, i: int) -> "Monomial":
        """Divide by x_i (1-based); requires x_i to divide the monomial."""
        e = list(self.exponents)
        if e[i - 1] == 0:
            raise ValueError(f"x{i} does not divide {self}")
        e[i - 1] -= 1
        return Monomial(tuple(e))

    def lcm(self, other: "Monomial") -> "Monomial":
        self._check_same_ring(other)
        return Monomial(tuple(max(a, b) for a, b in zip(self.exponents, other.exponents)))

    def _check_same_ring(self, other: "Monomial") -> None:
        if self.n != other.n:
            raise ValueError(f"ambient mismatch: {self.n} vs {other.n} variables")

    # Lexicographic comparisons (x1 > x2 > ... > xn); tuple order does the work.
    def __lt__(self, other: "Monomial") -> bool:
        self._check_same_ring(other)
        return self.exponents < other.exponents

    def __le__(self, other: "Monomial") -> bool:
        self._check_same_ring(other)
        return self.exponents <= other.exponents

    def __gt__(self, other: "Monomial") -> bool:
        self._check_same_ring(other)
        return self.exponents > other.exponents

    def __ge__(self, other: "Monomial") -> bool:
        self._check_same_ring(other)
        return self.exponents >= other.exponents

    def __str__(self) -> str:
        return format_monomial(self)

    def __repr__(self) -> str:
        return f"Monomial({self.exponents!r})"


def lex_compare(u: Monomial, v: Monomial) -> int:
    """-1, 0 or 1 according to u < v, u == v or u > v in the lexicographic order."""
    if u.n != v.n:
        raise ValueError(f"ambient mismatch: {u.n} vs {v.n} variables")
    if u.exponents == v.exponents:
        return 0
    return 1 if u.exponents > v.exponents else -1


@lru_cache(maxsize=None)
def enumerate_degree(n: int, d: int) -> tuple[Monomial, ...]:
    """All monomials of degree d in n variables, sorted descending in lex order."""
    if n < 1:
        raise ValueError(f"need at least one variable, got {n}")
    if d < 0:
        raise ValueError(f"degree must be nonnegative, got {d}")
    if n == 1:
        return (Monomial((d,)),)
    out = []
    for e in range(d, -1, -1):
        for tail in enumerate_degree(n - 1, d - e):
            out.append(Monomial((e,) + tail.exponents))
    return tuple(out)


@dataclass(frozen=True)
class MonomialSpace:
    """A set of distinct monomials of a single degree, kept in descending lex order."""

    n: int
    d: int
    members: tuple[Monomial, ...]

    def __post_init__(self):
        for m in self.members:
            if m.n != self.n:
                raise ValueError(f"member {m} lives in {m.n} variables, expected {self.n}")
            if m.degree != self.d:
                raise ValueError(f"member {m} has degree {m.degree}, expected {self.d}")

    @property
    def dim(self) -> int:
        return len(self.members)

    def __contains__(self, m: Monomial) -> bool:
        return m in set(self.members)

    @classmethod
    def from_monomials(cls, n: int, d: int, monomials) -> "MonomialSpace":
        members = tuple(sorted(set(monomials), reverse=True))
        return cls(n, d, members)


def lex_top(n: int, d: int, count: int) -> MonomialSpace:
    """The span of the ``count`` lex-largest monomials of degree d."""
    slice_ = enumerate_degree(n, d)
    if count < 0 or count > len(slice_):
        raise ValueError(f"count {count} out of range 0..{len(slice_)} for degree {d} in {n} variables")
    return MonomialSpace(n, d, slice_[:count])


def multiply_space(space: MonomialSpace) -> MonomialSpace:
    """The degree d+1 space spanned by x_i * u over all variables and members."""
    products = set()
    for u in space.members:
        for i in range(1, space.n + 1):
            products.add(u.times_var(i))
    return MonomialSpace(space.n, space.d + 1, tuple(sorted(products, reverse=True)))


_FACTOR_RE = re.compile(r"^x(\d+)(?:\^(\d+))?$")


def parse_monomial(text: str, n: int) -> Monomial:
    """Parse monomial syntax like ``x1^2*x3``; the constant monomial is ``1``."""
    body = text.strip().replace(" ", "")
    if not body:
        raise ParseError("empty monomial")
    if body == "1":
        return Monomial((0,) * n)
    exponents = [0] * n
    for factor in body.split("*"):
        match = _FACTOR_RE.match(factor)
        if match is None:
            raise ParseError(f"malformed monomial factor {factor!r} in {text!r}")
        index = int(match.group(1))
        power = int(match.group(2)) if match.group(2) else 1
        if not 1 <= index <= n:
            raise ParseError(f"variable x{index} out of range for n={n}")
        if power < 1:
            raise ParseError(f"exponent must be positive in factor {factor!r}")
        exponents[index - 1] += power
    return Monomial(tuple(exponents))


def format_monomial(m: Monomial) -> str:
    if m.degree == 0:
        return "1"
    parts = []
    for i, e in enumerate(m.exponents, start=1):
        if e == 1:
            parts.append(f"x{i}")
        elif e > 1:
            parts.append(f"x{i}^{e}")
    return "*".join(parts)
