"""Exact binomial arithmetic and Macaulay-representation operators.

Everything here works on plain Python integers, so all results are exact at
arbitrary precision.  The central object is the greedy binomial decomposition
of a positive integer at a fixed top index d,

    a = C(a_d + d, d) + C(a_{d-1} + d - 1, d - 1) + ... + C(a_k + k, k)

with a_d >= a_{d-1} >= ... >= a_k >= 0 and k >= 1, together with the three
index-shift operators built on it: minimal growth (``mg_growth``), the shrink
operator (``shrink``) and the extended growth bound (``plus``).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = [
    "binom",
    "MacaulayRep",
    "macaulay_rep",
    "mg_growth",
    "shrink",
    "plus",
]


def binom(m: int, k: int) -> int:
    """Binomial coefficient C(m, k), zero whenever m < k.

    The cutoff applies to negative m as well, so binom(-1, 2) == 0 and
    binom(-1, 0) == 0 while binom(0, 0) == 1.  This single convention makes
    every closed-form Hilbert value in the package come out right, including
    the vanishing below the first generator degree.
    """
    if k < 0:
        raise ValueError(f"binom: lower index must be nonnegative, got {k}")
    if m < k:
        return 0
    return math.comb(m, k)


@dataclass(frozen=True)
class MacaulayRep:
    """Greedy decomposition of a positive integer at top index ``d``.

    ``terms`` lists (a_j, j) pairs for j = d, d-1, ..., k; the represented
    integer is the sum of binom(a_j + j, j) over the terms.
    """

    d: int
    terms: tuple[tuple[int, int], ...]

    def value(self) -> int:
        return sum(binom(c + j, j) for c, j in self.terms)

    def coefficients_padded(self) -> tuple[int, ...]:
        """The a_j sequence from index d down to 1, padded with -1 sentinels.

        Useful for order comparisons: larger integers have lexicographically
        larger padded coefficient sequences.
        """
        by_index = dict((j, c) for c, j in self.terms)
        return tuple(by_index.get(j, -1) for j in range(self.d, 0, -1))


def _greedy_top(rest: int, j: int) -> int:
    """Largest c >= 0 with binom(c + j, j) <= rest (requires rest >= 1)."""
    c = 0
    while binom(c + 1 + j, j) <= rest:
        c += 1
    return c


def macaulay_rep(a: int, d: int) -> MacaulayRep:
    """The unique greedy representation of a positive integer ``a`` at index ``d``.

    Zero is deliberately rejected: callers own the conventions for 0 (both
    growth operators send 0 to 0 without consulting a representation).
    """
    if a <= 0:
        raise ValueError(f"macaulay_rep: a must be positive, got {a}")
    if d <= 0:
        raise ValueError(f"macaulay_rep: d must be positive, got {d}")
    terms: list[tuple[int, int]] = []
    rest = a
    j = d
    while rest > 0:
        if j < 1:
            raise AssertionError("greedy decomposition ran past index 1")
        c = _greedy_top(rest, j)
        terms.append((c, j))
        rest -= binom(c + j, j)
        j -= 1
    return MacaulayRep(d, tuple(terms))


def mg_growth(a: int, d: int) -> int:
    """Minimal growth operator: each C(a_j + j, j) becomes C(a_j + j + 1, j).

    Sends 0 to 0.  For a lexsegment space L of dimension ``a`` inside a degree
    slice of an n-variable polynomial ring, mg_growth(a, n - 1) is exactly the
    dimension of the space of its degree-(d+1) multiples.
    """
    if a < 0:
        raise ValueError(f"mg_growth: a must be nonnegative, got {a}")
    if a == 0:
        return 0
    rep = macaulay_rep(a, d)
    return sum(binom(c + j + 1, j) for c, j in rep.terms)


def shrink(a: int, d: int) -> int:
    """Shrink operator: each C(a_j + j, j) becomes C(a_j + j - 1, j); 0 maps to 0."""
    if a < 0:
        raise ValueError(f"shrink: a must be nonnegative, got {a}")
    if a == 0:
        return 0
    rep = macaulay_rep(a, d)
    return sum(binom(c + j - 1, j) for c, j in rep.terms)


def plus(a: int, n: int) -> int:
    """Extended growth bound on the (n-1)-th representation of ``a``.

    Writing the representation with s terms, the value is mg_growth(a, n - 1)
    when s >= n - 2, and otherwise mg_growth(a, n - 1) plus one for each of
    the unit binomials C(n - s - 1, n - s - 1), ..., C(2, 2).  Defined as 0
    for a = 0.
    """
    if n < 2:
        raise ValueError(f"plus: need at least two variables, got n={n}")
    if a < 0:
        raise ValueError(f"plus: a must be nonnegative, got {a}")
    if a == 0:
        return 0
    s = len(macaulay_rep(a, n - 1).terms)
    result = mg_growth(a, n - 1)
    if s < n - 2:
        result += n - 2 - s
    return result
