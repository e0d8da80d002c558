"""Monomial ideals: minimal generators, Hilbert functions, saturation,
structural predicates, lexification, Gotzmann detection, Eliahou-Kervaire
Betti numbers and the exhaustive enumeration oracle.

A monomial ideal is stored by its minimal generating set, which is unique.
All queries are pure; nothing here mutates shared state.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import CapExceededError, ParseError
from .macaulay import binom, mg_growth
from .monomial import (
    Monomial,
    MonomialSpace,
    enumerate_degree,
    format_monomial,
    lex_top,
    multiply_space,
    parse_monomial,
)
from .tables import HilbertFunctionTable

__all__ = [
    "MonomialIdeal",
    "BettiTable",
    "GotzmannReport",
    "minimalize",
    "hilbert",
    "hilbert_stable",
    "is_stable",
    "is_lexsegment",
    "is_universal_lexsegment",
    "universal_pattern",
    "saturate",
    "lexify",
    "is_gotzmann_space",
    "is_gotzmann_ideal",
    "ek_betti",
    "is_trivially_gotzmann",
    "apply_permutation",
    "enumerate_ideals_with_hf",
    "parse_ideal",
    "format_ideal",
]


def _gen_sort_key(m: Monomial):
    # by degree, then descending lex within a degree
    return (m.degree, tuple(-e for e in m.exponents))


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal, held by its minimal generators.

    Use :func:`minimalize` to build one from an arbitrary generating list;
    the constructor trusts its input to already be an antichain under
    divisibility.
    """

    n: int
    gens: tuple[Monomial, ...]

    def __post_init__(self):
        for g in self.gens:
            if g.n != self.n:
                raise ValueError(f"generator {g} lives in {g.n} variables, expected {self.n}")

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def max_gen_degree(self) -> int:
        if self.is_zero:
            raise ValueError("the zero ideal has no generators")
        return max(g.degree for g in self.gens)

    def contains(self, u: Monomial) -> bool:
        return any(g.divides(u) for g in self.gens)

    def degree_slice(self, t: int) -> MonomialSpace:
        members = tuple(m for m in enumerate_degree(self.n, t) if self.contains(m))
        return MonomialSpace(self.n, t, members)

    def generators_by_degree(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for g in self.gens:
            out[g.degree] = out.get(g.degree, 0) + 1
        return out

    def __str__(self) -> str:
        if self.is_zero:
            return "(0)"
        return "(" + ", ".join(format_monomial(g) for g in self.gens) + ")"


def minimalize(gens, n: int) -> MonomialIdeal:
    """Drop every monomial divisible by another one in the list."""
    ordered = sorted(set(gens), key=_gen_sort_key)
    kept: list[Monomial] = []
    for m in ordered:
        if not any(g.divides(m) for g in kept):
            kept.append(m)
    return MonomialIdeal(n, tuple(kept))


def hilbert(ideal: MonomialIdeal, degree_bound: int) -> HilbertFunctionTable:
    """H(t) = number of degree-t monomials in the ideal, for 0 <= t <= degree_bound."""
    if degree_bound < 0:
        raise ValueError(f"degree bound must be nonnegative, got {degree_bound}")
    values = [
        sum(1 for m in enumerate_degree(ideal.n, t) if ideal.contains(m))
        for t in range(degree_bound + 1)
    ]
    return HilbertFunctionTable.from_values(ideal.n, values)


def is_stable(ideal: MonomialIdeal) -> bool:
    """True when every generator u admits all exchanges x_i*u/x_{m(u)} for i < m(u)."""
    for u in ideal.gens:
        if u.degree == 0:
            continue
        top = u.max_index
        for i in range(1, top):
            if not ideal.contains(u.times_var(i).divide_by_var(top)):
                return False
    return True


def hilbert_stable(ideal: MonomialIdeal, degree_bound: int) -> HilbertFunctionTable:
    """Closed-form Hilbert values for a stable ideal.

    H(t) = sum over generators u of binom(t - deg u + n - m(u), n - m(u)).
    """
    if not is_stable(ideal):
        raise ValueError("hilbert_stable requires a stable ideal")
    n = ideal.n
    values = []
    for t in range(degree_bound + 1):
        values.append(
            sum(binom(t - u.degree + n - u.max_index, n - u.max_index) for u in ideal.gens)
        )
    return HilbertFunctionTable.from_values(n, values)


def is_lexsegment(ideal: MonomialIdeal) -> bool:
    """True when every degree slice up to the top generator degree is a lex top segment."""
    if ideal.is_zero:
        return True
    n = ideal.n
    for t in range(ideal.max_gen_degree + 1):
        slice_ = ideal.degree_slice(t)
        if slice_.members != lex_top(n, t, slice_.dim).members:
            return False
    return True


def universal_pattern(ideal: MonomialIdeal) -> tuple[int, ...] | None:
    """Exponent offsets (b_1, ..., b_s) when the generators have the nested shape

        x1^(b1+1), x1^b1 x2^(b2+1), ..., x1^b1 ... x_{s-1}^b_{s-1} x_s^(bs+1),

    else None.  The zero ideal matches vacuously with the empty tuple.
    """
    s = len(ideal.gens)
    if s == 0:
        return ()
    if s > ideal.n:
        return None
    gens = sorted(ideal.gens, key=_gen_sort_key)
    bs: list[int] = []
    for i, g in enumerate(gens, start=1):
        e = g.exponents
        if any(e[j] != bs[j] for j in range(i - 1)):
            return None
        if any(e[j] != 0 for j in range(i, ideal.n)):
            return None
        if e[i - 1] < 1:
            return None
        bs.append(e[i - 1] - 1)
    return tuple(bs)


def is_universal_lexsegment(ideal: MonomialIdeal) -> bool:
    """Lexsegment with at most n generators (and a proper ideal)."""
    if ideal.is_zero:
        return True
    if len(ideal.gens) > ideal.n or ideal.max_gen_degree == 0:
        return False
    return is_lexsegment(ideal)


def _colon_by_variable(ideal: MonomialIdeal, i: int) -> MonomialIdeal:
    gens = []
    for g in ideal.gens:
        if g.exponents[i - 1] > 0:
            gens.append(g.divide_by_var(i))
        else:
            gens.append(g)
    return minimalize(gens, ideal.n)


def _intersect(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    if a.is_zero or b.is_zero:
        return MonomialIdeal(a.n, ())
    gens = [u.lcm(v) for u in a.gens for v in b.gens]
    return minimalize(gens, a.n)


def saturate(ideal: MonomialIdeal) -> MonomialIdeal:
    """Stabilized colon by the irrelevant ideal (x_1, ..., x_n).

    One colon step intersects the variable colons; iteration reaches a
    fixpoint because generator degrees strictly drop until stable.
    """
    current = ideal
    while True:
        colons = [_colon_by_variable(current, i) for i in range(1, current.n + 1)]
        step = colons[0]
        for other in colons[1:]:
            step = _intersect(step, other)
        if set(step.gens) == set(current.gens):
            return current
        current = step


def _lexify_with_degree(ideal: MonomialIdeal, degree_cap: int) -> tuple[MonomialIdeal, int]:
    n = ideal.n
    if ideal.is_zero:
        return ideal, 0
    top = ideal.max_gen_degree
    gens: list[Monomial] = []
    prev: MonomialSpace | None = None
    k = 0
    while True:
        if k > degree_cap:
            raise CapExceededError(
                "lexification degree cap", degree_cap,
                f"no stabilization by degree {degree_cap}",
            )
        h_k = sum(1 for m in enumerate_degree(n, k) if ideal.contains(m))
        slice_k = lex_top(n, k, h_k)
        if prev is None or prev.dim == 0:
            shadow: frozenset[Monomial] = frozenset()
        else:
            shadow = frozenset(multiply_space(prev).members)
        gens.extend(m for m in slice_k.members if m not in shadow)
        if k >= top:
            h_next = sum(1 for m in enumerate_degree(n, k + 1) if ideal.contains(m))
            if h_next == mg_growth(h_k, n - 1):
                return minimalize(gens, n), k
        prev = slice_k
        k += 1


def lexify(ideal: MonomialIdeal, degree_cap: int = 64) -> MonomialIdeal:
    """The lexsegment ideal with the same Hilbert function.

    Built degree by degree: the degree-k slice is the lex top segment of the
    matching dimension, and new generators are the members not reached by
    multiplying the previous slice.  The loop stops at the first degree past
    the top generator degree where the next value grows minimally: from there
    on the lex slices are exactly the multiples of the previous one, so no
    further generators can occur.
    """
    result, _ = _lexify_with_degree(ideal, degree_cap)
    return result


def is_gotzmann_space(space: MonomialSpace) -> bool:
    """Does multiplying by the variables achieve the minimal Macaulay growth?"""
    return multiply_space(space).dim == mg_growth(space.dim, space.n - 1)


@dataclass(frozen=True)
class GotzmannReport:
    gotzmann: bool
    generator_count: int
    lex_generator_count: int
    generators_by_degree: dict[int, int]
    lex_generators_by_degree: dict[int, int]
    first_non_gotzmann_degree: int | None
    lexification: MonomialIdeal
    certified_degree: int

    def __bool__(self) -> bool:
        return self.gotzmann


def is_gotzmann_ideal(ideal: MonomialIdeal, degree_cap: int = 64) -> GotzmannReport:
    """Compare the number of minimal generators with that of the lexification.

    Equality is the whole test; the report adds the per-degree generator
    counts and the first degree (if any) whose slice fails to grow minimally.
    """
    lex, stop_degree = _lexify_with_degree(ideal, degree_cap)
    first_bad = None
    if not ideal.is_zero:
        for t in range(ideal.max_gen_degree, stop_degree + 1):
            if not is_gotzmann_space(ideal.degree_slice(t)):
                first_bad = t
                break
    return GotzmannReport(
        gotzmann=len(ideal.gens) == len(lex.gens),
        generator_count=len(ideal.gens),
        lex_generator_count=len(lex.gens),
        generators_by_degree=ideal.generators_by_degree(),
        lex_generators_by_degree=lex.generators_by_degree(),
        first_non_gotzmann_degree=first_bad,
        lexification=lex,
        certified_degree=stop_degree,
    )


@dataclass
class BettiTable:
    """Graded Betti numbers as a map (homological degree, internal degree) -> count."""

    entries: dict[tuple[int, int], int] = field(default_factory=dict)

    def beta(self, i: int) -> int:
        return sum(v for (h, _), v in self.entries.items() if h == i)

    def max_homological_degree(self) -> int:
        return max((i for (i, _) in self.entries), default=0)

    def __str__(self) -> str:
        if not self.entries:
            return "zero resolution"
        lines = []
        for (i, j) in sorted(self.entries):
            lines.append(f"beta_{{{i},{j}}} = {self.entries[(i, j)]}")
        return "\n".join(lines)


def ek_betti(ideal: MonomialIdeal) -> BettiTable:
    """Graded Betti numbers of a stable ideal.

    beta_{i, i+j} = sum over generators u of degree j of binom(m(u) - 1, i).
    """
    if not is_stable(ideal):
        raise ValueError("ek_betti requires a stable ideal")
    table = BettiTable()
    for u in ideal.gens:
        j = u.degree
        top = u.max_index
        for i in range(top):
            key = (i, i + j)
            table.entries[key] = table.entries.get(key, 0) + binom(top - 1, i)
    return table


def apply_permutation(ideal: MonomialIdeal, perm: tuple[int, ...]) -> MonomialIdeal:
    """Relabel variables: x_i 's exponent moves to position perm[i-1] (1-based)."""
    gens = []
    for g in ideal.gens:
        e = [0] * ideal.n
        for i, exp in enumerate(g.exponents, start=1):
            e[perm[i - 1] - 1] = exp
        gens.append(Monomial(tuple(e)))
    return minimalize(gens, ideal.n)


def is_trivially_gotzmann(ideal: MonomialIdeal) -> tuple[int, ...] | None:
    """A variable permutation making the ideal lexsegment, or None.

    Searches all n! permutations (identity first), so keep n small.
    """
    if ideal.n > 8:
        raise ValueError("permutation search is limited to n <= 8")
    for perm in itertools.permutations(range(1, ideal.n + 1)):
        if is_lexsegment(apply_permutation(ideal, perm)):
            return perm
    return None


def enumerate_ideals_with_hf(
    table: HilbertFunctionTable,
    degree_bound: int | None = None,
    state_cap: int = 10**6,
) -> list[MonomialIdeal]:
    """All monomial ideals, truncated at the degree bound, whose Hilbert values
    match the table on 0..degree_bound.

    Works degree by degree: each slice must contain all variable multiples of
    the previous slice and have exactly the prescribed dimension, so the free
    choices at degree t are the subsets completing the forced part.  The
    result order is the construction order (completion subsets enumerated
    along descending lex), which is deterministic.  Infeasible tables yield
    the empty list; a blow-up beyond ``state_cap`` explored states raises.
    """
    n = table.n
    degree = table.degree_bound if degree_bound is None else degree_bound
    if degree > table.degree_bound:
        raise ValueError(f"degree bound {degree} exceeds table window {table.degree_bound}")
    results: list[MonomialIdeal] = []
    states = 0
    shadow_cache: dict[frozenset[Monomial], frozenset[Monomial]] = {}

    def shadow_of(members: frozenset[Monomial]) -> frozenset[Monomial]:
        cached = shadow_cache.get(members)
        if cached is None:
            cached = frozenset(
                u.times_var(i) for u in members for i in range(1, n + 1)
            )
            shadow_cache[members] = cached
        return cached

    def extend(t: int, prev: frozenset[Monomial], gens: tuple[Monomial, ...]) -> None:
        nonlocal states
        states += 1
        if states > state_cap:
            raise CapExceededError("enumeration state cap", state_cap)
        if t > degree:
            results.append(minimalize(gens, n))
            return
        want = table[t]
        slice_all = enumerate_degree(n, t)
        if want > len(slice_all):
            return
        base = shadow_of(prev, t) if prev else frozenset()
        need = want - len(base)
        if need < 0:
            return
        free = [m for m in slice_all if m not in base]
        for combo in itertools.combinations(free, need):
            members = base | frozenset(combo)
            extend(t + 1, members, gens + combo)

    extend(0, frozenset(), ())
    return results


def parse_ideal(text: str) -> MonomialIdeal:
    """Parse ideal text: an ``n=<int>`` header then one generator per line."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines or not lines[0].replace(" ", "").startswith("n="):
        raise ParseError("ideal must start with an n=<int> header line")
    try:
        n = int(lines[0].split("=", 1)[1])
    except ValueError as exc:
        raise ParseError(f"bad header line {lines[0]!r}") from exc
    if n < 1:
        raise ParseError(f"need at least one variable, got n={n}")
    gens = [parse_monomial(ln, n) for ln in lines[1:]]
    return minimalize(gens, n)


def format_ideal(ideal: MonomialIdeal) -> str:
    lines = [f"n={ideal.n}"]
    lines.extend(format_monomial(g) for g in ideal.gens)
    return "\n".join(lines) + "\n"
