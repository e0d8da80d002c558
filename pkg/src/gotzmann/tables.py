"""Hilbert function values over a finite degree window.

A table records H(0..D) together with the ambient number of variables and a
tail certificate: the flag is set when the last recorded step achieves the
minimal Macaulay growth, H(D) = mg_growth(H(D-1), n-1).  Only certified
tables pin down an infinite extension (continue with minimal growth forever),
which is what the classification routines lean on.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParseError
from .macaulay import binom, mg_growth

__all__ = ["HilbertFunctionTable", "parse_table", "format_table"]


@dataclass(frozen=True)
class HilbertFunctionTable:
    n: int
    values: tuple[int, ...]
    tail_certified: bool = False

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"need at least one variable, got n={self.n}")
        if not self.values:
            raise ValueError("table needs at least the value H(0)")
        for t, v in enumerate(self.values):
            if v < 0:
                raise ValueError(f"H({t}) = {v} is negative")
            if v > binom(t + self.n - 1, self.n - 1):
                raise ValueError(
                    f"H({t}) = {v} exceeds the full slice dimension "
                    f"{binom(t + self.n - 1, self.n - 1)} for n={self.n}"
                )

    @classmethod
    def from_values(cls, n: int, values) -> "HilbertFunctionTable":
        """Build a table and compute the tail certificate from its last step."""
        vals = tuple(int(v) for v in values)
        certified = len(vals) >= 2 and vals[-1] == mg_growth(vals[-2], n - 1)
        return cls(n, vals, certified)

    @property
    def degree_bound(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, t: int) -> int:
        if not 0 <= t <= self.degree_bound:
            raise IndexError(f"degree {t} outside table window 0..{self.degree_bound}")
        return self.values[t]

    def macaulay_feasible(self) -> bool:
        """True when every step grows at least minimally (so some ideal attains it)."""
        return all(
            self.values[t + 1] >= mg_growth(self.values[t], self.n - 1)
            for t in range(self.degree_bound)
        )


def parse_table(text: str) -> HilbertFunctionTable:
    """Parse table text: an ``n=<int>`` header, then either one ``H(<t>)=<value>``
    line per degree or a single comma-separated list of values."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines or not lines[0].replace(" ", "").startswith("n="):
        raise ParseError("table must start with an n=<int> header line")
    try:
        n = int(lines[0].split("=", 1)[1])
    except ValueError as exc:
        raise ParseError(f"bad header line {lines[0]!r}") from exc
    body = lines[1:]
    if not body:
        raise ParseError("table has no values")
    if len(body) == 1 and "," in body[0]:
        payload = body[0]
        if "=" in payload:
            payload = payload.split("=", 1)[1]
        try:
            values = [int(v) for v in payload.split(",") if v.strip() != ""]
        except ValueError as exc:
            raise ParseError(f"bad value list {body[0]!r}") from exc
        return HilbertFunctionTable.from_values(n, values)
    entries = {}
    for ln in body:
        m = ln.replace(" ", "")
        if not (m.startswith("H(") and "=" in m):
            raise ParseError(f"bad table line {ln!r}")
        head, _, val = m.partition("=")
        try:
            t = int(head[2:-1])
            entries[t] = int(val)
        except ValueError as exc:
            raise ParseError(f"bad table line {ln!r}") from exc
    degree = max(entries)
    if sorted(entries) != list(range(degree + 1)):
        raise ParseError("table lines must cover every degree 0..D exactly once")
    return HilbertFunctionTable.from_values(n, [entries[t] for t in range(degree + 1)])


def format_table(table: HilbertFunctionTable) -> str:
    lines = [f"n={table.n}"]
    lines.extend(f"H({t})={v}" for t, v in enumerate(table.values))
    return "\n".join(lines) + "\n"
