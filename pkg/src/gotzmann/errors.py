"""Shared exception types."""

from __future__ import annotations


class CapExceededError(RuntimeError):
    """A configurable search or degree cap was hit before the computation finished."""

    def __init__(self, cap_name: str, limit: int, detail: str = ""):
        self.cap_name = cap_name
        self.limit = limit
        message = f"{cap_name} exceeded (limit {limit})"
        if detail:
            message += ": " + detail
        super().__init__(message)


class ParseError(ValueError):
    """Malformed textual input (monomial, polynomial, ideal or table syntax)."""
