"""Exception types shared across jacotype."""

from __future__ import annotations


class JacoError(Exception):
    """Base class for every error raised by jacotype."""


class InvalidArgumentError(JacoError, ValueError):
    """Raised for malformed specs, zero indices, unknown formats or claims."""


class IndexOutOfRangeError(JacoError, IndexError):
    """Raised when an explicit sequence or subset index runs out."""


class PreconditionViolationError(JacoError, ValueError):
    """Raised when an operation needs a non-decreasing sequence and gets another."""


class CountOverflowError(JacoError, OverflowError):
    """Raised when a count leaves the 64-bit range."""


class BudgetExceededError(JacoError, RuntimeError):
    """Raised when an exhaustive search is asked for more than its budget."""

    def __init__(self, what: str, budget: int, requested: int) -> None:
        self.what = what
        self.budget = budget
        self.requested = requested
        super().__init__(
            f"{what}: order {requested} exceeds budget {budget} "
            f"(exhaustive search; pass force to override)"
        )
