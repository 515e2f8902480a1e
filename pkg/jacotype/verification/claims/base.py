"""Abstract Claim interface and the parameter record every claim accepts."""

from __future__ import annotations

import abc
import random
from typing import Any

from pydantic import BaseModel, Field

from jacotype.cliques.census import clique_census
from jacotype.config import (
    CENSUS_BUDGET,
    CIRCUMFERENCE_BUDGET,
    COVER_BUDGET,
    DEFAULT_SEED,
    SUBSET_ORACLE_BUDGET,
)
from jacotype.errors import InvalidArgumentError
from jacotype.graphs.base import CliqueGraph
from jacotype.sequences.spec import SequenceSpec
from jacotype.verification.oracles import subset_census
from jacotype.verification.report import ClaimReport, ClaimStatus


class ClaimParams(BaseModel):
    """Instance range, seed and budgets for one claim run.

    ``n`` pins a single order; ``n_max`` scans 1..n_max. With neither, each
    claim uses its own default range.
    """

    family: SequenceSpec | None = None
    n: int | None = None
    n_max: int | None = None
    seed: int = DEFAULT_SEED
    random_cases: int | None = None
    """Random instances; each claim has its own default."""
    subset_budget: int = SUBSET_ORACLE_BUDGET
    census_budget: int = CENSUS_BUDGET
    cycle_budget: int = CIRCUMFERENCE_BUDGET
    cover_budget: int = COVER_BUDGET
    force: bool = False

    def orders(self, default_max: int, default_min: int = 1) -> range:
        if self.n is not None:
            if self.n < 1:
                raise InvalidArgumentError(f"n must be >= 1, got {self.n}")
            return range(self.n, self.n + 1)
        if self.n_max is not None:
            if self.n_max < 1:
                raise InvalidArgumentError(f"n_max must be >= 1, got {self.n_max}")
            return range(default_min, self.n_max + 1)
        return range(default_min, default_max + 1)

    def rng(self) -> random.Random:
        return random.Random(self.seed)


def describe(orders: range, label: str = "n") -> str:
    if len(orders) == 1:
        return f"{label}={orders.start}"
    if not orders:
        return f"{label} in (empty)"
    return f"{orders.start}<={label}<={orders.stop - 1}"


class Tally(BaseModel):
    """Running evidence for one claim."""

    checked: int = 0
    failures: list[dict[str, Any]] = Field(default_factory=list)
    skipped: list[str] = Field(default_factory=list)

    def record(self, ok: bool, detail: dict[str, Any]) -> None:
        self.checked += 1
        if not ok:
            self.failures.append(detail)

    def skip(self, note: str) -> None:
        self.skipped.append(note)

    @property
    def status(self) -> ClaimStatus:
        if self.failures:
            return "refuted"
        if self.skipped or not self.checked:
            return "partial"
        return "verified"

    def witness(self, limit: int = 5) -> dict[str, Any] | None:
        if not self.failures:
            return None
        return {
            "first": self.failures[0],
            "failures": len(self.failures),
            "examples": self.failures[:limit],
        }

    def notes(self) -> list[str]:
        out = [f"{self.checked} instances checked"]
        out.extend(f"skipped: {s}" for s in self.skipped)
        return out


class Claim(abc.ABC):
    """Base class for all registered claims."""

    @property
    @abc.abstractmethod
    def claim_id(self) -> str:
        """Registry identifier, e.g. ``P-2.1.4``."""

    @property
    @abc.abstractmethod
    def title(self) -> str:
        """One-line statement of what is checked."""

    @property
    @abc.abstractmethod
    def anchor(self) -> str:
        """Quoted phrase locating the statement in the source text."""

    @abc.abstractmethod
    def run(self, params: ClaimParams) -> ClaimReport:
        """Evaluate the statement with oracle computations only."""

    def report(
        self,
        tally: Tally,
        params: ClaimParams,
        *,
        family: str,
        parameter_range: str,
        witness: dict[str, Any] | None = None,
        parts: dict[str, ClaimStatus] | None = None,
        status: ClaimStatus | None = None,
        notes: list[str] | None = None,
    ) -> ClaimReport:
        """Build the report from *tally*; explicit arguments override it."""
        return ClaimReport(
            claim_id=self.claim_id,
            title=self.title,
            family=family,
            parameter_range=parameter_range,
            status=status or tally.status,
            witness=witness if witness is not None else tally.witness(),
            parts=parts or {},
            notes=tally.notes() + (notes or []),
            seed=params.seed,
        )


def default_families() -> list[SequenceSpec]:
    """The five generated families scanned by the family-wide claims."""
    return [
        SequenceSpec.positive_integers(),
        SequenceSpec.fibonacci(),
        SequenceSpec.modulo(5),
        SequenceSpec.set_sequence(3),
        SequenceSpec.linear_jaco(),
    ]


def cap_to_terms(spec: SequenceSpec, orders: range, spare: int = 0) -> range:
    """Explicit sequences only define graphs up to their length (less *spare*)."""
    if spec.kind == "explicit" and spec.terms is not None:
        return range(orders.start, min(orders.stop, len(spec.terms) + 1 - spare))
    return orders


def oracle_census(g: CliqueGraph, params: ClaimParams, *, include_empty: bool = False) -> tuple[int, ...]:
    """Subset-enumeration census within budget, ordered DFS census beyond it."""
    if g.order <= params.subset_budget:
        return subset_census(g, include_empty=include_empty, budget=params.subset_budget)
    counts = clique_census(g, budget=params.census_budget, force=params.force).counts
    return ((1,) if include_empty else ()) + counts


def at(values: tuple[int, ...], index: int) -> int:
    """values[index] with zeros past the end."""
    return values[index] if 0 <= index < len(values) else 0
