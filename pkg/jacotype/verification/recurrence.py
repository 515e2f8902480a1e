"""Incremental census engines driven by in-degrees of each new vertex.

When the terms are non-decreasing, the in-neighbours of v_{m+1} form a
clique, so extending J_m to J_{m+1} with l = d^-(v_{m+1}) adds exactly
C(l, i - 1) cliques of size i (the new vertex plus any i - 1 of them).
"""

from __future__ import annotations

import logging
from math import comb

from pydantic import BaseModel, ConfigDict

from jacotype.cliques.census import CliqueCensus
from jacotype.errors import InvalidArgumentError, PreconditionViolationError
from jacotype.graphs.jaco import JacoTypeGraph, build_graph, extend_graph
from jacotype.sequences.generator import is_non_decreasing, iter_terms
from jacotype.sequences.spec import SequenceSpec

logger = logging.getLogger(__name__)


class ExtensionStep(BaseModel):
    """One extension J_m -> J_{m+1} under the printed binomial form."""

    model_config = ConfigDict(frozen=True)

    row: int
    """m + 1, the order after extending."""

    in_degree: int
    predicted: tuple[int, ...]
    actual: tuple[int, ...]

    @property
    def holds(self) -> bool:
        return self.predicted == self.actual


def _require_non_decreasing(spec: SequenceSpec, n: int) -> None:
    terms = tuple(iter_terms(spec, n))
    if not is_non_decreasing(terms):
        raise PreconditionViolationError(
            f"recurrence census needs non-decreasing terms; {spec.label()} is not over 1..{n}"
        )


def _extensions(spec: SequenceSpec, n: int) -> list[JacoTypeGraph]:
    graphs = [build_graph(spec, 1)]
    for _ in range(n - 1):
        graphs.append(extend_graph(graphs[-1]))
    return graphs


def recurrence_census(spec: SequenceSpec, n: int) -> CliqueCensus:
    """Census of J_n(spec) built one vertex at a time from J_1."""
    if n < 1:
        raise InvalidArgumentError(f"n must be >= 1, got {n}")
    _require_non_decreasing(spec, n)

    counts = [1]
    for g in _extensions(spec, n)[1:]:
        l = g.in_degree(g.n)
        counts[0] += 1
        for i in range(2, l + 2):
            if len(counts) < i:
                counts.append(0)
            counts[i - 1] += comb(l, i - 1)
    return CliqueCensus(counts=tuple(counts), order=n)


def printed_binomial_steps(
    spec: SequenceSpec,
    n: int,
    actual: dict[int, tuple[int, ...]],
) -> list[ExtensionStep]:
    """Evaluate η^{K_i}(J_{m+1}) = C(m+1, i) + η^{K_i}(J_m), 2 <= i <= l, per row.

    *actual* maps each order 1..n to its census; only sizes 2..l are compared.
    Rows with l < 2 state nothing and are skipped.
    """
    steps: list[ExtensionStep] = []
    for g in _extensions(spec, n)[1:]:
        row = g.n
        l = g.in_degree(row)
        if l < 2:
            continue
        before = actual[row - 1]
        after = actual[row]
        predicted = tuple(
            comb(row, i) + (before[i - 1] if i <= len(before) else 0) for i in range(2, l + 1)
        )
        observed = tuple(after[i - 1] if i <= len(after) else 0 for i in range(2, l + 1))
        steps.append(ExtensionStep(row=row, in_degree=l, predicted=predicted, actual=observed))
    logger.debug("Printed binomial form: %d applicable rows up to n=%d", len(steps), n)
    return steps
