"""Clique censuses η^{K_l} and vertex clique degrees d^{K_l}(v).

Counting is by ordered depth-first extension: a clique is only ever
extended by candidates of higher index than all its members, so each
clique is reached exactly once and no overlap bookkeeping is needed.
When the remaining candidates are themselves pairwise adjacent, all of
their subsets are cliques and are counted with binomials instead of being
walked one by one.
"""

from __future__ import annotations

import csv
import io
import json
import logging
from math import comb
from typing import Any

from pydantic import BaseModel, ConfigDict, model_validator

from jacotype.cliques.bitsets import adjacency_masks, all_vertices_mask, is_clique_mask, iter_bits
from jacotype.cliques.enumeration import maximal_cliques
from jacotype.config import CENSUS_BUDGET, U64_MAX
from jacotype.errors import BudgetExceededError, CountOverflowError, InvalidArgumentError
from jacotype.graphs.base import CliqueGraph

logger = logging.getLogger(__name__)


class CliqueCensus(BaseModel):
    """Counts η^{K_l} for l = 1..ω; ``counts[l - 1]`` holds η^{K_l}."""

    model_config = ConfigDict(frozen=True)

    counts: tuple[int, ...]
    include_empty: bool = False
    """Report η^{K_0} = 1 alongside the counts."""

    order: int

    @model_validator(mode="before")
    @classmethod
    def _strip_trailing_zeros(cls, data: Any) -> Any:
        if isinstance(data, dict) and "counts" in data:
            counts = list(data["counts"])
            while counts and counts[-1] == 0:
                counts.pop()
            data = dict(data)
            data["counts"] = tuple(counts)
        return data

    def count(self, l: int) -> int:
        """η^{K_l}; 1 for l = 0 (the empty clique), 0 beyond ω."""
        if l < 0:
            raise InvalidArgumentError(f"clique size must be >= 0, got {l}")
        if l == 0:
            return 1
        return self.counts[l - 1] if l <= len(self.counts) else 0

    @property
    def clique_number(self) -> int:
        return len(self.counts)

    def values(self) -> tuple[int, ...]:
        """Counts as printed, with the empty clique first when requested."""
        return ((1,) if self.include_empty else ()) + self.counts

    def to_dict(self) -> dict[str, Any]:
        return {
            "order": self.order,
            "include_empty": self.include_empty,
            "counts": list(self.values()),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["l", "count"])
        if self.include_empty:
            writer.writerow([0, 1])
        for l, c in enumerate(self.counts, start=1):
            writer.writerow([l, c])
        return buf.getvalue()


class CliqueDegreeTable(BaseModel):
    """d^{K_l}(v_i); ``degrees[i - 1][l - 1]`` for vertices 1..n, sizes 1..ω."""

    model_config = ConfigDict(frozen=True)

    degrees: tuple[tuple[int, ...], ...]

    @property
    def order(self) -> int:
        return len(self.degrees)

    @property
    def clique_number(self) -> int:
        return len(self.degrees[0]) if self.degrees else 0

    def degree(self, vertex: int, l: int) -> int:
        if not 1 <= vertex <= self.order:
            raise InvalidArgumentError(f"vertex {vertex} outside 1..{self.order}")
        row = self.degrees[vertex - 1]
        return row[l - 1] if 1 <= l <= len(row) else 0

    def column_sum(self, l: int) -> int:
        return sum(self.degree(v, l) for v in range(1, self.order + 1))

    def to_dict(self) -> dict[str, Any]:
        return {"degrees": [list(row) for row in self.degrees]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["vertex", "l", "count"])
        for v, row in enumerate(self.degrees, start=1):
            for l, c in enumerate(row, start=1):
                writer.writerow([v, l, c])
        return buf.getvalue()


def _check_budget(g: CliqueGraph, budget: int, force: bool) -> None:
    if g.order > budget:
        if not force:
            raise BudgetExceededError("clique census", budget, g.order)
        logger.warning("Forcing clique census at order %d (budget %d)", g.order, budget)


def _add(counts: list[int], size: int, amount: int) -> None:
    while len(counts) < size:
        counts.append(0)
    value = counts[size - 1] + amount
    if value > U64_MAX:
        raise CountOverflowError(f"η^(K_{size}) exceeds the 64-bit range")
    counts[size - 1] = value


def clique_census(
    g: CliqueGraph,
    max_size: int | None = None,
    *,
    include_empty: bool = False,
    budget: int = CENSUS_BUDGET,
    force: bool = False,
) -> CliqueCensus:
    """Count the cliques of *g* by size, up to min(ω, max_size)."""
    if max_size is not None and max_size < 1:
        raise InvalidArgumentError(f"max_size must be >= 1, got {max_size}")
    _check_budget(g, budget, force)

    masks = adjacency_masks(g)
    cap = max_size if max_size is not None else g.order
    counts: list[int] = []

    def extend(size: int, cand: int) -> None:
        if size >= cap or not cand:
            return
        if is_clique_mask(cand, masks):
            c = cand.bit_count()
            for t in range(1, min(c, cap - size) + 1):
                _add(counts, size + t, comb(c, t))
            return
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            _add(counts, size + 1, 1)
            extend(size + 1, cand & masks[v])

    extend(0, all_vertices_mask(g.order))
    logger.debug("Census of order-%d graph: %s", g.order, counts)
    return CliqueCensus(counts=tuple(counts), include_empty=include_empty, order=g.order)


def vertex_clique_degrees(
    g: CliqueGraph,
    *,
    budget: int = CENSUS_BUDGET,
    force: bool = False,
) -> CliqueDegreeTable:
    """Number of l-cliques containing each vertex, for l = 1..ω."""
    _check_budget(g, budget, force)
    masks = adjacency_masks(g)
    n = g.order
    rows: list[list[int]] = [[] for _ in range(n)]

    def credit(vertex: int, size: int, amount: int) -> None:
        _add(rows[vertex - 1], size, amount)

    def extend(members: list[int], cand: int) -> None:
        if not cand:
            return
        size = len(members)
        if is_clique_mask(cand, masks):
            inside = list(iter_bits(cand))
            c = len(inside)
            for t in range(1, c + 1):
                for v in members:
                    credit(v, size + t, comb(c, t))
                for v in inside:
                    credit(v, size + t, comb(c - 1, t - 1))
            return
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            members.append(v)
            for m in members:
                credit(m, size + 1, 1)
            extend(members, cand & masks[v])
            members.pop()

    extend([], all_vertices_mask(n))

    width = max((len(r) for r in rows), default=0)
    table = tuple(tuple(r + [0] * (width - len(r))) for r in rows)
    return CliqueDegreeTable(degrees=table)


def clique_number(g: CliqueGraph) -> int:
    """Size of a largest clique (1 for a single vertex)."""
    return max(len(c) for c in maximal_cliques(g))
