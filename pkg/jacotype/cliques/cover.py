"""Clique covers: the constructive suffix-clique cover and the exact minimum."""

from __future__ import annotations

import logging
from collections.abc import Sequence
from typing import Any, Literal

from pydantic import BaseModel, ConfigDict

from jacotype.cliques.bitsets import all_vertices_mask, iter_bits, mask_of
from jacotype.cliques.enumeration import clique_sort_key, maximal_cliques
from jacotype.config import COVER_BUDGET
from jacotype.errors import BudgetExceededError, PreconditionViolationError
from jacotype.graphs.base import CliqueGraph, is_clique
from jacotype.graphs.jaco import JacoTypeGraph, prime_jaconian_vertex
from jacotype.sequences.generator import is_non_decreasing

logger = logging.getLogger(__name__)


class CoverResult(BaseModel):
    """A list of cliques whose union is the whole vertex set."""

    model_config = ConfigDict(frozen=True)

    cliques: tuple[frozenset[int], ...]
    method: Literal["canonical", "brute-force-minimum"]

    @property
    def size(self) -> int:
        return len(self.cliques)

    def to_dict(self) -> dict[str, Any]:
        return {
            "method": self.method,
            "size": self.size,
            "cliques": [sorted(c) for c in self.cliques],
        }


def validate_cover(g: CliqueGraph, cliques: Sequence[frozenset[int]]) -> list[str]:
    """Return problems with a proposed cover; empty when it is valid."""
    problems: list[str] = []
    covered: set[int] = set()
    for c in cliques:
        if not c:
            problems.append("empty set in cover")
            continue
        outside = [v for v in c if not 1 <= v <= g.order]
        if outside:
            problems.append(f"vertices {sorted(outside)} not in graph")
            continue
        if not is_clique(g, c):
            problems.append(f"{sorted(c)} is not a clique")
        covered |= c
    missing = sorted(set(range(1, g.order + 1)) - covered)
    if missing:
        problems.append(f"vertices {missing} uncovered")
    return problems


def canonical_cover(g: JacoTypeGraph) -> CoverResult:
    """Suffix-clique cover {v_j .. v_min(j + a_j, n)} for j = i, i-1, ..., 1.

    i is the prime Jaconian vertex (n when v_n has no in-arc). Needs
    non-decreasing terms.
    """
    if not is_non_decreasing(g.terms):
        raise PreconditionViolationError(
            f"canonical cover needs a non-decreasing sequence; {g.spec.label()} is not"
        )
    i = prime_jaconian_vertex(g) or g.n
    cliques = tuple(
        frozenset(range(j, g.upper(j) + 1)) for j in range(i, 0, -1)
    )
    return CoverResult(cliques=cliques, method="canonical")


def min_clique_cover(
    g: CliqueGraph,
    *,
    budget: int = COVER_BUDGET,
    force: bool = False,
) -> CoverResult:
    """Exact minimum clique cover by branch and bound over maximal cliques.

    Some minimum cover always consists of maximal cliques, so the search
    only picks among those. Each branch covers the uncovered vertex that
    lies in the fewest maximal cliques.
    """
    if g.order > budget:
        if not force:
            raise BudgetExceededError("minimum clique cover", budget, g.order)
        logger.warning("Forcing minimum clique cover at order %d (budget %d)", g.order, budget)

    candidates = [mask_of(c) for c in maximal_cliques(g)]
    containing: dict[int, list[int]] = {
        v: [m for m in candidates if m >> v & 1] for v in range(1, g.order + 1)
    }
    full = all_vertices_mask(g.order)
    best: list[int] = list(candidates)
    nodes = 0

    def search(covered: int, chosen: list[int]) -> None:
        nonlocal best, nodes
        nodes += 1
        if covered == full:
            if len(chosen) < len(best):
                best = list(chosen)
            return
        if len(chosen) + 1 >= len(best):
            return
        pivot = min(
            iter_bits(full & ~covered),
            key=lambda v: (len(containing[v]), v),
        )
        for m in sorted(containing[pivot], key=lambda m: (-(m & ~covered).bit_count(), m)):
            chosen.append(m)
            search(covered | m, chosen)
            chosen.pop()

    search(0, [])
    logger.debug("Minimum cover search visited %d nodes; size %d", nodes, len(best))
    cliques = tuple(sorted((frozenset(iter_bits(m)) for m in best), key=clique_sort_key))
    return CoverResult(cliques=cliques, method="brute-force-minimum")

