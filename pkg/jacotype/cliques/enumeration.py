"""Maximal clique enumeration (Bron–Kerbosch with Tomita pivoting).

The pivot is the vertex of P ∪ X with the most neighbours in P, ties to
the smallest index, so the search itself is reproducible; the result is
sorted anyway.
"""

from __future__ import annotations

import logging

from jacotype.cliques.bitsets import adjacency_masks, all_vertices_mask, iter_bits, members_of
from jacotype.graphs.base import CliqueGraph

logger = logging.getLogger(__name__)


def _choose_pivot(p: int, x: int, masks: list[int]) -> int:
    best_vertex = -1
    best_score = -1
    for u in iter_bits(p | x):
        score = (p & masks[u]).bit_count()
        if score > best_score:
            best_vertex, best_score = u, score
    return best_vertex


def clique_sort_key(clique: frozenset[int]) -> tuple[int, ...]:
    """Order by smallest member, then the next member, and so on."""
    return tuple(sorted(clique))


def maximal_cliques(g: CliqueGraph) -> list[frozenset[int]]:
    """Return every maximal clique of the underlying graph, sorted."""
    masks = adjacency_masks(g)
    found: list[int] = []
    calls = 0

    def expand(r: int, p: int, x: int) -> None:
        nonlocal calls
        calls += 1
        if not p:
            if not x:
                found.append(r)
            return
        pivot = _choose_pivot(p, x, masks)
        for v in list(iter_bits(p & ~masks[pivot])):
            bit = 1 << v
            expand(r | bit, p & masks[v], x & masks[v])
            p ^= bit
            x |= bit

    expand(0, all_vertices_mask(g.order), 0)
    logger.debug("Bron–Kerbosch: %d calls, %d maximal cliques", calls, len(found))
    return sorted((members_of(m) for m in found), key=clique_sort_key)
