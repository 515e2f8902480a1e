"""Independent brute-force oracles.

Nothing here uses the bitmask searches of :mod:`jacotype.cliques`; every
answer is recomputed from ``adjacent`` / ``neighbors`` alone so it can be
held against the fast algorithms.
"""

from __future__ import annotations

import logging
import random
from collections import deque
from collections.abc import Sequence
from itertools import combinations
from typing import Any

from pydantic import BaseModel, ConfigDict

from jacotype.config import CIRCUMFERENCE_BUDGET, SUBSET_ORACLE_BUDGET
from jacotype.errors import BudgetExceededError
from jacotype.graphs.base import CliqueGraph

logger = logging.getLogger(__name__)


class CycleWitness(BaseModel):
    """A simple cycle, listed in traversal order."""

    model_config = ConfigDict(frozen=True)

    cycle: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.cycle)

    def to_dict(self) -> dict[str, Any]:
        return {"length": self.length, "cycle": list(self.cycle)}


def _check_budget(what: str, g: CliqueGraph, budget: int, force: bool) -> None:
    if g.order > budget:
        if not force:
            raise BudgetExceededError(what, budget, g.order)
        logger.warning("Forcing %s at order %d (budget %d)", what, g.order, budget)


def validate_cycle(g: CliqueGraph, cycle: Sequence[int]) -> list[str]:
    """Return problems with *cycle*; empty when it is a simple cycle of *g*."""
    problems: list[str] = []
    if len(cycle) < 3:
        problems.append(f"cycle needs at least 3 vertices, got {len(cycle)}")
    if len(set(cycle)) != len(cycle):
        problems.append("cycle repeats a vertex")
    for v in cycle:
        if not 1 <= v <= g.order:
            problems.append(f"vertex {v} not in graph")
            return problems
    for a, b in zip(cycle, tuple(cycle[1:]) + tuple(cycle[:1])):
        if a != b and not g.adjacent(a, b):
            problems.append(f"({a}, {b}) is not an edge")
    return problems


def brute_girth(g: CliqueGraph) -> int | None:
    """Shortest cycle length by breadth-first search from every vertex."""
    best: int | None = None
    for root in range(1, g.order + 1):
        dist = {root: 0}
        parent = {root: 0}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if best is not None and 2 * dist[u] + 1 >= best:
                break
            for w in sorted(g.neighbors(u)):
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    length = dist[u] + dist[w] + 1
                    if best is None or length < best:
                        best = length
    return best


def _two_core(g: CliqueGraph) -> set[int]:
    """Vertices surviving repeated removal of degree < 2; cycles live here."""
    alive = set(range(1, g.order + 1))
    deg = {v: len(g.neighbors(v)) for v in alive}
    stack = [v for v in alive if deg[v] < 2]
    while stack:
        v = stack.pop()
        if v not in alive:
            continue
        alive.discard(v)
        for w in g.neighbors(v):
            if w in alive:
                deg[w] -= 1
                if deg[w] < 2:
                    stack.append(w)
    return alive


def brute_circumference(
    g: CliqueGraph,
    *,
    budget: int = CIRCUMFERENCE_BUDGET,
    force: bool = False,
) -> CycleWitness | None:
    """Longest simple cycle by exhaustive depth-first search.

    Only the 2-core is searched, each cycle only from its smallest vertex,
    and the search stops once a cycle through every remaining candidate is
    found. The returned witness is revalidated edge by edge.
    """
    _check_budget("longest cycle search", g, budget, force)

    core = _two_core(g)
    nbrs = {v: sorted(w for w in g.neighbors(v) if w in core) for v in core}
    best: list[int] = []
    nodes = 0

    for start in sorted(core):
        reachable = sum(1 for v in core if v >= start)
        if reachable <= len(best):
            break
        path = [start]
        on_path = {start}

        def walk(u: int) -> None:
            nonlocal best, nodes
            nodes += 1
            if len(best) == reachable:
                return
            for w in nbrs[u]:
                if w == start and len(path) >= 3 and len(path) > len(best):
                    best = list(path)
                elif w > start and w not in on_path:
                    path.append(w)
                    on_path.add(w)
                    walk(w)
                    on_path.discard(w)
                    path.pop()

        walk(start)

    logger.debug("Longest cycle search visited %d nodes on order %d", nodes, g.order)
    if not best:
        return None
    problems = validate_cycle(g, best)
    if problems:
        raise RuntimeError(f"longest-cycle witness failed revalidation: {problems}")
    return CycleWitness(cycle=tuple(best))


def subset_census(
    g: CliqueGraph,
    *,
    include_empty: bool = False,
    budget: int = SUBSET_ORACLE_BUDGET,
    force: bool = False,
) -> tuple[int, ...]:
    """η^{K_l} for l = 1..ω by testing every vertex subset for completeness."""
    _check_budget("subset oracle", g, budget, force)
    counts: list[int] = []
    verts = range(1, g.order + 1)
    for size in range(1, g.order + 1):
        found = sum(1 for s in combinations(verts, size) if _complete(g, s))
        if not found:
            break
        counts.append(found)
    return ((1,) if include_empty else ()) + tuple(counts)


def subset_vertex_degrees(
    g: CliqueGraph,
    *,
    budget: int = SUBSET_ORACLE_BUDGET,
    force: bool = False,
) -> dict[int, tuple[int, ...]]:
    """d^{K_l}(v) for every vertex, l = 1..ω, by subset enumeration."""
    _check_budget("subset oracle", g, budget, force)
    rows: dict[int, list[int]] = {v: [] for v in range(1, g.order + 1)}
    verts = range(1, g.order + 1)
    for size in range(1, g.order + 1):
        cliques = [s for s in combinations(verts, size) if _complete(g, s)]
        if not cliques:
            break
        for v in rows:
            rows[v].append(sum(1 for s in cliques if v in s))
    return {v: tuple(r) for v, r in rows.items()}


def subset_maximal_cliques(
    g: CliqueGraph,
    *,
    budget: int = SUBSET_ORACLE_BUDGET,
    force: bool = False,
) -> list[frozenset[int]]:
    """Maximal cliques by subset enumeration; sorted like the fast enumerator."""
    _check_budget("subset oracle", g, budget, force)
    verts = range(1, g.order + 1)
    found: list[frozenset[int]] = []
    for size in range(1, g.order + 1):
        for s in combinations(verts, size):
            if not _complete(g, s):
                continue
            members = set(s)
            if not any(
                all(g.adjacent(x, v) for v in members) for x in verts if x not in members
            ):
                found.append(frozenset(s))
    return sorted(found, key=lambda c: tuple(sorted(c)))


def scan_in_degrees(terms: Sequence[int]) -> tuple[int, ...]:
    """d^-(v_j) of J_n over *terms* by direct scan of the arc rule i < j <= i + a_i."""
    n = len(terms)
    return tuple(
        sum(1 for i in range(1, j) if i + terms[i - 1] >= j) for j in range(1, n + 1)
    )


def scan_total_degrees(g: CliqueGraph) -> tuple[int, ...]:
    """Underlying degrees by pairwise adjacency tests."""
    return tuple(
        sum(1 for w in range(1, g.order + 1) if w != v and g.adjacent(v, w))
        for v in range(1, g.order + 1)
    )


def random_non_decreasing_terms(rng: random.Random, length: int, max_step: int = 2) -> tuple[int, ...]:
    """A seeded non-decreasing sequence starting in 0..max_step."""
    terms: list[int] = []
    current = rng.randint(0, max_step)
    for _ in range(length):
        terms.append(current)
        current += rng.randint(0, max_step)
    return tuple(terms)


def _complete(g: CliqueGraph, members: Sequence[int]) -> bool:
    return all(g.adjacent(a, b) for a, b in combinations(members, 2))
