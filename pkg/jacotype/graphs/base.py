"""The graph interface shared by Jaco-type graphs and dense oracle graphs."""

from __future__ import annotations

from collections.abc import Iterator
from typing import Protocol, runtime_checkable


@runtime_checkable
class CliqueGraph(Protocol):
    """Undirected view of a graph on vertices 1..order.

    Everything in :mod:`jacotype.cliques` and the brute-force oracles
    takes this interface.
    """

    @property
    def order(self) -> int:
        """Number of vertices."""

    def neighbors(self, i: int) -> frozenset[int]:
        """Vertices adjacent to *i* in the underlying graph."""

    def adjacent(self, i: int, j: int) -> bool:
        """True if *i* and *j* share an edge."""


def vertices(g: CliqueGraph) -> range:
    """Vertex labels 1..order."""
    return range(1, g.order + 1)


def edges(g: CliqueGraph) -> Iterator[tuple[int, int]]:
    """Yield underlying edges (i, j), i < j, ascending."""
    for i in vertices(g):
        for j in sorted(g.neighbors(i)):
            if j > i:
                yield i, j


def edge_count(g: CliqueGraph) -> int:
    return sum(1 for _ in edges(g))


def is_clique(g: CliqueGraph, members: frozenset[int] | set[int] | tuple[int, ...]) -> bool:
    """True if every pair of *members* is adjacent."""
    ordered = sorted(members)
    for pos, i in enumerate(ordered):
        for j in ordered[pos + 1:]:
            if not g.adjacent(i, j):
                return False
    return True
