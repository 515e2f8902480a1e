"""DenseGraph — explicit symmetric adjacency matrix used by the oracles."""

from __future__ import annotations

import random
from collections.abc import Iterable

from pydantic import BaseModel, ConfigDict, model_validator

from jacotype.errors import InvalidArgumentError
from jacotype.graphs.base import CliqueGraph, edges


class DenseGraph(BaseModel):
    """Undirected graph on vertices 1..order stored as a boolean matrix.

    ``adjacency[i - 1][j - 1]`` is True iff v_i ~ v_j; symmetric with a
    false diagonal.
    """

    model_config = ConfigDict(frozen=True)

    order: int
    adjacency: tuple[tuple[bool, ...], ...]

    @model_validator(mode="after")
    def _check_matrix(self) -> DenseGraph:
        if self.order < 0 or len(self.adjacency) != self.order:
            raise ValueError("adjacency must have one row per vertex")
        for i, row in enumerate(self.adjacency):
            if len(row) != self.order:
                raise ValueError(f"row {i + 1} has {len(row)} entries, expected {self.order}")
            if row[i]:
                raise ValueError(f"self-loop at vertex {i + 1}")
            for j in range(i + 1, self.order):
                if row[j] != self.adjacency[j][i]:
                    raise ValueError(f"asymmetric entry ({i + 1}, {j + 1})")
        return self

    # -- Constructors -------------------------------------------------------

    @classmethod
    def from_edges(cls, order: int, edge_list: Iterable[tuple[int, int]]) -> DenseGraph:
        matrix = [[False] * order for _ in range(order)]
        for i, j in edge_list:
            if not (1 <= i <= order and 1 <= j <= order) or i == j:
                raise InvalidArgumentError(f"bad edge ({i}, {j}) for order {order}")
            matrix[i - 1][j - 1] = matrix[j - 1][i - 1] = True
        return cls(order=order, adjacency=tuple(tuple(r) for r in matrix))

    @classmethod
    def from_graph(cls, g: CliqueGraph) -> DenseGraph:
        """Materialise the underlying graph of any :class:`CliqueGraph`."""
        return cls.from_edges(g.order, edges(g))

    @classmethod
    def complete(cls, order: int) -> DenseGraph:
        return cls.from_edges(order, ((i, j) for i in range(1, order + 1) for j in range(i + 1, order + 1)))

    @classmethod
    def empty(cls, order: int) -> DenseGraph:
        return cls.from_edges(order, ())

    @classmethod
    def random(cls, order: int, density: float, rng: random.Random) -> DenseGraph:
        """G(order, density) drawn from *rng*; pairs visited in ascending order."""
        chosen = [
            (i, j)
            for i in range(1, order + 1)
            for j in range(i + 1, order + 1)
            if rng.random() < density
        ]
        return cls.from_edges(order, chosen)

    # -- CliqueGraph interface ---------------------------------------------

    def adjacent(self, i: int, j: int) -> bool:
        if not (1 <= i <= self.order and 1 <= j <= self.order):
            raise InvalidArgumentError(f"vertex pair ({i}, {j}) outside 1..{self.order}")
        return self.adjacency[i - 1][j - 1]

    def neighbors(self, i: int) -> frozenset[int]:
        if not 1 <= i <= self.order:
            raise InvalidArgumentError(f"vertex {i} outside 1..{self.order}")
        return frozenset(j for j, flag in enumerate(self.adjacency[i - 1], start=1) if flag)

    def degree(self, i: int) -> int:
        return sum(self.adjacency[i - 1])

    @property
    def edge_count(self) -> int:
        return sum(sum(row) for row in self.adjacency) // 2


def join_with_universal_vertex(g: DenseGraph) -> DenseGraph:
    """G + K_1: a new vertex order + 1 adjacent to every vertex of G."""
    rows = [list(row) + [True] for row in g.adjacency]
    rows.append([True] * g.order + [False])
    return DenseGraph(order=g.order + 1, adjacency=tuple(tuple(r) for r in rows))
