"""JacoTypeGraph — the finite Jaco-type digraph J_n({a_i}).

Arc (v_i, v_j) exists iff i < j <= i + a_i, truncated at n. Each
out-neighbourhood is therefore the contiguous index interval
[i + 1, out_hi(i)], and that interval end is all the graph stores.

Usage::

    from jacotype.graphs import build_graph
    from jacotype.sequences import SequenceSpec

    g = build_graph(SequenceSpec.positive_integers(), 8)
    g.has_arc(3, 6)  # True
"""

from __future__ import annotations

import logging
from collections.abc import Iterator
from typing import Any

from pydantic import BaseModel, ConfigDict, PrivateAttr, model_validator

from jacotype.errors import InvalidArgumentError
from jacotype.sequences.generator import iter_terms, sequence_term
from jacotype.sequences.spec import SequenceSpec

logger = logging.getLogger(__name__)


class VertexDegree(BaseModel):
    """Degrees of one vertex."""

    model_config = ConfigDict(frozen=True)

    vertex: int
    in_degree: int
    out_degree: int

    @property
    def total(self) -> int:
        return self.in_degree + self.out_degree


class JacoTypeGraph(BaseModel):
    """Finite Jaco-type digraph with interval-compressed out-adjacency.

    ``out_hi[i - 1]`` is min(i + a_i, n), the last out-neighbour index of
    v_i (equal to i when v_i has no out-arc). Vertex labels are 1-based.
    Instances are immutable; in-lists are built lazily on first use.
    """

    model_config = ConfigDict(frozen=True)

    n: int
    terms: tuple[int, ...]
    spec: SequenceSpec
    out_hi: tuple[int, ...] = ()

    _in_lists: tuple[tuple[int, ...], ...] | None = PrivateAttr(default=None)
    _in_degrees: tuple[int, ...] | None = PrivateAttr(default=None)

    @model_validator(mode="before")
    @classmethod
    def _fill_out_hi(cls, data: Any) -> Any:
        if isinstance(data, dict) and not data.get("out_hi"):
            n = data.get("n")
            terms = data.get("terms") or ()
            if isinstance(n, int):
                data = dict(data)
                data["out_hi"] = tuple(min(i + a, n) for i, a in enumerate(terms, start=1))
        return data

    @model_validator(mode="after")
    def _check_shape(self) -> JacoTypeGraph:
        if self.n < 1:
            raise InvalidArgumentError(f"graph order must be >= 1, got {self.n}")
        if len(self.terms) != self.n or len(self.out_hi) != self.n:
            raise InvalidArgumentError(
                f"expected {self.n} terms and interval ends, got "
                f"{len(self.terms)} and {len(self.out_hi)}"
            )
        for i, (a, hi) in enumerate(zip(self.terms, self.out_hi), start=1):
            if a < 0:
                raise InvalidArgumentError(f"term a_{i} must be non-negative, got {a}")
            if hi != min(i + a, self.n):
                raise InvalidArgumentError(
                    f"out_hi({i}) is {hi}, expected min({i} + {a}, {self.n}) = {min(i + a, self.n)}"
                )
        return self

    def _key(self) -> tuple[object, ...]:
        return (self.n, self.terms, self.spec, self.out_hi)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, JacoTypeGraph):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    # -- Interval adjacency -------------------------------------------------

    @property
    def order(self) -> int:
        return self.n

    def _check_vertex(self, i: int) -> None:
        if not 1 <= i <= self.n:
            raise InvalidArgumentError(f"vertex {i} outside 1..{self.n}")

    def upper(self, i: int) -> int:
        """out_hi for v_i."""
        self._check_vertex(i)
        return self.out_hi[i - 1]

    def has_arc(self, i: int, j: int) -> bool:
        """True iff i < j <= out_hi(i). O(1)."""
        self._check_vertex(i)
        self._check_vertex(j)
        return i < j <= self.out_hi[i - 1]

    def out_neighbors(self, i: int) -> range:
        return range(i + 1, self.upper(i) + 1)

    def out_degree(self, i: int) -> int:
        return self.upper(i) - i

    def in_neighbors(self, j: int) -> tuple[int, ...]:
        """In-neighbours of v_j, ascending. Not contiguous for non-monotone sequences."""
        self._check_vertex(j)
        if self._in_lists is None:
            lists: list[list[int]] = [[] for _ in range(self.n)]
            for i, hi in enumerate(self.out_hi, start=1):
                for target in range(i + 1, hi + 1):
                    lists[target - 1].append(i)
            self._in_lists = tuple(tuple(x) for x in lists)
        return self._in_lists[j - 1]

    def in_degree(self, j: int) -> int:
        self._check_vertex(j)
        return self._in_degree_vector()[j - 1]

    def _in_degree_vector(self) -> tuple[int, ...]:
        if self._in_degrees is None:
            # Difference array over the out-intervals.
            delta = [0] * (self.n + 2)
            for i, hi in enumerate(self.out_hi, start=1):
                if hi > i:
                    delta[i + 1] += 1
                    delta[hi + 1] -= 1
            running = 0
            vector: list[int] = []
            for j in range(1, self.n + 1):
                running += delta[j]
                vector.append(running)
            self._in_degrees = tuple(vector)
        return self._in_degrees

    # -- Underlying graph ---------------------------------------------------

    def neighbors(self, i: int) -> frozenset[int]:
        return frozenset(self.in_neighbors(i)) | frozenset(self.out_neighbors(i))

    def adjacent(self, i: int, j: int) -> bool:
        if i > j:
            i, j = j, i
        return self.has_arc(i, j)

    def arcs(self) -> Iterator[tuple[int, int]]:
        """Yield arcs (i, j) in ascending order; also the underlying edges."""
        for i, hi in enumerate(self.out_hi, start=1):
            for j in range(i + 1, hi + 1):
                yield i, j

    @property
    def arc_count(self) -> int:
        return sum(hi - i for i, hi in enumerate(self.out_hi, start=1))

    def __repr__(self) -> str:
        return f"JacoTypeGraph(J_{self.n}({self.spec.label()}))"


def build_graph(spec: SequenceSpec, n: int) -> JacoTypeGraph:
    """Build J_n over *spec*: arcs {(v_i, v_j) : i < j <= min(i + a_i, n)}."""
    if n < 1:
        raise InvalidArgumentError(f"graph order must be >= 1, got {n}")
    terms = tuple(iter_terms(spec, n))
    graph = JacoTypeGraph(n=n, terms=terms, spec=spec)
    logger.debug("Built %r with %d arcs", graph, graph.arc_count)
    return graph


def has_arc(g: JacoTypeGraph, i: int, j: int) -> bool:
    return g.has_arc(i, j)


def degrees(g: JacoTypeGraph) -> list[VertexDegree]:
    """Per-vertex (in, out, total) degrees in vertex order."""
    ins = g._in_degree_vector()
    return [
        VertexDegree(vertex=i, in_degree=ins[i - 1], out_degree=g.out_hi[i - 1] - i)
        for i in range(1, g.n + 1)
    ]


def in_neighbors(g: JacoTypeGraph, j: int) -> tuple[int, ...]:
    return g.in_neighbors(j)


def extend_graph(g: JacoTypeGraph) -> JacoTypeGraph:
    """Return J_{n+1} over the same spec; *g* is left untouched."""
    a_next = sequence_term(g.spec, g.n + 1)
    return JacoTypeGraph(n=g.n + 1, terms=g.terms + (a_next,), spec=g.spec)


def jaconian_set(g: JacoTypeGraph) -> tuple[int, tuple[int, ...]]:
    """Return (Δ, vertices attaining Δ) over total degree, ascending."""
    records = degrees(g)
    delta = max(r.total for r in records)
    return delta, tuple(r.vertex for r in records if r.total == delta)


def prime_jaconian_vertex(g: JacoTypeGraph) -> int | None:
    """Smallest index i with an arc (v_i, v_n); None when v_n has no in-arc."""
    for i, hi in enumerate(g.out_hi[:-1], start=1):
        if hi >= g.n:
            return i
    return None
