"""Tests for clique census, clique degrees, maximal cliques, covers and the s1 decomposition.

The fast bitmask searches are held against the subset-enumeration oracles
and against networkx on random graphs.
"""

from __future__ import annotations

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jacotype.cliques import (
    CliqueCensus,
    canonical_cover,
    clique_census,
    clique_number,
    maximal_cliques,
    min_clique_cover,
    s1_clique_intersection,
    s1_decomposition_sizes,
    s1_maximal_clique_count,
    untruncated_s1_clique,
    validate_cover,
    vertex_clique_degrees,
)
from jacotype.errors import BudgetExceededError, InvalidArgumentError, PreconditionViolationError
from jacotype.graphs import JacoTypeGraph, build_graph, edges
from jacotype.sequences import SequenceSpec
from jacotype.verification.dense import DenseGraph
from jacotype.verification.oracles import subset_census, subset_maximal_cliques, subset_vertex_degrees


@st.composite
def dense_graphs(draw: st.DrawFn, max_order: int = 9) -> DenseGraph:
    order = draw(st.integers(min_value=1, max_value=max_order))
    pairs = [(i, j) for i in range(1, order + 1) for j in range(i + 1, order + 1)]
    flags = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return DenseGraph.from_edges(order, [p for p, keep in zip(pairs, flags) if keep])


@st.composite
def monotone_graphs(draw: st.DrawFn, max_order: int = 11) -> JacoTypeGraph:
    steps = draw(st.lists(st.integers(min_value=0, max_value=2), min_size=1, max_size=max_order))
    terms: list[int] = []
    current = 0
    for step in steps:
        current += step
        terms.append(current)
    return build_graph(SequenceSpec.explicit(terms), len(terms))


def _nx_graph(g: DenseGraph | JacoTypeGraph) -> nx.Graph:
    ug = nx.Graph()
    ug.add_nodes_from(range(1, g.order + 1))
    ug.add_edges_from(edges(g))
    return ug


# ---------------------------------------------------------------------------
# Fixtures
# ---------------------------------------------------------------------------


@pytest.fixture
def j8_s1() -> JacoTypeGraph:
    return build_graph(SequenceSpec.positive_integers(), 8)


# ---------------------------------------------------------------------------
# Census
# ---------------------------------------------------------------------------


class TestCliqueCensus:
    @pytest.mark.parametrize(
        ("spec", "n", "expected"),
        [
            (SequenceSpec.positive_integers(), 8, (8, 16, 14, 6, 1)),
            (SequenceSpec.fibonacci(), 7, (7, 10, 5, 1)),
            (SequenceSpec.fibonacci(), 8, (8, 13, 8, 2)),
            (SequenceSpec.fibonacci(), 9, (9, 17, 14, 6, 1)),
            (SequenceSpec.modulo(5), 18, (18, 32, 15)),
        ],
    )
    def test_known_censuses(self, spec: SequenceSpec, n: int, expected: tuple[int, ...]) -> None:
        assert clique_census(build_graph(spec, n)).counts == expected

    def test_max_size_truncates(self, j8_s1: JacoTypeGraph) -> None:
        assert clique_census(j8_s1, max_size=2).counts == (8, 16)

    def test_max_size_must_be_positive(self, j8_s1: JacoTypeGraph) -> None:
        with pytest.raises(InvalidArgumentError):
            clique_census(j8_s1, max_size=0)

    def test_include_empty(self, j8_s1: JacoTypeGraph) -> None:
        census = clique_census(j8_s1, include_empty=True)
        assert census.values() == (1, 8, 16, 14, 6, 1)
        assert census.count(0) == 1
        assert census.count(9) == 0

    def test_clique_number(self, j8_s1: JacoTypeGraph) -> None:
        assert clique_census(j8_s1).clique_number == 5
        assert clique_number(build_graph(SequenceSpec.fibonacci(), 12)) == 7

    def test_edgeless_graph(self) -> None:
        census = clique_census(build_graph(SequenceSpec.explicit([0, 0, 0]), 3))
        assert census.counts == (3,)

    def test_budget(self, j8_s1: JacoTypeGraph) -> None:
        with pytest.raises(BudgetExceededError, match="budget 5"):
            clique_census(j8_s1, budget=5)
        assert clique_census(j8_s1, budget=5, force=True).counts == (8, 16, 14, 6, 1)

    def test_trailing_zeros_dropped(self) -> None:
        assert CliqueCensus(counts=(3, 2, 0, 0), order=3).counts == (3, 2)

    def test_csv_and_json(self, j8_s1: JacoTypeGraph) -> None:
        census = clique_census(j8_s1, include_empty=True)
        assert census.to_csv().splitlines()[:3] == ["l,count", "0,1", "1,8"]
        assert '"counts": [' in census.to_json()

    @settings(max_examples=60)
    @given(dense_graphs())
    def test_matches_subset_oracle(self, g: DenseGraph) -> None:
        assert clique_census(g).counts == subset_census(g)

    @settings(max_examples=60)
    @given(monotone_graphs())
    def test_jaco_census_matches_subset_oracle(self, g: JacoTypeGraph) -> None:
        assert clique_census(g).counts == subset_census(g)


class TestVertexCliqueDegrees:
    def test_first_column_is_one(self, j8_s1: JacoTypeGraph) -> None:
        table = vertex_clique_degrees(j8_s1)
        assert all(table.degree(v, 1) == 1 for v in range(1, 9))

    def test_second_column_is_degree(self, j8_s1: JacoTypeGraph) -> None:
        table = vertex_clique_degrees(j8_s1)
        assert [table.degree(v, 2) for v in range(1, 9)] == [1, 3, 4, 6, 5, 5, 4, 4]

    def test_column_sums(self, j8_s1: JacoTypeGraph) -> None:
        table = vertex_clique_degrees(j8_s1)
        census = clique_census(j8_s1)
        for l in range(1, census.clique_number + 1):
            assert table.column_sum(l) == l * census.count(l)

    def test_unknown_vertex(self, j8_s1: JacoTypeGraph) -> None:
        with pytest.raises(InvalidArgumentError):
            vertex_clique_degrees(j8_s1).degree(9, 1)

    @settings(max_examples=60)
    @given(dense_graphs())
    def test_matches_subset_oracle(self, g: DenseGraph) -> None:
        table = vertex_clique_degrees(g)
        oracle = subset_vertex_degrees(g)
        for v in range(1, g.order + 1):
            assert table.degrees[v - 1] == oracle[v]

    @settings(max_examples=60)
    @given(dense_graphs())
    def test_column_sum_identity(self, g: DenseGraph) -> None:
        table = vertex_clique_degrees(g)
        census = clique_census(g)
        for l in range(1, census.clique_number + 1):
            assert table.column_sum(l) == l * census.count(l)


# ---------------------------------------------------------------------------
# Maximal cliques
# ---------------------------------------------------------------------------


class TestMaximalCliques:
    def test_j8_s1(self, j8_s1: JacoTypeGraph) -> None:
        assert maximal_cliques(j8_s1) == [
            frozenset({1, 2}),
            frozenset({2, 3, 4}),
            frozenset({3, 4, 5, 6}),
            frozenset({4, 5, 6, 7, 8}),
        ]

    def test_isolated_vertices_are_maximal(self) -> None:
        g = build_graph(SequenceSpec.explicit([0, 0]), 2)
        assert maximal_cliques(g) == [frozenset({1}), frozenset({2})]

    @settings(max_examples=80)
    @given(dense_graphs(max_order=10))
    def test_matches_networkx(self, g: DenseGraph) -> None:
        expected = sorted((frozenset(c) for c in nx.find_cliques(_nx_graph(g))), key=sorted)
        assert maximal_cliques(g) == expected

    @settings(max_examples=40)
    @given(monotone_graphs())
    def test_matches_subset_enumeration(self, g: JacoTypeGraph) -> None:
        assert maximal_cliques(g) == subset_maximal_cliques(g)


# ---------------------------------------------------------------------------
# Covers
# ---------------------------------------------------------------------------


class TestCovers:
    def test_canonical_cover_j8_s1(self, j8_s1: JacoTypeGraph) -> None:
        cover = canonical_cover(j8_s1)
        assert cover.size == 4
        assert cover.cliques[0] == frozenset({4, 5, 6, 7, 8})
        assert validate_cover(j8_s1, cover.cliques) == []

    def test_minimum_cover_j8_s1(self, j8_s1: JacoTypeGraph) -> None:
        cover = min_clique_cover(j8_s1)
        assert cover.size == 3
        assert cover.method == "brute-force-minimum"
        assert validate_cover(j8_s1, cover.cliques) == []

    def test_canonical_cover_j12_s2(self) -> None:
        g = build_graph(SequenceSpec.fibonacci(), 12)
        assert canonical_cover(g).size == 6

    def test_path_minimum_cover(self) -> None:
        g = build_graph(SequenceSpec.explicit([1, 1, 1, 0]), 4)
        assert min_clique_cover(g).size == 2

    def test_canonical_cover_needs_non_decreasing(self) -> None:
        g = build_graph(SequenceSpec.explicit([1, 1, 1, 0]), 4)
        with pytest.raises(PreconditionViolationError):
            canonical_cover(g)

    def test_minimum_cover_budget(self, j8_s1: JacoTypeGraph) -> None:
        with pytest.raises(BudgetExceededError):
            min_clique_cover(j8_s1, budget=4)

    def test_validate_cover_reports_problems(self, j8_s1: JacoTypeGraph) -> None:
        problems = validate_cover(j8_s1, [frozenset({1, 3}), frozenset()])
        assert any("not a clique" in p for p in problems)
        assert any("empty set" in p for p in problems)
        assert any("uncovered" in p for p in problems)

    def test_cover_to_dict(self, j8_s1: JacoTypeGraph) -> None:
        data = canonical_cover(j8_s1).to_dict()
        assert data["method"] == "canonical"
        assert data["cliques"][-1] == [1, 2]

    @settings(max_examples=40)
    @given(monotone_graphs(max_order=10))
    def test_minimum_never_exceeds_canonical(self, g: JacoTypeGraph) -> None:
        canonical = canonical_cover(g)
        minimum = min_clique_cover(g)
        assert validate_cover(g, canonical.cliques) == []
        assert validate_cover(g, minimum.cliques) == []
        assert minimum.size <= canonical.size


# ---------------------------------------------------------------------------
# Positive-integer decomposition
# ---------------------------------------------------------------------------


class TestS1Decomposition:
    @pytest.mark.parametrize(
        ("n", "sizes"),
        [(1, (1,)), (5, (2, 3, 3)), (7, (2, 3, 4, 4)), (8, (2, 3, 4, 5))],
    )
    def test_sizes(self, n: int, sizes: tuple[int, ...]) -> None:
        assert s1_decomposition_sizes(n) == sizes

    @pytest.mark.parametrize("n", range(1, 21))
    def test_matches_enumeration(self, n: int) -> None:
        cliques = maximal_cliques(build_graph(SequenceSpec.positive_integers(), n))
        assert len(cliques) == s1_maximal_clique_count(n)
        assert tuple(sorted(len(c) for c in cliques)) == s1_decomposition_sizes(n)

    def test_untruncated_clique(self) -> None:
        assert untruncated_s1_clique(3) == frozenset({3, 4, 5, 6})

    @pytest.mark.parametrize(("l", "t", "shared"), [(5, 0, 5), (5, 1, 4), (5, 4, 1), (5, 5, 0), (5, 7, 0)])
    def test_intersection(self, l: int, t: int, shared: int) -> None:
        assert s1_clique_intersection(l, t) == shared

    def test_bad_arguments(self) -> None:
        with pytest.raises(InvalidArgumentError):
            s1_decomposition_sizes(0)
        with pytest.raises(InvalidArgumentError):
            s1_clique_intersection(1, 0)
