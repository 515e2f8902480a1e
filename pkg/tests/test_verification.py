"""Tests for the verification harness: oracles, recurrence engines, table diffs,
claim reports and the claim registry.

Claim runs use the smallest ranges that still reach the decisive instance.
"""

from __future__ import annotations

import json
import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from pydantic import ValidationError

from jacotype.cliques import CliqueCensus, clique_census, clique_number
from jacotype.errors import BudgetExceededError, InvalidArgumentError, PreconditionViolationError
from jacotype.graphs import JacoTypeGraph, build_graph, edges
from jacotype.sequences import SequenceSpec
from jacotype.verification import (
    CampaignResult,
    Claim,
    ClaimParams,
    ClaimRegistry,
    ClaimReport,
    DenseGraph,
    brute_circumference,
    brute_girth,
    infer_table4_k,
    recurrence_census,
    regenerate_table,
    run_claim,
    subset_census,
    validate_cycle,
)
from jacotype.verification.claims.base import Tally, cap_to_terms, describe
from jacotype.verification.oracles import (
    random_non_decreasing_terms,
    scan_in_degrees,
    scan_total_degrees,
)
from jacotype.verification import tables as tables_module
from jacotype.verification.recurrence import printed_binomial_steps


@st.composite
def small_dense_graphs(draw: st.DrawFn, max_order: int = 7) -> DenseGraph:
    order = draw(st.integers(min_value=1, max_value=max_order))
    pairs = [(i, j) for i in range(1, order + 1) for j in range(i + 1, order + 1)]
    flags = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return DenseGraph.from_edges(order, [p for p, keep in zip(pairs, flags) if keep])


def _nx_graph(g: DenseGraph) -> nx.Graph:
    ug = nx.Graph()
    ug.add_nodes_from(range(1, g.order + 1))
    ug.add_edges_from(edges(g))
    return ug


def _nx_circumference(g: DenseGraph) -> int | None:
    lengths = [len(c) for c in nx.simple_cycles(_nx_graph(g).to_directed()) if len(c) >= 3]
    return max(lengths, default=None)


class _ExplodingClaim(Claim):
    def __init__(self, error: Exception) -> None:
        self.error = error

    @property
    def claim_id(self) -> str:
        return "X-0"

    @property
    def title(self) -> str:
        return "always raises"

    @property
    def anchor(self) -> str:
        return ""

    def run(self, params: ClaimParams) -> ClaimReport:
        raise self.error


# ---------------------------------------------------------------------------
# Fixtures
# ---------------------------------------------------------------------------


@pytest.fixture
def j8_s1() -> JacoTypeGraph:
    return build_graph(SequenceSpec.positive_integers(), 8)


@pytest.fixture
def registry() -> ClaimRegistry:
    return ClaimRegistry()


# ---------------------------------------------------------------------------
# Dense graphs
# ---------------------------------------------------------------------------


class TestDenseGraph:
    def test_from_graph(self, j8_s1: JacoTypeGraph) -> None:
        g = DenseGraph.from_graph(j8_s1)
        assert g.order == 8
        assert g.edge_count == 16
        assert g.neighbors(4) == j8_s1.neighbors(4)

    def test_complete_and_empty(self) -> None:
        assert DenseGraph.complete(5).edge_count == 10
        assert DenseGraph.empty(5).edge_count == 0

    def test_rejects_asymmetric_matrix(self) -> None:
        with pytest.raises(ValidationError):
            DenseGraph(order=2, adjacency=((False, True), (False, False)))

    def test_rejects_self_loop(self) -> None:
        with pytest.raises(ValidationError):
            DenseGraph(order=1, adjacency=((True,),))

    def test_rejects_bad_edge(self) -> None:
        with pytest.raises(InvalidArgumentError):
            DenseGraph.from_edges(3, [(1, 1)])
        with pytest.raises(InvalidArgumentError):
            DenseGraph.from_edges(3, [(1, 4)])


# ---------------------------------------------------------------------------
# Oracles
# ---------------------------------------------------------------------------


class TestGirth:
    def test_j8_s1(self, j8_s1: JacoTypeGraph) -> None:
        assert brute_girth(j8_s1) == 3

    def test_path_is_acyclic(self) -> None:
        assert brute_girth(build_graph(SequenceSpec.positive_integers(), 3)) is None

    def test_branching_vertex_without_cycle(self) -> None:
        assert brute_girth(build_graph(SequenceSpec.explicit([2, 0, 0]), 3)) is None

    def test_square(self) -> None:
        assert brute_girth(DenseGraph.from_edges(4, [(1, 2), (2, 3), (3, 4), (1, 4)])) == 4

    @settings(max_examples=80)
    @given(small_dense_graphs(max_order=9))
    def test_matches_networkx(self, g: DenseGraph) -> None:
        basis = nx.minimum_cycle_basis(_nx_graph(g))
        assert brute_girth(g) == min((len(c) for c in basis), default=None)


class TestCircumference:
    def test_j8_s1(self, j8_s1: JacoTypeGraph) -> None:
        cycle = brute_circumference(j8_s1)
        assert cycle is not None
        assert cycle.length == 7
        assert validate_cycle(j8_s1, cycle.cycle) == []

    def test_j12_s2(self) -> None:
        g = build_graph(SequenceSpec.fibonacci(), 12)
        cycle = brute_circumference(g)
        assert cycle is not None
        assert cycle.length == 10
        assert clique_number(g) == 7

    def test_acyclic(self) -> None:
        assert brute_circumference(build_graph(SequenceSpec.positive_integers(), 3)) is None

    def test_budget(self, j8_s1: JacoTypeGraph) -> None:
        with pytest.raises(BudgetExceededError):
            brute_circumference(j8_s1, budget=5)
        forced = brute_circumference(j8_s1, budget=5, force=True)
        assert forced is not None and forced.length == 7

    def test_validate_cycle_problems(self, j8_s1: JacoTypeGraph) -> None:
        assert validate_cycle(j8_s1, (1, 2)) == ["cycle needs at least 3 vertices, got 2"]
        assert any("not an edge" in p for p in validate_cycle(j8_s1, (1, 2, 3)))
        assert any("repeats" in p for p in validate_cycle(j8_s1, (2, 3, 2, 4)))

    def test_witness_to_dict(self, j8_s1: JacoTypeGraph) -> None:
        cycle = brute_circumference(j8_s1)
        assert cycle is not None
        assert cycle.to_dict()["length"] == 7

    @settings(max_examples=40, deadline=None)
    @given(small_dense_graphs())
    def test_matches_networkx(self, g: DenseGraph) -> None:
        cycle = brute_circumference(g)
        assert (cycle.length if cycle else None) == _nx_circumference(g)


class TestScans:
    def test_in_degrees(self) -> None:
        assert scan_in_degrees((1, 2, 3, 4, 5, 6, 7, 8)) == (0, 1, 1, 2, 2, 3, 3, 4)

    def test_total_degrees(self, j8_s1: JacoTypeGraph) -> None:
        assert scan_total_degrees(j8_s1) == (1, 3, 4, 6, 5, 5, 4, 4)

    def test_subset_census(self, j8_s1: JacoTypeGraph) -> None:
        assert subset_census(j8_s1) == (8, 16, 14, 6, 1)
        assert subset_census(j8_s1, include_empty=True)[0] == 1

    def test_subset_budget(self) -> None:
        with pytest.raises(BudgetExceededError):
            subset_census(build_graph(SequenceSpec.positive_integers(), 15))

    def test_random_terms_are_seeded_and_monotone(self) -> None:
        a = random_non_decreasing_terms(random.Random(7), 12)
        b = random_non_decreasing_terms(random.Random(7), 12)
        assert a == b
        assert len(a) == 12
        assert list(a) == sorted(a)


# ---------------------------------------------------------------------------
# Recurrence engines
# ---------------------------------------------------------------------------


class TestRecurrence:
    @pytest.mark.parametrize(
        "spec",
        [SequenceSpec.positive_integers(), SequenceSpec.fibonacci(), SequenceSpec.linear_jaco()],
    )
    def test_matches_census(self, spec: SequenceSpec) -> None:
        for n in range(1, 16):
            assert recurrence_census(spec, n).counts == clique_census(build_graph(spec, n)).counts

    def test_needs_non_decreasing_terms(self) -> None:
        with pytest.raises(PreconditionViolationError):
            recurrence_census(SequenceSpec.modulo(5), 6)

    def test_order_must_be_positive(self) -> None:
        with pytest.raises(InvalidArgumentError):
            recurrence_census(SequenceSpec.fibonacci(), 0)

    def test_printed_form_first_row(self) -> None:
        spec = SequenceSpec.fibonacci()
        actual = {n: clique_census(build_graph(spec, n)).counts for n in range(1, 7)}
        steps = printed_binomial_steps(spec, 6, actual)
        assert steps[0].row == 5
        assert steps[0].in_degree == 2
        assert steps[0].predicted == (13,)
        assert steps[0].actual == (5,)
        assert not steps[0].holds
        assert all(s.in_degree >= 2 for s in steps)

    @settings(max_examples=50)
    @given(st.lists(st.integers(min_value=0, max_value=2), min_size=1, max_size=11))
    def test_random_monotone_sequences(self, steps: list[int]) -> None:
        terms = [sum(steps[: i + 1]) for i in range(len(steps))]
        spec = SequenceSpec.explicit(terms)
        g = build_graph(spec, len(terms))
        assert recurrence_census(spec, len(terms)).counts == subset_census(g)


# ---------------------------------------------------------------------------
# Table regeneration
# ---------------------------------------------------------------------------


class TestTables:
    @pytest.mark.parametrize("table_id", [1, 2])
    def test_complete_graph_tables_match(self, table_id: int) -> None:
        diff = regenerate_table(table_id)
        assert len(diff.cells) == 100
        assert diff.mismatch_count == 0
        assert diff.notes == []

    def test_fibonacci_table_mismatch(self) -> None:
        diff = regenerate_table(3)
        first = diff.mismatches[0]
        assert (first.row, first.col, first.paper, first.computed) == (9, 3, 12, 14)
        assert all(c.match for c in diff.cells if c.row <= 8)

    def test_modulo_table_with_k5(self) -> None:
        diff = regenerate_table(4, k=5)
        assert diff.mismatch_count == 0
        assert diff.params == {"k": 5}

    def test_modulo_table_with_other_k(self) -> None:
        assert regenerate_table(4, k=4).mismatch_count > 0

    def test_infer_k(self) -> None:
        assert infer_table4_k(12) == [5]

    @pytest.mark.parametrize("variant", ["definitional", "paper-figure"])
    def test_set_table_mismatch(self, variant: str) -> None:
        diff = regenerate_table(5, variant=variant)  # type: ignore[arg-type]
        first = diff.mismatches[0]
        assert (first.row, first.col, first.paper, first.computed) == (4, 2, 3, 4)

    def test_unknown_table(self) -> None:
        with pytest.raises(InvalidArgumentError):
            regenerate_table(6)

    def test_csv(self) -> None:
        lines = regenerate_table(3).to_csv().splitlines()
        assert lines[0] == "table,row,col,paper,computed,match"
        assert "3,9,3,12,14,false" in lines
        assert "3,1,1,1,1,true" in lines

    def test_json_and_text(self) -> None:
        diff = regenerate_table(3)
        data = json.loads(diff.to_json())
        assert data["mismatches"][0] == {"row": 9, "col": 3, "paper": 12, "computed": 14, "oracle": 14}
        assert "n=9 K_3: paper 12, computed 14, subset oracle 14" in diff.to_text()

    def test_mismatch_confirmed_by_subset_oracle(self) -> None:
        diff = regenerate_table(3)
        cell = next(c for c in diff.mismatches if (c.row, c.col) == (9, 3))
        assert cell.oracle == 14
        assert cell.oracle_agrees is True
        assert "n=9 K_3: 2^9 subset oracle gives 14, confirms census 14" in diff.notes
        assert all(c.oracle is None for c in diff.cells if c.match)

    def test_set_table_mismatch_confirmed_by_subset_oracle(self) -> None:
        first = regenerate_table(5).mismatches[0]
        assert first.oracle == first.computed == 4

    def test_wrong_census_is_contradicted(self, monkeypatch: pytest.MonkeyPatch) -> None:
        def inflated(g: JacoTypeGraph, *args: object, **kwargs: object) -> CliqueCensus:
            counts = clique_census(g).counts
            return CliqueCensus(counts=tuple(c + 1 for c in counts), order=g.order)

        monkeypatch.setattr(tables_module, "clique_census", inflated)
        diff = regenerate_table(3)
        assert diff.mismatch_count > 0
        checked = [c for c in diff.mismatches if c.oracle is not None]
        assert checked
        assert all(c.oracle == c.computed - 1 and c.oracle_agrees is False for c in checked if c.computed > 0)
        assert any("contradicts" in note for note in diff.notes)

    def test_oracle_check_can_be_disabled(self) -> None:
        diff = regenerate_table(3, oracle_check=False)
        assert diff.mismatch_count > 0
        assert diff.notes == []
        assert all(c.oracle is None for c in diff.cells)


# ---------------------------------------------------------------------------
# Family censuses against subset enumeration
# ---------------------------------------------------------------------------


class TestFamilyCensusAgainstSubsets:
    @pytest.mark.parametrize(
        "spec",
        [
            SequenceSpec.positive_integers(),
            SequenceSpec.fibonacci(),
            SequenceSpec.modulo(5),
            SequenceSpec.set_sequence(3),
            SequenceSpec.linear_jaco(),
        ],
        ids=lambda s: s.label(),
    )
    @pytest.mark.parametrize("n", range(1, 15))
    def test_census_matches_subset_enumeration(self, spec: SequenceSpec, n: int) -> None:
        g = build_graph(spec, n)
        assert clique_census(g).counts == subset_census(g)


# ---------------------------------------------------------------------------
# Reports
# ---------------------------------------------------------------------------


class TestReports:
    def test_refuted_needs_witness(self) -> None:
        with pytest.raises(ValidationError):
            ClaimReport(claim_id="X", status="refuted")

    def test_text_rendering(self) -> None:
        report = ClaimReport(
            claim_id="X", title="t", status="refuted", witness={"n": 3},
            parts={"b": "verified", "a": "refuted"}, seed=1,
        )
        text = report.to_text()
        assert text.startswith("X  REFUTED  t")
        assert text.index("a: refuted") < text.index("b: verified")
        assert '"n": 3' in text

    def test_campaign_exit_code(self) -> None:
        ok = ClaimReport(claim_id="A", status="verified")
        bad = ClaimReport(claim_id="B", status="refuted", witness={"x": 1})
        assert CampaignResult(reports=[ok]).exit_code == 0
        assert CampaignResult(reports=[ok, bad]).exit_code == 1
        assert CampaignResult(reports=[ok], tables=[regenerate_table(3)]).exit_code == 1
        assert CampaignResult(reports=[ok], tables=[regenerate_table(1)]).exit_code == 0

    def test_campaign_counts_and_summary(self) -> None:
        result = CampaignResult(reports=[
            ClaimReport(claim_id="A", status="verified"),
            ClaimReport(claim_id="B", status="partial"),
        ])
        assert result.counts() == {"verified": 1, "refuted": 0, "partial": 1}
        assert "2 claims: 1 verified, 0 refuted, 1 partial" in result.to_text()
        assert json.loads(result.to_json())["summary"]["partial"] == 1

    def test_tally(self) -> None:
        tally = Tally()
        assert tally.status == "partial"
        tally.record(True, {})
        assert tally.status == "verified"
        tally.skip("too big")
        assert tally.status == "partial"
        tally.record(False, {"n": 2})
        assert tally.status == "refuted"
        assert tally.witness() == {"first": {"n": 2}, "failures": 1, "examples": [{"n": 2}]}

    def test_params_orders(self) -> None:
        assert ClaimParams().orders(5) == range(1, 6)
        assert ClaimParams(n=4).orders(5) == range(4, 5)
        assert ClaimParams(n_max=3).orders(5, default_min=2) == range(2, 4)
        with pytest.raises(InvalidArgumentError):
            ClaimParams(n=0).orders(5)

    def test_describe_and_cap(self) -> None:
        assert describe(range(3, 4)) == "n=3"
        assert describe(range(1, 9)) == "1<=n<=8"
        assert cap_to_terms(SequenceSpec.explicit([2, 0, 0]), range(1, 21)) == range(1, 4)


# ---------------------------------------------------------------------------
# Claims
# ---------------------------------------------------------------------------


class TestStructureClaims:
    def test_in_degree_stability(self) -> None:
        report = run_claim("L-2.1.1", ClaimParams(n_max=12, random_cases=10))
        assert report.status == "verified"

    def test_girth_counterexample(self) -> None:
        report = run_claim("P-2.1.2", ClaimParams(n_max=10, random_cases=10))
        assert report.status == "refuted"
        assert report.witness is not None
        assert report.witness["first"]["terms"] == [2, 0, 0]
        assert report.parts["non-decreasing"] == "verified"

    def test_circumference_refuted(self) -> None:
        report = run_claim("P-2.1.3")
        assert report.status == "refuted"
        assert report.witness is not None
        first = report.witness["first"]
        assert (first["graph"], first["circumference"], first["clique_number"]) == ("J_8(s1)", 7, 5)
        assert validate_cycle(build_graph(SequenceSpec.positive_integers(), 8), first["cycle"]) == []

    def test_suffix_cover_refuted(self) -> None:
        report = run_claim("P-2.1.4")
        assert report.status == "refuted"
        assert report.witness is not None
        first = report.witness["first"]
        assert (first["canonical_size"], first["minimum_size"]) == (4, 3)
        assert first["minimum_problems"] == []

    def test_printed_graph_facts(self) -> None:
        report = run_claim("EX-2.1")
        assert report.status == "refuted"
        assert report.parts["J_8(s1) max_degree"] == "verified"
        assert report.parts["J_12(s2) jaconian_set"] == "verified"
        assert report.parts["J_8(s1) circumference"] == "refuted"
        assert report.parts["J_12(s2) circumference"] == "refuted"


class TestCompleteGraphClaims:
    @pytest.mark.parametrize("claim_id", ["P-2.2.1", "P-2.2.3", "C-2.2.4", "T-2.2.5", "P-2.2.6", "T-2.3.1"])
    def test_verified(self, claim_id: str) -> None:
        report = run_claim(claim_id, ClaimParams(n_max=8, random_cases=10))
        assert report.status == "verified", report.to_text()

    def test_product_formula(self) -> None:
        report = run_claim("T-2.3.2", ClaimParams(n_max=8))
        assert report.status == "refuted"
        assert report.parts == {"printed": "refuted", "corrected": "verified"}

    def test_join_recurrence_default_cases(self) -> None:
        report = run_claim("P-2.2.3")
        assert report.status == "verified", report.to_text()
        assert report.family.startswith("50 random graphs")
        assert report.notes[0] == "59 instances checked"

    def test_maximum_clique_degree(self) -> None:
        report = run_claim("P-2.3.3", ClaimParams(n_max=10))
        assert report.status == "verified"
        assert report.parts["census-equals-degree-maximiser"] == "refuted"


class TestFamilyClaims:
    @pytest.mark.parametrize("claim_id", ["T-2.3.4", "C-2.3.5", "EX-2.3.1", "L-2.3.6", "R-2.3.3"])
    def test_verified(self, claim_id: str) -> None:
        report = run_claim(claim_id, ClaimParams(n_max=12))
        assert report.status == "verified", report.to_text()

    def test_fibonacci_extension(self) -> None:
        report = run_claim("L-2.3.7", ClaimParams(n_max=10))
        assert report.status == "refuted"
        assert report.witness is not None
        assert report.witness["first_failing_row"] == 5
        assert 6 in report.witness["failing_rows"]
        assert report.witness["table_row_6"]["row"] == 6
        assert any("first fails at row 5" in note for note in report.notes)
        assert report.parts["corrected C(l, i-1)"] == "verified"

    def test_modulo_parts(self) -> None:
        report = run_claim("R-2.3.3", ClaimParams(n_max=12))
        assert report.parts["printed doubling"] == "refuted"
        assert report.parts["table k inferred"] == "verified"

    def test_set_family_table(self) -> None:
        report = run_claim("R-2.3.4")
        assert report.status == "refuted"
        assert report.parts == {"definitional": "refuted", "paper-figure": "refuted"}
        assert report.witness is not None
        assert report.witness["paper-figure"]["first"]["row"] == 4


# ---------------------------------------------------------------------------
# Registry
# ---------------------------------------------------------------------------


class TestRegistry:
    def test_default_claims(self, registry: ClaimRegistry) -> None:
        ids = registry.ids()
        assert len(ids) == 20
        assert ids == sorted(ids)
        assert {"P-2.1.4", "L-2.3.7", "R-2.3.4", "EX-2.1"} <= set(ids)

    def test_every_claim_has_metadata(self, registry: ClaimRegistry) -> None:
        for claim in registry.claims.values():
            assert claim.title
            assert claim.anchor

    def test_unknown_claim(self, registry: ClaimRegistry) -> None:
        with pytest.raises(InvalidArgumentError, match="unknown claim"):
            registry.get("Z-9")

    def test_duplicate_claim(self, registry: ClaimRegistry) -> None:
        with pytest.raises(InvalidArgumentError):
            registry.add_claim(registry.get("P-2.1.4"))

    def test_budget_error_becomes_partial(self, registry: ClaimRegistry) -> None:
        registry.add_claim(_ExplodingClaim(BudgetExceededError("search", 3, 9)))
        report = registry.run("X-0")
        assert report.status == "partial"
        assert report.notes[0].startswith("budget exceeded")

    def test_unexpected_error_becomes_partial(self, registry: ClaimRegistry) -> None:
        registry.add_claim(_ExplodingClaim(ZeroDivisionError("boom")))
        report = registry.run("X-0")
        assert report.status == "partial"
        assert report.notes == ["ZeroDivisionError: boom"]

    def test_run_all_parallel_matches_serial(self, registry: ClaimRegistry) -> None:
        params = ClaimParams(n_max=6, random_cases=3)
        serial = registry.run_all(params)
        parallel = registry.run_all(params, workers=4)
        assert [r.claim_id for r in serial.reports] == registry.ids()
        assert [r.status for r in serial.reports] == [r.status for r in parallel.reports]
        assert serial.exit_code == 1
