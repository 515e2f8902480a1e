"""Claims of the clique calculus on complete graphs and single-vertex joins."""

from __future__ import annotations

from math import comb
from typing import Any

from jacotype.cliques.census import vertex_clique_degrees
from jacotype.errors import BudgetExceededError
from jacotype.graphs.jaco import build_graph
from jacotype.pascal.calculus import (
    complete_clique_degree,
    complete_clique_degree_printed,
    max_census_sizes,
    max_degree_clique_sizes,
    total_cliques,
)
from jacotype.pascal.matrix import (
    clique_matrix,
    clique_matrix_inverse,
    determinant,
    identity,
    invert,
    matmul,
)
from jacotype.sequences.spec import SequenceSpec
from jacotype.verification.claims.base import (
    Claim,
    ClaimParams,
    Tally,
    at,
    describe,
    oracle_census,
)
from jacotype.verification.dense import DenseGraph, join_with_universal_vertex
from jacotype.verification.oracles import subset_census, subset_vertex_degrees
from jacotype.verification.report import ClaimReport


def _complete_degrees(n: int, params: ClaimParams) -> tuple[int, ...]:
    """d^{K_l}(v_1) in K_n for l = 1..n."""
    k = DenseGraph.complete(n)
    if n <= params.subset_budget:
        return subset_vertex_degrees(k, budget=params.subset_budget)[1]
    table = vertex_clique_degrees(k)
    return tuple(table.degree(1, l) for l in range(1, n + 1))


def _argmax(values: tuple[int, ...]) -> frozenset[int]:
    """1-based positions of the largest value."""
    top = max(values)
    return frozenset(i for i, v in enumerate(values, start=1) if v == top)


class TotalCliqueCount(Claim):
    @property
    def claim_id(self) -> str:
        return "P-2.2.1"

    @property
    def title(self) -> str:
        return "K_n has 2^n - 1 non-empty cliques"

    @property
    def anchor(self) -> str:
        return "The total number of distinct"

    def run(self, params: ClaimParams) -> ClaimReport:
        tally = Tally()
        orders = params.orders(9)
        for n in orders:
            try:
                counted = sum(subset_census(DenseGraph.complete(n), budget=params.subset_budget,
                                            force=params.force))
            except BudgetExceededError as exc:
                tally.skip(f"K_{n}: {exc}")
                continue
            expected = total_cliques(n)
            tally.record(counted == expected, {"n": n, "counted": counted, "formula": expected})
        return self.report(tally, params, family="K_n", parameter_range=describe(orders))


class JoinRecurrence(Claim):
    """η^{K_{l+1}}(G + K_1) = η^{K_{l+1}}(G) + η^{K_l}(G), with η^{K_0} = 1."""

    @property
    def claim_id(self) -> str:
        return "P-2.2.3"

    @property
    def title(self) -> str:
        return "Joining a universal vertex adds one (l+1)-clique per l-clique"

    @property
    def anchor(self) -> str:
        return "new cliques of order $l+1$"

    def run(self, params: ClaimParams) -> ClaimReport:
        tally = Tally()
        max_order = params.n or params.n_max or 9
        rng = params.rng()
        cases = params.random_cases if params.random_cases is not None else 50

        graphs: list[tuple[str, DenseGraph]] = []
        for case in range(cases):
            order = rng.randint(1, max_order)
            graphs.append((f"random#{case}", DenseGraph.random(order, rng.random(), rng)))
        spec = params.family or SequenceSpec.positive_integers()
        for n in range(1, max_order + 1):
            graphs.append((f"J_{n}({spec.label()})", DenseGraph.from_graph(build_graph(spec, n))))

        for label, g in graphs:
            if g.order + 1 > params.subset_budget:
                tally.skip(f"{label}: join exceeds subset budget {params.subset_budget}")
                continue
            old = subset_census(g, include_empty=True, budget=params.subset_budget)
            new = subset_census(join_with_universal_vertex(g), include_empty=True,
                                budget=params.subset_budget)
            bad = [
                l for l in range(0, g.order + 1)
                if at(new, l + 1) != at(old, l + 1) + at(old, l)
            ]
            tally.record(
                not bad,
                {"graph": label, "order": g.order, "edges": g.edge_count, "l": bad[0] if bad else None,
                 "before": list(old), "after": list(new)},
            )
        return self.report(
            tally,
            params,
            family=f"{cases} random graphs + J_n({spec.label()})",
            parameter_range=f"order<={max_order}",
        )


class PascalRule(Claim):
    """η^{K_{l+1}}(K_n) = η^{K_{l+1}}(K_{n-1}) + η^{K_l}(K_{n-1})."""

    @property
    def claim_id(self) -> str:
        return "C-2.2.4"

    @property
    def title(self) -> str:
        return "Complete-graph clique counts obey Pascal's rule"

    @property
    def anchor(self) -> str:
        return r"$\eta^{K_{l+1}}(K_n) = \eta^{K_{l+1}}(K_{n-1}) + \eta^{K_l}(K_{n-1})$"

    def run(self, params: ClaimParams) -> ClaimReport:
        tally = Tally()
        orders = params.orders(12, default_min=2)
        arithmetic = 0
        for n in orders:
            if n < 2:
                continue
            if n <= params.subset_budget:
                row = subset_census(DenseGraph.complete(n), include_empty=True,
                                    budget=params.subset_budget)
                prev = subset_census(DenseGraph.complete(n - 1), include_empty=True,
                                     budget=params.subset_budget)
            else:
                arithmetic += 1
                row = tuple(comb(n, l) for l in range(n + 1))
                prev = tuple(comb(n - 1, l) for l in range(n))
            bad = [l for l in range(n) if at(row, l + 1) != at(prev, l + 1) + at(prev, l)]
            tally.record(not bad, {"n": n, "l": bad[0] if bad else None, "row": list(row),
                                   "previous": list(prev)})
        notes = [f"{arithmetic} rows beyond the subset budget checked by arithmetic"] if arithmetic else []
        return self.report(tally, params, family="K_n", parameter_range=describe(orders), notes=notes)


class CensusSymmetry(Claim):
    """η^{K_j}(K_n) = η^{K_{n-j}}(K_n), counting the empty clique."""

    @property
    def claim_id(self) -> str:
        return "T-2.2.5"

    @property
    def title(self) -> str:
        return "Clique counts of K_n are symmetric"

    @property
    def anchor(self) -> str:
        return "inclusive of the empty-clique"

    def run(self, params: ClaimParams) -> ClaimReport:
        tally = Tally()
        orders = params.orders(20)
        for n in orders:
            values = oracle_census(DenseGraph.complete(n), params, include_empty=True)
            bad = [j for j in range(n + 1) if at(values, j) != at(values, n - j)]
            tally.record(not bad, {"n": n, "j": bad[0] if bad else None, "counts": list(values)})
        return self.report(tally, params, family="K_n", parameter_range=describe(orders))


class InverseCliqueMatrix(Claim):
    """The signed binomial matrix inverts A = [C(i, j)]."""

    @property
    def claim_id(self) -> str:
        return "P-2.2.6"

    @property
    def title(self) -> str:
        return "A^-1 has entries (-1)^(i+j) C(i, j)"

    @property
    def anchor(self) -> str:
        return "The inverse of matrix A"

    def run(self, params: ClaimParams) -> ClaimReport:
        tally = Tally()
        orders = params.orders(12)
        censuses: dict[int, tuple[int, ...]] = {}
        for n in orders:
            a = clique_matrix(n)
            b = clique_matrix_inverse(n)
            eye = identity(n)
            problems: list[str] = []

            # Row i of A must be the census of K_i.
            for i in range(1, n + 1):
                if i not in censuses:
                    censuses[i] = oracle_census(DenseGraph.complete(i), params)
                counted = censuses[i]
                if a.entries[i - 1] != tuple(at(counted, j - 1) for j in range(1, n + 1)):
                    problems.append(f"row {i} of A differs from the census of K_{i}")
            if matmul(a.entries, b.entries) != eye:
                problems.append("A * B != I")
            if matmul(b.entries, a.entries) != eye:
                problems.append("B * A != I")
            if determinant(a.entries) != 1:
                problems.append(f"det(A) = {determinant(a.entries)}")
            if [list(r) for r in invert(a.entries)] != [list(r) for r in b.entries]:
                problems.append("Gauss-Jordan inverse differs from the signed binomial matrix")
            lead = b.entry(n, 1)
            if lead != (n if n % 2 else -n):
                problems.append(f"last row leads with {lead}")
            tally.record(not problems, {"n": n, "problems": problems})
        return self.report(tally, params, family="A_n", parameter_range=describe(orders))


class CliqueDegreeAverage(Claim):
    """d^{K_l}(v) = l * η^{K_l}(K_n) / n for every vertex of K_n."""

    @property
    def claim_id(self) -> str:
        return "T-2.3.1"

    @property
    def title(self) -> str:
        return "Vertex clique degree is l * η / n in K_n"

    @property
    def anchor(self) -> str:
        return r"$d^{K_i}(v_i) = \frac{l \cdot \eta^{K_i}(K_n)}{n}$"

    def run(self, params: ClaimParams) -> ClaimReport:
        tally = Tally()
        orders = params.orders(10)
        for n in orders:
            k = DenseGraph.complete(n)
            try:
                census = subset_census(k, budget=params.subset_budget, force=params.force)
                degrees = subset_vertex_degrees(k, budget=params.subset_budget, force=params.force)
            except BudgetExceededError as exc:
                tally.skip(f"K_{n}: {exc}")
                continue
            for l in range(1, n + 1):
                total = l * at(census, l - 1)
                for v, row in degrees.items():
                    ok = total % n == 0 and at(row, l - 1) == total // n
                    if not ok:
                        tally.record(False, {"n": n, "l": l, "vertex": v, "degree": at(row, l - 1),
                                             "l_eta": total})
                        break
                else:
                    tally.record(True, {})
        return self.report(tally, params, family="K_n", parameter_range=describe(orders))


class CliqueDegreeProduct(Claim):
    """Both readings of the product formula for d^{K_l}(v) in K_n."""

    @property
    def claim_id(self) -> str:
        return "T-2.3.2"

    @property
    def title(self) -> str:
        return "Vertex clique degree as a falling product"

    @property
    def anchor(self) -> str:
        return "Clearly by default the clique degree"

    def run(self, params: ClaimParams) -> ClaimReport:
        printed = Tally()
        corrected = Tally()
        orders = params.orders(10)
        for n in orders:
            try:
                degrees = subset_vertex_degrees(DenseGraph.complete(n), budget=params.subset_budget,
                                                force=params.force)
            except BudgetExceededError as exc:
                printed.skip(f"K_{n}: {exc}")
                corrected.skip(f"K_{n}: {exc}")
                continue
            row = degrees[1]
            for l in range(1, n + 1):
                actual = at(row, l - 1)
                as_printed = complete_clique_degree_printed(n, l)
                as_corrected = complete_clique_degree(n, l)
                printed.record(as_printed == actual,
                               {"n": n, "l": l, "degree": actual, "printed_formula": as_printed})
                corrected.record(as_corrected == actual,
                                 {"n": n, "l": l, "degree": actual, "corrected_formula": as_corrected})
        notes = ["printed: (n-1)...(n-l+1) / n!; corrected: (n-1)...(n-l+1) / (l-1)!"]
        if corrected.failures:
            notes.append(f"corrected reading fails: {corrected.failures[0]}")
        return self.report(
            printed,
            params,
            family="K_n",
            parameter_range=describe(orders),
            parts={"printed": printed.status, "corrected": corrected.status},
            notes=notes,
        )


class MaximumCliqueDegree(Claim):
    """The clique sizes maximising d^{K_l}(v) in K_n."""

    @property
    def claim_id(self) -> str:
        return "P-2.3.3"

    @property
    def title(self) -> str:
        return "Maximum vertex clique degree at l = ceil(n/2) (odd) or n/2, n/2 + 1 (even)"

    @property
    def anchor(self) -> str:
        return "the maximum clique degree is"

    def run(self, params: ClaimParams) -> ClaimReport:
        statement = Tally()
        census_max = Tally()
        conflation = Tally()
        orders = params.orders(20)
        for n in orders:
            degree_best = _argmax(_complete_degrees(n, params))
            census_best = _argmax(oracle_census(DenseGraph.complete(n), params))
            detail: dict[str, Any] = {
                "n": n,
                "degree_maximisers": sorted(degree_best),
                "census_maximisers": sorted(census_best),
            }
            statement.record(degree_best == max_degree_clique_sizes(n),
                             {**detail, "stated": sorted(max_degree_clique_sizes(n))})
            census_max.record(census_best == max_census_sizes(n),
                              {**detail, "stated": sorted(max_census_sizes(n))})
            conflation.record(census_best == degree_best, detail)

        witness = statement.witness()
        if witness is None and conflation.failures:
            witness = {"census_vs_degree_first": conflation.failures[0]}
        return self.report(
            statement,
            params,
            family="K_n",
            parameter_range=describe(orders),
            witness=witness,
            parts={
                "statement": statement.status,
                "census-maximiser": census_max.status,
                "census-equals-degree-maximiser": conflation.status,
            },
        )


class CompleteGraphClaims:
    """All claims about complete graphs, joins and the clique matrix."""

    @staticmethod
    def all_claims() -> list[Claim]:
        return [
            TotalCliqueCount(),
            JoinRecurrence(),
            PascalRule(),
            CensusSymmetry(),
            InverseCliqueMatrix(),
            CliqueDegreeAverage(),
            CliqueDegreeProduct(),
            MaximumCliqueDegree(),
        ]
