"""Claims on the basic structure of Jaco-type graphs.

In-degree stability under extension, girth, circumference against clique
number, the suffix-clique cover, and the printed facts about J_8(s1) and
J_12(s2).
"""

from __future__ import annotations

import logging
from typing import Any

from jacotype.cliques.cover import canonical_cover, min_clique_cover, validate_cover
from jacotype.cliques.enumeration import maximal_cliques
from jacotype.errors import BudgetExceededError
from jacotype.graphs.jaco import JacoTypeGraph, build_graph, extend_graph
from jacotype.sequences.generator import is_non_decreasing, iter_terms
from jacotype.sequences.spec import FAMILY_ALIASES, SequenceSpec
from jacotype.verification.claims.base import (
    Claim,
    ClaimParams,
    Tally,
    cap_to_terms,
    default_families,
    describe,
)
from jacotype.verification.dense import DenseGraph
from jacotype.verification.oracles import (
    brute_circumference,
    brute_girth,
    random_non_decreasing_terms,
    scan_in_degrees,
    scan_total_degrees,
    subset_census,
)
from jacotype.verification.paper_tables import PRINTED_GRAPH_FACTS
from jacotype.verification.report import ClaimReport

logger = logging.getLogger(__name__)

# Sequences whose girth premise holds yet whose graph is acyclic.
GIRTH_COUNTEREXAMPLES: tuple[tuple[int, ...], ...] = ((2, 0, 0),)


def _branching_index(terms: tuple[int, ...]) -> int | None:
    """Smallest i with a_i >= 2 and n >= i + 2, else None."""
    n = len(terms)
    for i, a in enumerate(terms, start=1):
        if a >= 2:
            return i if n >= i + 2 else None
    return None


def _graph_label(g: JacoTypeGraph) -> str:
    return f"J_{g.n}({g.spec.label()})"


class InDegreeStability(Claim):
    """d^-(v_j) does not change when J_n is extended to J_{n+1}."""

    @property
    def claim_id(self) -> str:
        return "L-2.1.1"

    @property
    def title(self) -> str:
        return "In-degrees are stable under extension"

    @property
    def anchor(self) -> str:
        return "remains a constant for any given"

    def run(self, params: ClaimParams) -> ClaimReport:
        tally = Tally()
        orders = params.orders(30)
        families = [params.family] if params.family else default_families()

        for spec in families:
            for n in cap_to_terms(spec, orders, spare=1):
                g = build_graph(spec, n)
                self._compare(tally, _graph_label(g), g.terms, extend_graph(g).terms)

        cases = 0
        if params.family is None:
            rng = params.rng()
            cases = params.random_cases if params.random_cases is not None else 100
            for _ in range(cases):
                terms = random_non_decreasing_terms(rng, rng.randint(2, 12))
                self._compare(tally, f"custom{terms}", terms[:-1], terms)

        labels = ", ".join(s.label() for s in families)
        return self.report(
            tally,
            params,
            family=labels + (f" + {cases} random non-decreasing" if cases else ""),
            parameter_range=describe(orders),
        )

    @staticmethod
    def _compare(tally: Tally, label: str, before: tuple[int, ...], after: tuple[int, ...]) -> None:
        old = scan_in_degrees(before)
        new = scan_in_degrees(after)[: len(before)]
        changed = [j for j, (a, b) in enumerate(zip(old, new), start=1) if a != b]
        tally.record(
            not changed,
            {"graph": label, "n": len(before), "vertex": changed[0] if changed else None,
             "before": list(old), "after": list(new)},
        )


class GirthThree(Claim):
    """A vertex with out-degree > 1 and two vertices after it forces girth 3."""

    @property
    def claim_id(self) -> str:
        return "P-2.1.2"

    @property
    def title(self) -> str:
        return "Girth is 3 once some d+(v_i) > 1 with n >= i + 2"

    @property
    def anchor(self) -> str:
        return "has girth, $g(J_n(s_k)) = 3$"

    def run(self, params: ClaimParams) -> ClaimReport:
        orders = params.orders(20)
        monotone = Tally()
        unrestricted = Tally()

        if params.family is not None:
            specs = [params.family]
            rng_specs: list[SequenceSpec] = []
        else:
            specs = [SequenceSpec.explicit(t) for t in GIRTH_COUNTEREXAMPLES] + default_families()
            rng = params.rng()
            cases = params.random_cases if params.random_cases is not None else 100
            rng_specs = [
                SequenceSpec.explicit(random_non_decreasing_terms(rng, rng.randint(3, 12)))
                for _ in range(cases)
            ]

        for spec in specs + rng_specs:
            for n in cap_to_terms(spec, orders):
                terms = tuple(iter_terms(spec, n))
                i = _branching_index(terms)
                if i is None:
                    continue
                girth = brute_girth(build_graph(spec, n))
                detail = {"family": spec.label(), "terms": list(terms), "n": n, "i": i, "girth": girth}
                ok = girth == 3
                unrestricted.record(ok, detail)
                if is_non_decreasing(terms):
                    monotone.record(ok, detail)

        parts = {"non-decreasing": monotone.status, "unrestricted": unrestricted.status}
        notes = [f"non-decreasing instances: {monotone.checked}"]
        if monotone.failures:
            notes.append(f"non-decreasing failure: {monotone.failures[0]}")
        return self.report(
            unrestricted,
            params,
            family=", ".join(s.label() for s in specs)
            + (f" + {len(rng_specs)} random non-decreasing" if rng_specs else ""),
            parameter_range=describe(orders),
            parts=parts,
            notes=notes,
        )


class CircumferenceEqualsCliqueNumber(Claim):
    """Circumference equals ω under the same premise as the girth claim."""

    default_instances: tuple[tuple[str, int], ...] = (("s1", 8), ("s2", 12))

    @property
    def claim_id(self) -> str:
        return "P-2.1.3"

    @property
    def title(self) -> str:
        return "Circumference equals the clique number"

    @property
    def anchor(self) -> str:
        return "is equal to the clique number"

    def run(self, params: ClaimParams) -> ClaimReport:
        tally = Tally()
        if params.family is not None:
            orders = cap_to_terms(params.family, params.orders(8))
            instances = [(params.family, n) for n in orders]
            span = describe(orders)
        else:
            instances = [
                (SequenceSpec(kind=FAMILY_ALIASES[f]), n) for f, n in self.default_instances
            ]
            span = ", ".join(f"J_{n}({f})" for f, n in self.default_instances)

        for spec, n in instances:
            g = build_graph(spec, n)
            if _branching_index(g.terms) is None:
                continue
            try:
                cycle = brute_circumference(g, budget=params.cycle_budget, force=params.force)
            except BudgetExceededError as exc:
                tally.skip(f"{_graph_label(g)}: {exc}")
                continue
            if g.order <= params.subset_budget:
                omega = len(subset_census(g, budget=params.subset_budget))
            else:
                omega = max(len(c) for c in maximal_cliques(g))
            length = cycle.length if cycle else None
            logger.debug("%s: circumference %s, clique number %d", _graph_label(g), length, omega)
            tally.record(
                length == omega,
                {"graph": _graph_label(g), "circumference": length, "clique_number": omega,
                 "cycle": list(cycle.cycle) if cycle else None},
            )

        return self.report(
            tally,
            params,
            family=params.family.label() if params.family else "s1, s2",
            parameter_range=span,
        )


class SuffixCoverIsMinimum(Claim):
    """The suffix-clique cover of size i is a minimum clique cover."""

    @property
    def claim_id(self) -> str:
        return "P-2.1.4"

    @property
    def title(self) -> str:
        return "Clique cover number equals the prime Jaconian index"

    @property
    def anchor(self) -> str:
        return "has clique cover number"

    def run(self, params: ClaimParams) -> ClaimReport:
        tally = Tally()
        spec = params.family or SequenceSpec.positive_integers()
        explicit_range = params.n is not None or params.n_max is not None
        orders = cap_to_terms(spec, params.orders(8) if explicit_range else range(8, 9))

        for n in orders:
            g = build_graph(spec, n)
            if not is_non_decreasing(g.terms):
                tally.skip(f"{_graph_label(g)}: terms are not non-decreasing")
                continue
            try:
                minimum = min_clique_cover(g, budget=params.cover_budget, force=params.force)
            except BudgetExceededError as exc:
                tally.skip(f"{_graph_label(g)}: {exc}")
                continue
            canonical = canonical_cover(g)
            detail: dict[str, Any] = {
                "graph": _graph_label(g),
                "canonical_size": canonical.size,
                "minimum_size": minimum.size,
                "canonical": [sorted(c) for c in canonical.cliques],
                "minimum": [sorted(c) for c in minimum.cliques],
                "canonical_problems": validate_cover(g, canonical.cliques),
                "minimum_problems": validate_cover(g, minimum.cliques),
            }
            tally.record(canonical.size == minimum.size, detail)

        return self.report(tally, params, family=spec.label(), parameter_range=describe(orders))


class PrintedGraphFactsClaim(Claim):
    """Δ, Jaconian set, girth and circumference of the two illustrated graphs."""

    @property
    def claim_id(self) -> str:
        return "EX-2.1"

    @property
    def title(self) -> str:
        return "Printed invariants of J_8(s1) and J_12(s2)"

    @property
    def anchor(self) -> str:
        return "It has girth 3 and circumference"

    def run(self, params: ClaimParams) -> ClaimReport:
        tally = Tally()
        parts: dict[str, Any] = {}
        evidence: dict[str, Any] = {}

        for facts in PRINTED_GRAPH_FACTS:
            spec = SequenceSpec(kind=FAMILY_ALIASES[facts.family])
            g = build_graph(spec, facts.n)
            dense = DenseGraph.from_graph(g)
            label = f"J_{facts.n}({facts.family})"
            degrees = scan_total_degrees(dense)
            delta = max(degrees)
            try:
                cycle = brute_circumference(dense, budget=params.cycle_budget, force=params.force)
            except BudgetExceededError as exc:
                tally.skip(f"{label}: {exc}")
                cycle = None
            computed = {
                "max_degree": delta,
                "jaconian_set": tuple(v for v, d in enumerate(degrees, start=1) if d == delta),
                "girth": brute_girth(dense),
                "circumference": cycle.length if cycle else None,
            }
            evidence[label] = {
                **{k: list(v) if isinstance(v, tuple) else v for k, v in computed.items()},
                "cycle": list(cycle.cycle) if cycle else None,
            }
            for name, value in computed.items():
                printed = getattr(facts, name)
                ok = printed == value
                parts[f"{label} {name}"] = "verified" if ok else "refuted"
                tally.record(
                    ok,
                    {"graph": label, "fact": name,
                     "printed": list(printed) if isinstance(printed, tuple) else printed,
                     "computed": list(value) if isinstance(value, tuple) else value,
                     "cycle": evidence[label]["cycle"] if name == "circumference" else None},
                )

        witness = tally.witness()
        if witness is not None:
            witness["computed"] = evidence
        return self.report(
            tally,
            params,
            family="s1, s2",
            parameter_range="J_8(s1), J_12(s2)",
            witness=witness,
            parts=parts,
        )


class StructureClaims:
    """All claims about basic graph structure."""

    @staticmethod
    def all_claims() -> list[Claim]:
        return [
            InDegreeStability(),
            GirthThree(),
            CircumferenceEqualsCliqueNumber(),
            SuffixCoverIsMinimum(),
            PrintedGraphFactsClaim(),
        ]
