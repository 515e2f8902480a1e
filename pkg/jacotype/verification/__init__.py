"""Brute-force oracles, recurrence engines, claim registry and table diffs."""

from jacotype.verification.claims import Claim, ClaimParams
from jacotype.verification.dense import DenseGraph, join_with_universal_vertex
from jacotype.verification.oracles import (
    CycleWitness,
    brute_circumference,
    brute_girth,
    subset_census,
    subset_maximal_cliques,
    subset_vertex_degrees,
    validate_cycle,
)
from jacotype.verification.recurrence import recurrence_census
from jacotype.verification.registry import ClaimRegistry, run_all, run_claim
from jacotype.verification.report import CampaignResult, ClaimReport
from jacotype.verification.tables import TableCell, TableDiff, infer_table4_k, regenerate_table

__all__ = [
    "CampaignResult",
    "Claim",
    "ClaimParams",
    "ClaimRegistry",
    "ClaimReport",
    "CycleWitness",
    "DenseGraph",
    "TableCell",
    "TableDiff",
    "brute_circumference",
    "brute_girth",
    "infer_table4_k",
    "join_with_universal_vertex",
    "recurrence_census",
    "regenerate_table",
    "run_all",
    "run_claim",
    "subset_census",
    "subset_maximal_cliques",
    "subset_vertex_degrees",
    "validate_cycle",
]
