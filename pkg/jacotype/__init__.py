"""jacotype — Jaco-type graphs, their clique invariants, and a claim-verification harness."""

__version__ = "1.0.0"

from jacotype.cliques.census import (
    CliqueCensus,
    CliqueDegreeTable,
    clique_census,
    clique_number,
    vertex_clique_degrees,
)
from jacotype.cliques.cover import CoverResult, canonical_cover, min_clique_cover
from jacotype.cliques.decomposition import s1_decomposition_sizes
from jacotype.cliques.enumeration import maximal_cliques
from jacotype.errors import (
    BudgetExceededError,
    CountOverflowError,
    IndexOutOfRangeError,
    InvalidArgumentError,
    JacoError,
    PreconditionViolationError,
)
from jacotype.graphs.jaco import JacoTypeGraph, build_graph, degrees, extend_graph, jaconian_set
from jacotype.pascal.calculus import binomial, join_census, total_cliques
from jacotype.pascal.matrix import CliqueMatrix, clique_matrix, clique_matrix_inverse
from jacotype.sequences.generator import sequence_term
from jacotype.sequences.spec import SequenceSpec
from jacotype.verification.registry import ClaimRegistry, run_all, run_claim
from jacotype.verification.report import ClaimReport
from jacotype.verification.tables import TableDiff, regenerate_table

__all__ = [
    "BudgetExceededError",
    "ClaimRegistry",
    "ClaimReport",
    "CliqueCensus",
    "CliqueDegreeTable",
    "CliqueMatrix",
    "CountOverflowError",
    "CoverResult",
    "IndexOutOfRangeError",
    "InvalidArgumentError",
    "JacoError",
    "JacoTypeGraph",
    "PreconditionViolationError",
    "SequenceSpec",
    "TableDiff",
    "binomial",
    "build_graph",
    "canonical_cover",
    "clique_census",
    "clique_matrix",
    "clique_matrix_inverse",
    "clique_number",
    "degrees",
    "extend_graph",
    "jaconian_set",
    "join_census",
    "maximal_cliques",
    "min_clique_cover",
    "regenerate_table",
    "run_all",
    "run_claim",
    "s1_decomposition_sizes",
    "sequence_term",
    "total_cliques",
    "vertex_clique_degrees",
]
