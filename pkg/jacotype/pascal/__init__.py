"""Pascal-matrix clique calculus for complete graphs and joins."""

from jacotype.pascal.calculus import (
    binomial,
    complete_census,
    complete_clique_degree,
    complete_clique_degree_printed,
    eta_complete,
    join_census,
    max_census_sizes,
    max_degree_clique_sizes,
    total_cliques,
)
from jacotype.pascal.matrix import (
    CliqueMatrix,
    clique_matrix,
    clique_matrix_inverse,
    determinant,
    identity,
    invert,
    matmul,
)

__all__ = [
    "CliqueMatrix",
    "binomial",
    "clique_matrix",
    "clique_matrix_inverse",
    "complete_census",
    "complete_clique_degree",
    "complete_clique_degree_printed",
    "determinant",
    "eta_complete",
    "identity",
    "invert",
    "join_census",
    "matmul",
    "max_census_sizes",
    "max_degree_clique_sizes",
    "total_cliques",
]
