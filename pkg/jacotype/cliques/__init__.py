"""Clique enumeration, censuses, vertex clique degrees, clique number, and covers."""

from jacotype.cliques.census import (
    CliqueCensus,
    CliqueDegreeTable,
    clique_census,
    clique_number,
    vertex_clique_degrees,
)
from jacotype.cliques.cover import CoverResult, canonical_cover, min_clique_cover, validate_cover
from jacotype.cliques.decomposition import (
    s1_clique_intersection,
    s1_decomposition_sizes,
    s1_maximal_clique_count,
    untruncated_s1_clique,
)
from jacotype.cliques.enumeration import maximal_cliques

__all__ = [
    "CliqueCensus",
    "CliqueDegreeTable",
    "CoverResult",
    "canonical_cover",
    "clique_census",
    "clique_number",
    "maximal_cliques",
    "min_clique_cover",
    "s1_clique_intersection",
    "s1_decomposition_sizes",
    "s1_maximal_clique_count",
    "untruncated_s1_clique",
    "validate_cover",
    "vertex_clique_degrees",
]
