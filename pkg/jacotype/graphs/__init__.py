"""Jaco-type graph construction, degree queries, Jaconian sets, and exports."""

from jacotype.graphs.base import CliqueGraph, edge_count, edges, is_clique, vertices
from jacotype.graphs.exporters import export_graph
from jacotype.graphs.jaco import (
    JacoTypeGraph,
    VertexDegree,
    build_graph,
    degrees,
    extend_graph,
    has_arc,
    in_neighbors,
    jaconian_set,
    prime_jaconian_vertex,
)

__all__ = [
    "CliqueGraph",
    "JacoTypeGraph",
    "VertexDegree",
    "build_graph",
    "degrees",
    "edge_count",
    "edges",
    "export_graph",
    "extend_graph",
    "has_arc",
    "in_neighbors",
    "is_clique",
    "jaconian_set",
    "prime_jaconian_vertex",
    "vertices",
]
