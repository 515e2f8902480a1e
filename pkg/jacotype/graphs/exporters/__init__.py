"""Graph exporters — DOT, edge list, JSON."""

from __future__ import annotations

from jacotype.errors import InvalidArgumentError
from jacotype.graphs.exporters.base import GraphExporter
from jacotype.graphs.exporters.dot import DotExporter
from jacotype.graphs.exporters.edgelist import EdgeListExporter
from jacotype.graphs.exporters.jsongraph import JsonExporter
from jacotype.graphs.jaco import JacoTypeGraph

EXPORTERS: dict[str, GraphExporter] = {
    exporter.format_name: exporter
    for exporter in (DotExporter(), EdgeListExporter(), JsonExporter())
}


def export_graph(graph: JacoTypeGraph, format: str) -> str:
    """Render *graph* in the named format."""
    exporter = EXPORTERS.get(format)
    if exporter is None:
        raise InvalidArgumentError(
            f"unknown graph format {format!r}; choose from {', '.join(sorted(EXPORTERS))}"
        )
    return exporter.export(graph)


__all__ = [
    "DotExporter",
    "EXPORTERS",
    "EdgeListExporter",
    "GraphExporter",
    "JsonExporter",
    "export_graph",
]
