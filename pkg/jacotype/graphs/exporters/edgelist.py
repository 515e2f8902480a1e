"""Edge-list exporter — lines ``i j`` with i < j."""

from __future__ import annotations

from jacotype.graphs.exporters.base import GraphExporter
from jacotype.graphs.jaco import JacoTypeGraph


class EdgeListExporter(GraphExporter):

    @property
    def format_name(self) -> str:
        return "edge-list"

    def export(self, graph: JacoTypeGraph) -> str:
        return "".join(f"{i} {j}\n" for i, j in graph.arcs())
