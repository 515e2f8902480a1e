"""JSON exporter — n, terms, arcs, arc_count and the originating spec."""

from __future__ import annotations

import json

from jacotype.graphs.exporters.base import GraphExporter
from jacotype.graphs.jaco import JacoTypeGraph


class JsonExporter(GraphExporter):

    @property
    def format_name(self) -> str:
        return "json"

    def export(self, graph: JacoTypeGraph) -> str:
        data = {
            "n": graph.n,
            "terms": list(graph.terms),
            "arcs": [[i, j] for i, j in graph.arcs()],
            "arc_count": graph.arc_count,
            "spec": graph.spec.to_dict(),
        }
        return json.dumps(data, indent=2, sort_keys=True) + "\n"
