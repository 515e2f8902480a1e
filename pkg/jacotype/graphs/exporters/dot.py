"""Graphviz DOT exporter."""

from __future__ import annotations

from jacotype.graphs.exporters.base import GraphExporter
from jacotype.graphs.jaco import JacoTypeGraph


class DotExporter(GraphExporter):
    """Export as ``digraph J { v1 -> v2; ... }``, one statement per line.

    Vertices are declared first so isolated ones still appear.
    """

    @property
    def format_name(self) -> str:
        return "dot"

    def export(self, graph: JacoTypeGraph) -> str:
        lines = ["digraph J {", f'  label="J_{graph.n}({graph.spec.label()})";']
        lines.extend(f"  v{i};" for i in range(1, graph.n + 1))
        lines.extend(f"  v{i} -> v{j};" for i, j in graph.arcs())
        lines.append("}")
        return "\n".join(lines) + "\n"
