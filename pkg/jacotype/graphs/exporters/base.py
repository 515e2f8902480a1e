"""Abstract GraphExporter interface for all graph export formats."""

from __future__ import annotations

import abc

from jacotype.graphs.jaco import JacoTypeGraph


class GraphExporter(abc.ABC):
    """Base class for all graph exporters.

    Exporters are deterministic: arcs come out in ascending (i, j) order
    and the returned text ends with a newline.
    """

    @property
    @abc.abstractmethod
    def format_name(self) -> str:
        """Short format identifier (e.g., 'dot', 'edge-list', 'json')."""

    @abc.abstractmethod
    def export(self, graph: JacoTypeGraph) -> str:
        """Render *graph* as a text document."""
