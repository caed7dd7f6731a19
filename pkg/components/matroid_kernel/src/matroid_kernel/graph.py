"""Finite simple graphs with labelled edges."""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

import networkx as nx

from matroid_common import InputError, sort_labels

if TYPE_CHECKING:
    from collections.abc import Iterable


@dataclass(frozen=True, order=True)
class Edge:
    """An undirected edge ``u``-``v`` carrying a unique ``label``."""

    label: str
    u: str
    v: str

    def ends(self) -> frozenset[str]:
        """The two endpoints."""
        return frozenset((self.u, self.v))

    def other(self, vertex: str) -> str:
        """The endpoint that is not ``vertex``."""
        if vertex == self.u:
            return self.v
        if vertex == self.v:
            return self.u
        msg = f"{vertex} is not an end of edge {self.label}"
        raise InputError(msg)


@dataclass(frozen=True)
class Graph:
    """A finite simple graph.

    Vertices and edges are stored in canonical order; edge labels are unique
    and default to ``uv`` with the endpoints sorted.
    """

    vertices: tuple[str, ...]
    edges: tuple[Edge, ...]

    @classmethod
    def build(
        cls,
        vertices: Iterable[str],
        edges: Iterable[tuple[str, str] | tuple[str, str, str]],
    ) -> Graph:
        """Validate and normalise a vertex list and an edge list.

        Edge tuples are ``(u, v)`` or ``(u, v, label)``; endpoints missing from
        ``vertices`` are added.

        Raises:
            InputError: On loops, parallel edges or repeated labels.
        """
        verts = set(vertices)
        built: list[Edge] = []
        seen_pairs: set[frozenset[str]] = set()
        seen_labels: set[str] = set()
        for item in edges:
            u, v = item[0], item[1]
            if u == v:
                msg = f"Loop at {u}: graphs must be simple"
                raise InputError(msg)
            a, b = sorted((u, v))
            label = item[2] if len(item) == 3 else f"{a}{b}"  # noqa: PLR2004
            pair = frozenset((u, v))
            if pair in seen_pairs:
                msg = f"Parallel edge {a}-{b}: graphs must be simple"
                raise InputError(msg)
            if label in seen_labels:
                msg = f"Edge label {label!r} is used twice"
                raise InputError(msg)
            seen_pairs.add(pair)
            seen_labels.add(label)
            verts.update((u, v))
            built.append(Edge(label, a, b))
        return cls(sort_labels(verts), tuple(sorted(built)))

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> Graph:
        """Convert an undirected networkx graph; ``label`` edge data is honoured."""
        edges = [
            (str(u), str(v), str(data["label"])) if "label" in data else (str(u), str(v))
            for u, v, data in graph.edges(data=True)
        ]
        return cls.build((str(v) for v in graph.nodes), edges)

    def to_networkx(self) -> nx.Graph:
        """The same graph as ``networkx.Graph`` with edge attribute ``label``."""
        graph = nx.Graph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from((e.u, e.v, {"label": e.label}) for e in self.edges)
        return graph

    # ========================================================================
    # Queries
    # ========================================================================

    @property
    def edge_labels(self) -> tuple[str, ...]:
        """Edge labels in canonical order."""
        return sort_labels(e.label for e in self.edges)

    def edge(self, label: str) -> Edge:
        """Look an edge up by label."""
        for e in self.edges:
            if e.label == label:
                return e
        msg = f"No edge labelled {label!r}"
        raise InputError(msg)

    def edge_between(self, u: str, v: str) -> Edge | None:
        """The edge joining ``u`` and ``v``, if any."""
        pair = frozenset((u, v))
        return next((e for e in self.edges if e.ends() == pair), None)

    def incident(self, vertex: str) -> tuple[Edge, ...]:
        """Edges at ``vertex``."""
        return tuple(e for e in self.edges if vertex in (e.u, e.v))

    def neighbours(self, vertex: str) -> tuple[str, ...]:
        """Adjacent vertices in canonical order."""
        return sort_labels(e.other(vertex) for e in self.incident(vertex))

    def degree(self, vertex: str) -> int:
        """Number of incident edges."""
        return len(self.incident(vertex))

    def is_connected(self) -> bool:
        """True for connected graphs; the empty graph counts as connected."""
        return not self.vertices or nx.is_connected(self.to_networkx())

    def induced(self, vertices: Iterable[str]) -> Graph:
        """The induced subgraph on ``vertices``."""
        keep = set(vertices)
        return Graph(
            sort_labels(keep),
            tuple(e for e in self.edges if e.u in keep and e.v in keep),
        )
