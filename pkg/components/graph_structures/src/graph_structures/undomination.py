"""The undomination graph ``U(G, T)`` and walks between ``G`` and ``U``.

``U`` has a vertex ``(v, t)`` for every vertex ``v`` of ``G`` and ``t`` of
the spanning tree ``T``. T-edges join ``(v, t)`` and ``(v, t')`` for every
tree edge ``tt'``; the G-edge of ``vv'`` joins ``(v, v')`` and ``(v', v)``.
Contracting the T-edges gives back ``G``.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from functools import cached_property
from typing import TYPE_CHECKING

import networkx as nx

from matroid_common import InputError
from matroid_kernel import Graph

from graph_structures.structures import check_spanning_tree

if TYPE_CHECKING:
    from collections.abc import Iterable, Sequence

logger = logging.getLogger(__name__)

Pair = tuple[str, str]


def pair_name(vertex: str, node: str) -> str:
    """Vertex name of ``(vertex, node)`` in ``U``."""
    return f"{vertex}@{node}"


@dataclass(frozen=True)
class UndominationGraph:
    """``U(G, T)`` together with the graph and tree it was built from.

    Attributes:
        graph: ``G``.
        tree: The spanning tree ``T``.
        undominated: ``U`` as a graph on ``v@t`` vertex names. T-edges are
            labelled ``v@tt'`` after the tree edge, G-edges keep their
            label in ``G``.
    """

    graph: Graph
    tree: Graph
    undominated: Graph

    @cached_property
    def _tree_network(self) -> nx.Graph:
        return self.tree.to_networkx()

    @cached_property
    def network(self) -> nx.Graph:
        """``U`` as a networkx graph on ``(v, t)`` pairs."""
        network = nx.Graph()
        network.add_nodes_from(itertools.product(self.graph.vertices, self.tree.vertices))
        for v in self.graph.vertices:
            network.add_edges_from(((v, e.u), (v, e.v)) for e in self.tree.edges)
        network.add_edges_from(((e.u, e.v), (e.v, e.u)) for e in self.graph.edges)
        return network

    @property
    def t_edge_count(self) -> int:
        """``|V(G)| · |E(T)|``."""
        return len(self.graph.vertices) * len(self.tree.edges)

    @property
    def g_edge_count(self) -> int:
        """One G-edge per edge of ``G``."""
        return len(self.graph.edges)

    def tree_path(self, start: str, end: str) -> list[str]:
        """``sTe``: the vertices of the unique path in ``T``."""
        path: list[str] = nx.shortest_path(self._tree_network, start, end)
        return path

    def is_g_edge(self, first: Pair, second: Pair) -> bool:
        """``(v, v')(v', v)`` for an edge ``vv'`` of ``G``."""
        (v, t), (w, s) = first, second
        return v == s and w == t and self.graph.edge_between(v, w) is not None

    def is_t_edge(self, first: Pair, second: Pair) -> bool:
        """``(v, t)(v, t')`` for a tree edge ``tt'``."""
        (v, t), (w, s) = first, second
        return v == w and self.tree.edge_between(t, s) is not None


def undomination_graph(graph: Graph, tree: Graph) -> UndominationGraph:
    """Build ``U(G, T)``.

    Raises:
        InputError: If ``tree`` is not a spanning tree of ``graph``.
    """
    check_spanning_tree(graph, tree)
    vertices = [pair_name(v, t) for v in graph.vertices for t in tree.vertices]
    edges = [
        (pair_name(v, e.u), pair_name(v, e.v), pair_name(v, e.label))
        for v in graph.vertices
        for e in tree.edges
    ]
    edges.extend((pair_name(e.u, e.v), pair_name(e.v, e.u), e.label) for e in graph.edges)
    undominated = Graph.build(vertices, edges)
    logger.debug(
        "graphs.undomination",
        extra={"vertices": len(vertices), "edges": len(undominated.edges)},
    )
    return UndominationGraph(graph, tree, undominated)


# ============================================================================
# Walks
# ============================================================================


def repeats_an_edge(walk: Sequence[object]) -> bool:
    """Some edge is traversed twice, in either direction."""
    steps = [frozenset(step) for step in itertools.pairwise(walk)]
    return len(steps) != len(set(steps))


def _check_graph_walk(graph: Graph, walk: Sequence[str]) -> None:
    if not walk:
        msg = "A walk needs at least one vertex"
        raise InputError(msg)
    for v, w in itertools.pairwise(walk):
        if graph.edge_between(v, w) is None:
            msg = f"{v}-{w} is not an edge of the graph"
            raise InputError(msg)


def walk_u(
    undomination: UndominationGraph, walk: Sequence[str], start: str, end: str
) -> list[Pair]:
    """``u_{t,t'}(P)``: lift a walk of ``G`` to ``U``.

    The lift runs along ``{p_1} × (t T p_2)``, crosses the G-edge of
    ``p_1 p_2``, runs along ``{p_2} × (p_1 T p_3)`` and so on, ending with
    ``{p_n} × (p_{n-1} T t')``. A walk repeating an edge is lifted all the
    same, but :func:`walk_g` need not invert the result; it is logged.

    Raises:
        InputError: If ``walk`` is not a walk of ``G`` or ``start``/``end``
            are not tree vertices.
    """
    _check_graph_walk(undomination.graph, walk)
    for node in (start, end):
        if node not in undomination.tree.vertices:
            msg = f"'{node}' is not a vertex of the tree"
            raise InputError(msg)
    if repeats_an_edge(walk):
        logger.warning("graphs.walk_repeats_edge", extra={"walk": list(walk)})
    lifted: list[Pair] = []
    last = len(walk) - 1
    for i, vertex in enumerate(walk):
        entry = start if i == 0 else walk[i - 1]
        leave = end if i == last else walk[i + 1]
        lifted.extend((vertex, node) for node in undomination.tree_path(entry, leave))
    return lifted


def walk_g(undomination: UndominationGraph, walk: Sequence[Pair]) -> list[str]:
    """``g(P)``: the walk of ``G`` traced by the G-edges of a walk in ``U``.

    Raises:
        InputError: If ``walk`` is empty or is not a walk of ``U``.
    """
    if not walk:
        msg = "A walk needs at least one vertex"
        raise InputError(msg)
    traced = [walk[0][0]]
    for first, second in itertools.pairwise(walk):
        if undomination.is_g_edge(first, second):
            traced.append(second[0])
        elif not undomination.is_t_edge(first, second):
            msg = f"{pair_name(*first)}-{pair_name(*second)} is not an edge of U"
            raise InputError(msg)
    return traced


def separates_in_undomination(
    undomination: UndominationGraph, separator: Iterable[str], first: Pair, second: Pair
) -> bool:
    """``X × X`` separates ``first`` from ``second`` in ``U``."""
    removed = set(itertools.product(separator, repeat=2))
    if first in removed or second in removed:
        return True
    rest = undomination.network.subgraph(n for n in undomination.network if n not in removed)
    return not nx.has_path(rest, first, second)
