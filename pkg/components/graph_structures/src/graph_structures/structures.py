"""Rooted spanning trees and tree structures on finite graphs.

A tree structure partitions the vertices into classes that form the nodes of
a tree: each class induces a connected subgraph and two classes are adjacent
in the tree exactly when some graph edge joins them. Normal spanning trees
yield one canonically, by growing down-closed vertex sets level by level.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import TYPE_CHECKING

import networkx as nx

from matroid_common import InputError, InvariantViolationError, format_set, sort_labels
from matroid_kernel import Graph

if TYPE_CHECKING:
    from collections.abc import Iterable, Iterator, Mapping

    from matroid_kernel import Edge

logger = logging.getLogger(__name__)


# ============================================================================
# Rooted spanning trees
# ============================================================================


@dataclass(frozen=True)
class RootedForestOrder:
    """A rooted spanning tree and the tree order ``≤`` it induces.

    ``u ≤ v`` when ``u`` lies on the path from the root to ``v``.

    Attributes:
        graph: The graph the tree spans.
        root: The least vertex.
        parent: Tree parent of every vertex; ``None`` at the root.
        normal: Every graph edge joins ``≤``-comparable vertices.
    """

    graph: Graph
    root: str
    parent: Mapping[str, str | None] = field(repr=False)
    normal: bool

    @classmethod
    def from_tree(cls, graph: Graph, tree: Graph, root: str) -> RootedForestOrder:
        """Root a given spanning tree of ``graph`` at ``root``.

        Raises:
            InputError: If ``tree`` is not a spanning tree of ``graph`` or
                ``root`` is not a vertex.
        """
        check_spanning_tree(graph, tree)
        if root not in graph.vertices:
            msg = f"Root '{root}' is not a vertex"
            raise InputError(msg)
        parent: dict[str, str | None] = {root: None}
        for u, v in nx.bfs_edges(tree.to_networkx(), root, sort_neighbors=sorted):
            parent[v] = u
        return cls(graph, root, parent, _is_normal(graph, parent))

    @cached_property
    def depth(self) -> dict[str, int]:
        """Distance from the root in the tree."""
        depths: dict[str, int] = {}
        for vertex in self.parent:
            depths[vertex] = sum(1 for _ in self.ancestors(vertex)) - 1
        return depths

    @cached_property
    def tree_edges(self) -> tuple[tuple[str, str], ...]:
        """Parent-child pairs in canonical order."""
        return tuple(sorted((p, v) for v, p in self.parent.items() if p is not None))

    def as_graph(self) -> Graph:
        """The spanning tree itself, with edge labels taken from the graph."""
        labels = {e.ends(): e.label for e in self.graph.edges}
        return Graph.build(
            self.graph.vertices,
            [(p, v, labels[frozenset((p, v))]) for p, v in self.tree_edges],
        )

    def ancestors(self, vertex: str) -> Iterator[str]:
        """``vertex`` and every vertex below it, walking towards the root."""
        current: str | None = vertex
        while current is not None:
            yield current
            current = self.parent[current]

    def leq(self, first: str, second: str) -> bool:
        """``first ≤ second`` in the tree order."""
        return any(a == first for a in self.ancestors(second))

    def comparable(self, first: str, second: str) -> bool:
        """Either vertex lies below the other."""
        return self.leq(first, second) or self.leq(second, first)

    def down_closure(self, vertices: Iterable[str]) -> frozenset[str]:
        """``X↓``: every vertex ``≤`` some member of ``X``."""
        closed: set[str] = set()
        for vertex in vertices:
            closed.update(self.ancestors(vertex))
        return frozenset(closed)

    def delta(self, vertices: Iterable[str]) -> frozenset[str]:
        """``δ(X)``: the minimal vertices not in ``X``."""
        inside = frozenset(vertices)
        return frozenset(
            v
            for v in self.parent
            if v not in inside and all(a in inside for a in self.ancestors(v) if a != v)
        )


def check_spanning_tree(graph: Graph, tree: Graph) -> None:
    """Raise ``InputError`` unless ``tree`` is a spanning tree of ``graph``."""
    if set(tree.vertices) != set(graph.vertices):
        msg = "The tree must span exactly the vertices of the graph"
        raise InputError(msg)
    if tree.vertices and not nx.is_tree(tree.to_networkx()):
        msg = "The tree has a cycle or is disconnected"
        raise InputError(msg)
    foreign = [f"{e.u}-{e.v}" for e in tree.edges if graph.edge_between(e.u, e.v) is None]
    if foreign:
        msg = f"Tree edges {foreign} are not edges of the graph"
        raise InputError(msg)


def _is_normal(graph: Graph, parent: Mapping[str, str | None]) -> bool:
    def below(first: str, second: str) -> bool:
        current: str | None = second
        while current is not None:
            if current == first:
                return True
            current = parent[current]
        return False

    return all(below(e.u, e.v) or below(e.v, e.u) for e in graph.edges)


def normal_spanning_tree(graph: Graph, root: str) -> RootedForestOrder:
    """A depth-first search tree rooted at ``root``.

    Neighbours are visited in canonical order, so the tree is deterministic.
    The search is iterative; every graph edge is checked for comparability.

    Raises:
        InputError: If ``graph`` is disconnected or ``root`` is not a vertex.
        InvariantViolationError: If the search tree is not normal.
    """
    if root not in graph.vertices:
        msg = f"Root '{root}' is not a vertex"
        raise InputError(msg)
    if not graph.is_connected():
        msg = "A normal spanning tree needs a connected graph"
        raise InputError(msg)

    parent: dict[str, str | None] = {root: None}
    stack = [(root, iter(graph.neighbours(root)))]
    while stack:
        vertex, pending = stack[-1]
        child = next((w for w in pending if w not in parent), None)
        if child is None:
            stack.pop()
            continue
        parent[child] = vertex
        stack.append((child, iter(graph.neighbours(child))))

    order = RootedForestOrder(graph, root, parent, _is_normal(graph, parent))
    if not order.normal:
        msg = f"The depth-first tree from {root} is not normal"
        raise InvariantViolationError(msg, detail={"root": root})
    logger.debug(
        "graphs.normal_spanning_tree",
        extra={"root": root, "depth": max(order.depth.values())},
    )
    return order


# ============================================================================
# Tree structures
# ============================================================================


@dataclass(frozen=True)
class StructureFailure:
    """One violated tree-structure condition.

    Attributes:
        kind: ``partition``, ``disconnected``, ``adjacency`` or ``tree``.
        detail: Human-readable description.
    """

    kind: str
    detail: str


@dataclass(frozen=True)
class StructureReport:
    """Outcome of :meth:`TreeStructure.validate`."""

    failures: tuple[StructureFailure, ...]

    @property
    def valid(self) -> bool:
        """No condition failed."""
        return not self.failures


@dataclass(frozen=True)
class TreeStructure:
    """A partition of ``V(G)`` into classes arranged as a tree.

    Attributes:
        graph: The partitioned graph.
        classes: Vertex set of each class, keyed by class name.
        edges: Tree edges as sorted class-name pairs.
        root: Distinguished class.
    """

    graph: Graph
    classes: Mapping[str, frozenset[str]] = field(repr=False)
    edges: tuple[tuple[str, str], ...]
    root: str

    @classmethod
    def build(
        cls,
        graph: Graph,
        classes: Mapping[str, Iterable[str]],
        edges: Iterable[tuple[str, str]],
        *,
        root: str | None = None,
    ) -> TreeStructure:
        """Collect classes and tree edges; :meth:`validate` checks the rest.

        Raises:
            InputError: If there are no classes, an edge or the root names an
                unknown class, or a class lists an unknown vertex.
        """
        frozen = {name: frozenset(members) for name, members in classes.items()}
        if not frozen:
            msg = "A tree structure needs at least one class"
            raise InputError(msg)
        known = set(graph.vertices)
        for name in sort_labels(frozen):
            stray = frozen[name] - known
            if stray:
                msg = f"Class {name} lists {format_set(stray)}, which are not vertices"
                raise InputError(msg)
        pairs: set[tuple[str, str]] = set()
        for u, v in edges:
            if u not in frozen or v not in frozen:
                msg = f"Tree edge {u}-{v} names an unknown class"
                raise InputError(msg)
            pairs.add((min(u, v), max(u, v)))
        chosen = sort_labels(frozen)[0] if root is None else root
        if chosen not in frozen:
            msg = f"Root class '{chosen}' is unknown"
            raise InputError(msg)
        return cls(graph, frozen, tuple(sorted(pairs)), chosen)

    @cached_property
    def tree(self) -> nx.Graph:
        """The tree on class names."""
        tree = nx.Graph()
        tree.add_nodes_from(self.classes)
        tree.add_edges_from(self.edges)
        return tree

    @cached_property
    def _network(self) -> nx.Graph:
        return self.graph.to_networkx()

    @cached_property
    def _owner(self) -> dict[str, str]:
        return {v: name for name, members in self.classes.items() for v in members}

    def class_of(self, vertex: str) -> str:
        """The class holding ``vertex``."""
        if vertex not in self._owner:
            msg = f"Vertex '{vertex}' is in no class"
            raise InputError(msg)
        return self._owner[vertex]

    def neighbours(self, name: str) -> tuple[str, ...]:
        """Adjacent classes in canonical order."""
        return sort_labels(self.tree.neighbors(name))

    @cached_property
    def depths(self) -> dict[str, int]:
        """Distance of every class from the root class."""
        return dict(nx.single_source_shortest_path_length(self.tree, self.root))

    def leaving(self, name: str) -> tuple[Edge, ...]:
        """Graph edges with exactly one end in class ``name``."""
        members = self.classes[name]
        return tuple(e for e in self.graph.edges if (e.u in members) != (e.v in members))

    def between(self, first: str, second: str) -> tuple[Edge, ...]:
        """Graph edges joining the two classes."""
        a, b = self.classes[first], self.classes[second]
        return tuple(
            e for e in self.graph.edges if (e.u in a and e.v in b) or (e.u in b and e.v in a)
        )

    @cached_property
    def cross_edges(self) -> tuple[Edge, ...]:
        """Graph edges whose ends lie in different classes."""
        return tuple(e for e in self.graph.edges if self._owner.get(e.u) != self._owner.get(e.v))

    @cached_property
    def width(self) -> int:
        """The largest number of edges joining two adjacent classes; 0 for one class."""
        return max((len(self.between(u, v)) for u, v in self.edges), default=0)

    @cached_property
    def width_two(self) -> bool:
        """Every pair of adjacent classes is joined by exactly two edges."""
        return all(len(self.between(u, v)) == 2 for u, v in self.edges)  # noqa: PLR2004

    def validate(self) -> StructureReport:
        """Check every tree-structure condition and report all failures."""
        failures: list[StructureFailure] = []
        seen: dict[str, str] = {}
        for name in sort_labels(self.classes):
            members = self.classes[name]
            if not members:
                failures.append(StructureFailure("partition", f"class {name} is empty"))
            for v in sort_labels(members):
                if v in seen:
                    failures.append(
                        StructureFailure("partition", f"{v} lies in {seen[v]} and {name}")
                    )
                seen[v] = name
            if members and not nx.is_connected(self._network.subgraph(members)):
                failures.append(
                    StructureFailure("disconnected", f"class {name} = {format_set(members)}")
                )
        missing = set(self.graph.vertices) - set(seen)
        if missing:
            failures.append(StructureFailure("partition", f"{format_set(missing)} in no class"))
        if not nx.is_tree(self.tree):
            failures.append(StructureFailure("tree", "the class adjacencies do not form a tree"))
        names = sort_labels(self.classes)
        for i, u in enumerate(names):
            for v in names[i + 1 :]:
                joined = bool(self.between(u, v))
                if joined != self.tree.has_edge(u, v):
                    state = "joined but not adjacent" if joined else "adjacent but unjoined"
                    failures.append(StructureFailure("adjacency", f"{u} and {v} are {state}"))
        return StructureReport(tuple(failures))


def tree_structure_from_nst(graph: Graph, order: RootedForestOrder) -> TreeStructure:
    """The tree structure grown from a normal spanning tree.

    Starting from ``V_0 = ∅``, each round sets
    ``V_{n+1} = V_n ∪ N(V_n)↓ ∪ δ(V_n)`` and gives every ``v ∈ δ(V_n)`` the
    class ``{v' ∈ V_{n+1} - V_n : v ≤ v'}``, named after ``v``. A class is the
    tree child of the class holding the parent of its name.

    Raises:
        InputError: If ``order`` is not normal or spans another graph.
        InvariantViolationError: If the result fails validation.
    """
    if not order.normal:
        msg = "The tree structure needs a normal spanning tree"
        raise InputError(msg)
    if set(order.parent) != set(graph.vertices):
        msg = "The spanning tree does not span this graph"
        raise InputError(msg)

    everything = frozenset(graph.vertices)
    reached: frozenset[str] = frozenset()
    classes: dict[str, frozenset[str]] = {}
    rounds = 0
    while reached != everything:
        fringe = frozenset(w for v in reached for w in graph.neighbours(v)) - reached
        starts = order.delta(reached)
        grown = reached | order.down_closure(fringe) | starts
        for start in starts:
            classes[start] = frozenset(w for w in grown - reached if order.leq(start, w))
        reached = grown
        rounds += 1

    owner = {v: name for name, members in classes.items() for v in members}
    edges = []
    for name in classes:
        up = order.parent[name]
        if up is not None:
            edges.append((owner[up], name))
    structure = TreeStructure.build(graph, classes, edges, root=order.root)
    report = structure.validate()
    if not report.valid:
        msg = "The normal spanning tree grew an invalid tree structure"
        raise InvariantViolationError(
            msg, detail={"failures": [f.detail for f in report.failures]}
        )
    logger.debug(
        "graphs.tree_structure",
        extra={"classes": len(classes), "rounds": rounds, "width": structure.width},
    )
    return structure
