"""Explicit finite trees of matroids.

Nodes carry finite matroids whose ground sets overlap only along tree edges.
Labels shared by two adjacent nodes are dummy edges; every other label is a
ground element, unless it is listed as a boundary label left open by a
truncation.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import TYPE_CHECKING

import networkx as nx

from matroid_common import InputError, format_set, sort_labels
from matroid_common.config import ToolkitLimits, resolve_limits
from matroid_common.exceptions import check_cap

if TYPE_CHECKING:
    from collections.abc import Iterable, Mapping

    from matroid_kernel import Matroid

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ExplicitTreeOfMatroids:
    """A finite tree ``T`` with a matroid ``M(t)`` at every node.

    Attributes:
        nodes: Node names in canonical order.
        edges: Tree edges as sorted name pairs, in canonical order.
        matroids: The matroid stored at each node.
        root: Distinguished node; depths and parents are measured from it.
        boundary: Labels whose far side was cut away by a truncation. They
            are neither dummy edges nor ground elements.
    """

    nodes: tuple[str, ...]
    edges: tuple[tuple[str, str], ...]
    matroids: Mapping[str, Matroid] = field(repr=False)
    root: str
    boundary: frozenset[str] = frozenset()

    # ========================================================================
    # Construction
    # ========================================================================

    @classmethod
    def build(
        cls,
        matroids: Mapping[str, Matroid],
        edges: Iterable[tuple[str, str]] | None = None,
        *,
        root: str | None = None,
        boundary: Iterable[str] = (),
        limits: ToolkitLimits | None = None,
    ) -> ExplicitTreeOfMatroids:
        """Validate and build a tree of matroids.

        Args:
            matroids: Node name to matroid.
            edges: Tree edges. When omitted, two nodes are adjacent exactly
                when their ground sets meet.
            root: Defaults to the first node in canonical order.
            boundary: Labels left open by truncation; each must occur in
                exactly one node.
            limits: Caps the node count by ``tree_node_cap``.

        Raises:
            InputError: If the edges do not form a tree on the nodes, two
                non-adjacent nodes share a label, or a label occurs in more
                than two nodes.
            ResourceCapError: If there are more than ``tree_node_cap`` nodes.
        """
        nodes = sort_labels(matroids)
        if not nodes:
            msg = "A tree of matroids needs at least one node"
            raise InputError(msg)
        check_cap("tree_node_cap", resolve_limits(limits).tree_node_cap, len(nodes))

        holders: dict[str, list[str]] = {}
        for node in nodes:
            for label in matroids[node].ground:
                holders.setdefault(label, []).append(node)
        crowded = sorted(
            label for label, where in holders.items() if len(where) > 2  # noqa: PLR2004
        )
        if crowded:
            msg = f"Labels {crowded} occur in more than two nodes"
            raise InputError(msg)

        if edges is None:
            candidates = [(w[0], w[1]) for w in holders.values() if len(w) == 2]  # noqa: PLR2004
        else:
            candidates = list(edges)
        pairs = {(min(u, v), max(u, v)) for u, v in candidates}
        graph = nx.Graph()
        graph.add_nodes_from(nodes)
        for u, v in pairs:
            if u not in matroids or v not in matroids:
                msg = f"Tree edge {u}-{v} names an unknown node"
                raise InputError(msg)
            graph.add_edge(u, v)
        if not nx.is_tree(graph):
            msg = "The node adjacencies do not form a tree"
            raise InputError(msg)

        for label, where in holders.items():
            if len(where) == 2 and not graph.has_edge(*where):  # noqa: PLR2004
                msg = f"Nodes {where[0]} and {where[1]} share '{label}' but are not adjacent"
                raise InputError(msg)

        open_labels = frozenset(boundary)
        stray = sorted(x for x in open_labels if len(holders.get(x, ())) != 1)
        if stray:
            msg = f"Boundary labels {stray} must occur in exactly one node"
            raise InputError(msg)

        chosen_root = nodes[0] if root is None else root
        if chosen_root not in matroids:
            msg = f"Root '{chosen_root}' is not a node"
            raise InputError(msg)
        ordered_edges = tuple(sorted(pairs))
        return cls(nodes, ordered_edges, dict(matroids), chosen_root, open_labels)

    # ========================================================================
    # Structure
    # ========================================================================

    @cached_property
    def graph(self) -> nx.Graph:
        """The underlying tree as a networkx graph."""
        tree = nx.Graph()
        tree.add_nodes_from(self.nodes)
        tree.add_edges_from(self.edges)
        return tree

    @cached_property
    def depths(self) -> dict[str, int]:
        """Distance of every node from the root."""
        return dict(nx.single_source_shortest_path_length(self.graph, self.root))

    @cached_property
    def parents(self) -> dict[str, str | None]:
        """Parent of every node towards the root (``None`` at the root)."""
        parents: dict[str, str | None] = {self.root: None}
        for parent, child in nx.bfs_edges(self.graph, self.root):
            parents[child] = parent
        return parents

    def neighbours(self, node: str) -> tuple[str, ...]:
        """Adjacent nodes in canonical order."""
        return tuple(sorted(self.graph.neighbors(node)))

    def matroid(self, node: str) -> Matroid:
        """The matroid ``M(node)``."""
        if node not in self.matroids:
            msg = f"Unknown node '{node}'"
            raise InputError(msg)
        return self.matroids[node]

    def interface(self, first: str, second: str) -> frozenset[str]:
        """``E(tt')``: the labels shared by two nodes."""
        return frozenset(self.matroid(first).ground) & frozenset(self.matroid(second).ground)

    def interface_label(self, first: str, second: str) -> str:
        """``e(tt')`` for an overlap-1 edge.

        Raises:
            InputError: If the interface does not have exactly one label.
        """
        shared = self.interface(first, second)
        if len(shared) != 1:
            msg = f"Interface {first}-{second} is {format_set(shared)}, not a single label"
            raise InputError(msg)
        return next(iter(shared))

    @cached_property
    def dummies(self) -> frozenset[str]:
        """All labels lying on some tree edge."""
        found: set[str] = set()
        for u, v in self.edges:
            found |= self.interface(u, v)
        return frozenset(found)

    @cached_property
    def ground(self) -> frozenset[str]:
        """``E(T)``: labels that are neither dummy nor boundary."""
        labels = set(itertools.chain.from_iterable(m.ground for m in self.matroids.values()))
        return frozenset(labels) - self.dummies - self.boundary

    @cached_property
    def is_overlap_one(self) -> bool:
        """Every interface holds exactly one label."""
        return all(len(self.interface(u, v)) == 1 for u, v in self.edges)

    def node_of(self, label: str) -> str:
        """The node holding a ground or boundary label.

        Raises:
            InputError: If no node holds ``label`` or it is a dummy edge.
        """
        if label in self.dummies:
            msg = f"'{label}' is a dummy edge"
            raise InputError(msg)
        for node in self.nodes:
            if label in self.matroids[node].ground:
                return node
        msg = f"'{label}' is not in the tree"
        raise InputError(msg)

    # ========================================================================
    # Duality and minors
    # ========================================================================

    def _with(self, matroids: Mapping[str, Matroid]) -> ExplicitTreeOfMatroids:
        return ExplicitTreeOfMatroids(
            self.nodes, self.edges, dict(matroids), self.root, self.boundary
        )

    def dual(self) -> ExplicitTreeOfMatroids:
        """``T*``: every node matroid replaced by its dual."""
        return self._with({node: m.dual() for node, m in self.matroids.items()})

    def minor(
        self, contract: Iterable[str] = (), delete: Iterable[str] = ()
    ) -> ExplicitTreeOfMatroids:
        """``T / contract \\ delete``, applied node by node.

        Raises:
            InputError: If the sets overlap or touch labels outside the ground set.
        """
        contracted, deleted = frozenset(contract), frozenset(delete)
        if contracted & deleted:
            msg = f"Contract and delete sets overlap in {format_set(contracted & deleted)}"
            raise InputError(msg)
        outside = (contracted | deleted) - self.ground
        if outside:
            msg = f"{format_set(outside)} are not ground elements (dummy or unknown)"
            raise InputError(msg)
        return self._with(
            {
                node: m.minor(contracted & set(m.ground), deleted & set(m.ground))
                for node, m in self.matroids.items()
            }
        )

    def contract(self, elements: Iterable[str]) -> ExplicitTreeOfMatroids:
        """``T / elements``."""
        return self.minor(contract=elements)

    def delete(self, elements: Iterable[str]) -> ExplicitTreeOfMatroids:
        """``T \\ elements``."""
        return self.minor(delete=elements)

    # ========================================================================
    # Truncation
    # ========================================================================

    def truncate(self, depth: int) -> ExplicitTreeOfMatroids:
        """Keep the nodes within ``depth`` of the root.

        Labels shared with a dropped node become boundary labels.
        """
        if depth < 0:
            msg = f"Depth must be non-negative, got {depth}"
            raise InputError(msg)
        kept = {node for node, d in self.depths.items() if d <= depth}
        opened = {x for x in self.boundary if self.node_of(x) in kept}
        for u, v in self.edges:
            if (u in kept) != (v in kept):
                opened |= self.interface(u, v)
        kept_edges = tuple(e for e in self.edges if e[0] in kept and e[1] in kept)
        logger.debug("trees.truncate", extra={"depth": depth, "nodes": len(kept)})
        return ExplicitTreeOfMatroids(
            tuple(n for n in self.nodes if n in kept),
            kept_edges,
            {n: self.matroids[n] for n in self.nodes if n in kept},
            self.root,
            frozenset(opened),
        )
