"""Torsos of tree structures and the trees of matroids they carry.

Every edge ``e = vv'`` leaving a class ``t`` is cut at a dummy vertex
``v_e``. In the torso of ``t`` the half ``v v_e`` is labelled ``e:v``, and
the dummy vertices of edges running to the same neighbouring class are
joined pairwise by dummy edges labelled ``e~f``. Adjacent torsos share
exactly those dummy edges, and their halves are the edges of the graph
``G'`` in which every cross edge is subdivided.
"""

from __future__ import annotations

import itertools
import logging
from typing import TYPE_CHECKING

from matroid_common import InputError, InvariantViolationError, sort_labels
from matroid_kernel import Graph, Matroid, cycle_space
from matroid_trees import ExplicitTreeOfMatroids, TreeRepresentation

if TYPE_CHECKING:
    from collections.abc import Iterable

    from matroid_common.config import ToolkitLimits
    from matroid_kernel import Edge

    from graph_structures.structures import TreeStructure

logger = logging.getLogger(__name__)


def dummy_vertex(edge: Edge) -> str:
    """Name of the vertex subdividing ``edge``."""
    return f"v_{edge.label}"


def half_label(edge: Edge, end: str) -> str:
    """Label of the half of ``edge`` at ``end``."""
    return f"{edge.label}:{end}"


def dummy_label(first: Edge, second: Edge) -> str:
    """Label of the dummy edge joining the dummy vertices of two leaving edges."""
    a, b = sorted((first.label, second.label))
    return f"{a}~{b}"


def _check_fresh(graph: Graph, structure: TreeStructure) -> None:
    taken = set(graph.vertices) & {dummy_vertex(e) for e in structure.cross_edges}
    if taken:
        msg = f"Vertices {sorted(taken)} clash with dummy vertex names"
        raise InputError(msg)


def _require_class(structure: TreeStructure, name: str) -> None:
    if name not in structure.classes:
        msg = f"'{name}' is not a class of the tree structure"
        raise InputError(msg)


# ============================================================================
# Torsos
# ============================================================================


def torso(graph: Graph, structure: TreeStructure, name: str) -> Graph:
    """The torso of class ``name``.

    Raises:
        InputError: If ``name`` is not a class, or a vertex of ``graph`` is
            named like a dummy vertex.
    """
    _require_class(structure, name)
    _check_fresh(graph, structure)
    members = structure.classes[name]
    edges: list[tuple[str, str, str]] = [
        (e.u, e.v, e.label) for e in graph.edges if e.u in members and e.v in members
    ]
    towards: dict[str, list[Edge]] = {}
    for e in structure.leaving(name):
        inner = e.u if e.u in members else e.v
        edges.append((inner, dummy_vertex(e), half_label(e, inner)))
        towards.setdefault(structure.class_of(e.other(inner)), []).append(e)
    for group in towards.values():
        edges.extend(
            (dummy_vertex(e), dummy_vertex(f), dummy_label(e, f))
            for e, f in itertools.combinations(sorted(group), 2)
        )
    return Graph.build(members, edges)


def dummy_edges(graph: Graph, structure: TreeStructure, name: str) -> frozenset[str]:
    """Labels of the dummy edges in the torso of ``name``."""
    _require_class(structure, name)
    found: set[str] = set()
    for neighbour in structure.neighbours(name):
        between = sorted(structure.between(name, neighbour))
        found.update(dummy_label(e, f) for e, f in itertools.combinations(between, 2))
    return frozenset(found)


def tree_of_matroids(
    graph: Graph, structure: TreeStructure, *, limits: ToolkitLimits | None = None
) -> ExplicitTreeOfMatroids:
    """The graphic matroids of all torsos, glued along their dummy edges.

    Raises:
        InputError: If a torso cannot be built.
        ResourceCapError: If there are more than ``tree_node_cap`` classes.
        InvariantViolationError: If a width-2 structure does not give a tree
            of overlap 1.
    """
    matroids = {
        name: Matroid.from_graph(torso(graph, structure, name), name=name)
        for name in sort_labels(structure.classes)
    }
    tree = ExplicitTreeOfMatroids.build(
        matroids, structure.edges, root=structure.root, limits=limits
    )
    if structure.width_two and not tree.is_overlap_one:
        msg = "A width-2 tree structure produced a tree of matroids without overlap 1"
        raise InvariantViolationError(msg, detail={"classes": len(matroids)})
    logger.debug(
        "graphs.tree_of_matroids",
        extra={"nodes": len(tree.nodes), "overlap_one": tree.is_overlap_one},
    )
    return tree


def binary_representation(
    graph: Graph, structure: TreeStructure, *, limits: ToolkitLimits | None = None
) -> TreeRepresentation:
    """The cycle space of every torso over GF(2), keyed by class."""
    tree = tree_of_matroids(graph, structure, limits=limits)
    spaces = {
        name: cycle_space(torso(graph, structure, name)) for name in sort_labels(structure.classes)
    }
    return TreeRepresentation.build(tree.matroids, spaces, limits=limits)


# ============================================================================
# Subdivision
# ============================================================================


def _home(structure: TreeStructure, edge: Edge) -> str:
    """The end of a cross edge whose class lies nearer the root class."""
    u, v = edge.u, edge.v
    if structure.depths[structure.class_of(u)] <= structure.depths[structure.class_of(v)]:
        return u
    return v


def subdivide_interfaces(graph: Graph, structure: TreeStructure) -> Graph:
    """``G'``: every cross edge ``e = vv'`` becomes ``v v_e`` and ``v' v_e``.

    Raises:
        InputError: If a vertex of ``graph`` is named like a dummy vertex.
    """
    _check_fresh(graph, structure)
    crossing = set(structure.cross_edges)
    edges: list[tuple[str, str, str]] = []
    for e in graph.edges:
        if e in crossing:
            middle = dummy_vertex(e)
            edges.extend(
                ((e.u, middle, half_label(e, e.u)), (e.v, middle, half_label(e, e.v)))
            )
        else:
            edges.append((e.u, e.v, e.label))
    return Graph.build(graph.vertices, edges)


def subdivided_structure(graph: Graph, structure: TreeStructure) -> TreeStructure:
    """The tree structure of ``G'``.

    Each ``v_e`` joins the class of the end of ``e`` nearer the root class;
    class names, tree edges and the root are unchanged.
    """
    subdivided = subdivide_interfaces(graph, structure)
    classes = {name: set(members) for name, members in structure.classes.items()}
    for e in structure.cross_edges:
        classes[structure.class_of(_home(structure, e))].add(dummy_vertex(e))
    return TreeStructure.build(subdivided, classes, structure.edges, root=structure.root)


# ============================================================================
# Dummy bounds
# ============================================================================


def _most_dummies(family: Iterable[frozenset[str]], dummies: frozenset[str]) -> int:
    return max((len(member & dummies) for member in family), default=0)


def bond_dummy_bound(torso_graph: Graph, dummies: Iterable[str], k: int) -> bool:
    """No bond of ``torso_graph`` contains more than ``k`` of ``dummies``."""
    bonds = Matroid.from_graph(torso_graph).cocircuits
    return _most_dummies(bonds, frozenset(dummies)) <= k


def circuit_dummy_bound(torso_graph: Graph, dummies: Iterable[str], k: int) -> bool:
    """No cycle of ``torso_graph`` contains more than ``k`` of ``dummies``."""
    cycles = Matroid.from_graph(torso_graph).circuits
    return _most_dummies(cycles, frozenset(dummies)) <= k
