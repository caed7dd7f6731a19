"""Tests for normal spanning trees and tree structures."""

from __future__ import annotations

import pytest

from matroid_common import InputError
from matroid_kernel import Graph

from graph_structures import (
    RootedForestOrder,
    TreeStructure,
    check_spanning_tree,
    normal_spanning_tree,
    tree_structure_from_nst,
)

# ============================================================================
# Normal spanning trees
# ============================================================================


@pytest.mark.unit
def test_path_tree_is_the_path_itself(path4: Graph) -> None:
    """Rooted at an end, the search tree of a path is the path."""
    order = normal_spanning_tree(path4, "v1")

    assert order.normal
    assert order.tree_edges == (("v1", "v2"), ("v2", "v3"), ("v3", "v4"))
    assert order.depth == {"v1": 0, "v2": 1, "v3": 2, "v4": 3}


@pytest.mark.unit
def test_complete_graph_gives_a_hamiltonian_path(k4: Graph) -> None:
    """Every edge of K4 joins comparable vertices only when the tree is a path."""
    order = normal_spanning_tree(k4, "a")

    assert order.parent == {"a": None, "b": "a", "c": "b", "d": "c"}
    assert all(order.comparable(e.u, e.v) for e in k4.edges)


@pytest.mark.unit
def test_chord_of_the_square_joins_comparable_ends(square: Graph) -> None:
    """The non-tree edge ``ad`` runs from the root to the deepest vertex."""
    order = normal_spanning_tree(square, "a")

    assert order.leq("a", "d")
    assert not order.leq("d", "a")
    assert order.as_graph().edge_between("a", "d") is None
    assert len(order.as_graph().edges) == 3


@pytest.mark.unit
def test_single_vertex_graph() -> None:
    """A lone vertex is its own normal spanning tree."""
    order = normal_spanning_tree(Graph.build(["x"], []), "x")

    assert order.tree_edges == ()
    assert order.depth == {"x": 0}


@pytest.mark.unit
def test_normal_spanning_tree_rejects_bad_input(path4: Graph) -> None:
    """The root must be a vertex and the graph must be connected."""
    with pytest.raises(InputError, match="not a vertex"):
        normal_spanning_tree(path4, "v9")
    with pytest.raises(InputError, match="connected"):
        normal_spanning_tree(Graph.build(["x"], [("a", "b")]), "a")


@pytest.mark.unit
def test_down_closure_and_delta(path4: Graph) -> None:
    """On a path, closures are initial segments and δ is the next vertex."""
    order = normal_spanning_tree(path4, "v1")

    assert order.down_closure(["v3"]) == frozenset({"v1", "v2", "v3"})
    assert order.delta([]) == frozenset({"v1"})
    assert order.delta(["v1", "v2"]) == frozenset({"v3"})
    assert list(order.ancestors("v3")) == ["v3", "v2", "v1"]


@pytest.mark.unit
def test_from_tree_detects_non_normal_trees(square: Graph) -> None:
    """Rooting ``b - a - d - c`` at ``a`` leaves ``bc`` between incomparable vertices."""
    tree = Graph.build([], [("a", "b"), ("a", "d"), ("c", "d")])
    order = RootedForestOrder.from_tree(square, tree, "a")

    assert not order.normal
    assert not order.comparable("b", "c")
    with pytest.raises(InputError, match="normal"):
        tree_structure_from_nst(square, order)


@pytest.mark.unit
def test_check_spanning_tree_rejects_foreign_and_cyclic_trees(square: Graph) -> None:
    """The tree must span, be acyclic and use edges of the graph."""
    with pytest.raises(InputError, match="span exactly"):
        check_spanning_tree(square, Graph.build([], [("a", "b")]))
    with pytest.raises(InputError, match="cycle"):
        check_spanning_tree(square, square)
    with pytest.raises(InputError, match="not edges of the graph"):
        check_spanning_tree(square, Graph.build([], [("a", "c"), ("a", "b"), ("c", "d")]))


# ============================================================================
# Tree structures
# ============================================================================


@pytest.mark.unit
def test_path_grows_singleton_classes(path4: Graph) -> None:
    """Each round adds exactly the next vertex of the path."""
    structure = tree_structure_from_nst(path4, normal_spanning_tree(path4, "v1"))

    assert structure.classes == {f"v{i}": frozenset({f"v{i}"}) for i in range(1, 5)}
    assert structure.edges == (("v1", "v2"), ("v2", "v3"), ("v3", "v4"))
    assert structure.width == 1
    assert not structure.width_two


@pytest.mark.unit
def test_complete_graph_grows_two_classes(k4: Graph) -> None:
    """The root is alone; everything else is reached in one round."""
    structure = tree_structure_from_nst(k4, normal_spanning_tree(k4, "a"))

    assert structure.classes == {"a": frozenset("a"), "b": frozenset("bcd")}
    assert structure.edges == (("a", "b"),)
    assert structure.width == 3
    assert structure.validate().valid


@pytest.mark.unit
def test_square_grows_a_width_two_structure(square: Graph) -> None:
    """The root class meets the rest of the square in two edges."""
    structure = tree_structure_from_nst(square, normal_spanning_tree(square, "a"))

    assert structure.width_two
    assert {e.label for e in structure.cross_edges} == {"ab", "ad"}
    assert structure.class_of("c") == "b"
    assert structure.depths == {"a": 0, "b": 1}


@pytest.mark.unit
def test_validate_reports_disconnected_classes(path4: Graph) -> None:
    """A class must induce a connected subgraph."""
    structure = TreeStructure.build(
        path4, {"s": ["v1", "v3"], "t": ["v2", "v4"]}, [("s", "t")]
    )

    kinds = {f.kind for f in structure.validate().failures}

    assert kinds == {"disconnected"}


@pytest.mark.unit
def test_validate_reports_adjacency_mismatches() -> None:
    """Joined classes must be adjacent in the tree and vice versa."""
    graph = Graph.build([], [("a", "b"), ("b", "c")])
    structure = TreeStructure.build(
        graph, {"x": ["a"], "y": ["b"], "z": ["c"]}, [("x", "y"), ("x", "z")]
    )

    failures = structure.validate().failures

    assert [f.kind for f in failures] == ["adjacency", "adjacency"]
    assert "joined but not adjacent" in failures[1].detail


@pytest.mark.unit
def test_validate_reports_uncovered_vertices_and_cycles(square: Graph) -> None:
    """Vertices must all be placed and the class adjacencies must be a tree."""
    structure = TreeStructure.build(
        square,
        {"x": ["a"], "y": ["b"], "z": ["c"]},
        [("x", "y"), ("y", "z"), ("x", "z")],
    )

    kinds = {f.kind for f in structure.validate().failures}

    assert {"partition", "tree"} <= kinds


@pytest.mark.unit
def test_build_rejects_unknown_names(path4: Graph) -> None:
    """Classes, tree edges and the root must refer to known names."""
    with pytest.raises(InputError, match="not vertices"):
        TreeStructure.build(path4, {"s": ["v1", "q"]}, [])
    with pytest.raises(InputError, match="unknown class"):
        TreeStructure.build(path4, {"s": ["v1"]}, [("s", "t")])
    with pytest.raises(InputError, match="Root class"):
        TreeStructure.build(path4, {"s": ["v1"]}, [], root="t")
    with pytest.raises(InputError, match="at least one class"):
        TreeStructure.build(path4, {}, [])
