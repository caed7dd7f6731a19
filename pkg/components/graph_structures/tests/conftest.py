"""Small graphs shared by the graph-structure tests."""

from __future__ import annotations

import itertools

import pytest

from matroid_kernel import Graph

from graph_structures import TreeStructure, ladder


@pytest.fixture
def path4() -> Graph:
    """The path ``v1 - v2 - v3 - v4``."""
    return Graph.build([], [("v1", "v2"), ("v2", "v3"), ("v3", "v4")])


@pytest.fixture
def square() -> Graph:
    """The 4-cycle ``a b c d``."""
    return Graph.build([], [("a", "b"), ("b", "c"), ("c", "d"), ("a", "d")])


@pytest.fixture
def k4() -> Graph:
    """The complete graph on ``a``, ``b``, ``c``, ``d``."""
    return Graph.build([], itertools.combinations("abcd", 2))


@pytest.fixture
def bowtie() -> Graph:
    """Two triangles sharing the cut vertex ``c``."""
    return Graph.build(
        [], [("a", "b"), ("a", "c"), ("b", "c"), ("c", "d"), ("c", "e"), ("d", "e")]
    )


@pytest.fixture
def ladder3() -> tuple[Graph, TreeStructure]:
    """The ladder with rungs at ``p1``, ``p2``, ``p3`` and its rung-pair classes."""
    return ladder(3)


@pytest.fixture
def prism() -> tuple[Graph, TreeStructure]:
    """Two triangles joined by three parallel stringers: a width-3 structure."""
    triangles = [(f"{s}{i}", f"{s}{j}") for s in "ab" for i, j in ((0, 1), (0, 2), (1, 2))]
    stringers = [(f"a{i}", f"b{i}") for i in range(3)]
    graph = Graph.build([], [*triangles, *stringers])
    structure = TreeStructure.build(
        graph,
        {"A": ["a0", "a1", "a2"], "B": ["b0", "b1", "b2"]},
        [("A", "B")],
        root="A",
    )
    return graph, structure
