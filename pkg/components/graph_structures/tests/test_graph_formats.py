"""Tests for the graph and tree-structure text formats."""

from __future__ import annotations

import pytest

from matroid_common import FormatError
from matroid_kernel import Graph

from graph_structures import (
    GraphDocument,
    TreeStructure,
    parse_graph,
    parse_structure,
    render_graph,
    render_structure,
)

Ladder = tuple[Graph, TreeStructure]


@pytest.mark.unit
def test_graph_document_reads_back(ladder3: Ladder) -> None:
    """Rendering then parsing a graph gives the same graph and name."""
    graph, _ = ladder3

    assert parse_graph(render_graph(graph, "ladder")) == GraphDocument("ladder", graph)


@pytest.mark.unit
def test_graph_document_with_comments_and_default_labels() -> None:
    """Comments and blank lines are skipped; unlabelled edges get ``uv`` labels."""
    text = "# a triangle\ngraph tri\n\nvertex x\nedge a b\nedge b c bc\nedge a c\n"

    document = parse_graph(text)

    assert document.name == "tri"
    assert document.graph.vertices == ("a", "b", "c", "x")
    assert {e.label for e in document.graph.edges} == {"ab", "bc", "ac"}


@pytest.mark.unit
@pytest.mark.parametrize(
    ("text", "line", "reason"),
    [
        ("vertex a\n", 1, "expected 'graph <name>' first"),
        ("graph g\nedge a a\n", 2, "Loop at a"),
        ("graph g\nedge a b\nedge b a\n", 3, "Parallel edge"),
        ("graph g\nvertices a b\n", 2, "cannot read"),
        ("# nothing\n", 1, "empty graph document"),
    ],
)
def test_graph_document_errors_carry_positions(text: str, line: int, reason: str) -> None:
    """Every error names the offending line."""
    with pytest.raises(FormatError) as caught:
        parse_graph(text, source="g.txt")

    assert caught.value.line == line
    assert reason in caught.value.reason
    assert str(caught.value).startswith(f"g.txt:{line}:")


@pytest.mark.unit
def test_structure_document_reads_back(ladder3: Ladder) -> None:
    """Rendering then parsing a tree structure gives it back, root included."""
    graph, structure = ladder3

    text = render_structure(structure)

    assert text.splitlines()[0] == "class p1: p1 p1'"
    assert parse_structure(text, graph) == structure


@pytest.mark.unit
def test_structure_document_errors(ladder3: Ladder) -> None:
    """Malformed lines, repeated classes and unknown classes are rejected."""
    graph, _ = ladder3
    with pytest.raises(FormatError, match="cannot read"):
        parse_structure("class p1 p1\n", graph)
    with pytest.raises(FormatError, match="repeated"):
        parse_structure("class p1: p1\nclass p1: p1'\n", graph)
    with pytest.raises(FormatError, match="unknown class"):
        parse_structure("class p1: p1 p1'\ntedge p1 p7\n", graph)
