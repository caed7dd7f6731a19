"""Line-oriented text formats for graphs and tree structures.

Graph documents::

    graph <name>
    vertex <v>
    edge <u> <v> [label]

Tree-structure documents list one ``class <t>: <v1> <v2> …`` line per class
and one ``tedge <t> <t'>`` line per tree edge; the first class is the root.
Blank lines and lines starting with ``#`` are ignored.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

from matroid_common import FormatError, InputError
from matroid_kernel import Graph

from graph_structures.structures import TreeStructure

if TYPE_CHECKING:
    from collections.abc import Iterator

_EDGE_FIELDS = (3, 4)


@dataclass(frozen=True)
class GraphDocument:
    """A named graph read from or written to text."""

    name: str
    graph: Graph


def _lines(text: str) -> Iterator[tuple[int, str, list[str]]]:
    for number, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split()
        if tokens and not tokens[0].startswith("#"):
            yield number, raw, tokens


def _column(raw: str, token: str) -> int:
    return raw.find(token) + 1


def parse_graph(text: str, *, source: str = "-") -> GraphDocument:
    """Read a graph document.

    Raises:
        FormatError: On an unknown keyword, a wrong field count, a missing
            header, or an edge the graph cannot hold (loops, parallels).
    """
    name: str | None = None
    vertices: list[str] = []
    edges: list[tuple[str, str] | tuple[str, str, str]] = []
    last = 0
    for number, raw, tokens in _lines(text):
        last = number
        keyword = tokens[0]
        if name is None:
            if keyword != "graph" or len(tokens) != 2:  # noqa: PLR2004
                msg = "expected 'graph <name>' first"
                raise FormatError(msg, source=source, line=number, column=_column(raw, keyword))
            name = tokens[1]
        elif keyword == "vertex" and len(tokens) == 2:  # noqa: PLR2004
            vertices.append(tokens[1])
        elif keyword == "edge" and len(tokens) in _EDGE_FIELDS:
            if len(tokens) == _EDGE_FIELDS[1]:
                edges.append((tokens[1], tokens[2], tokens[3]))
            else:
                edges.append((tokens[1], tokens[2]))
            try:
                Graph.build(vertices, edges)
            except InputError as exc:
                raise FormatError(
                    str(exc), source=source, line=number, column=_column(raw, tokens[1])
                ) from exc
        else:
            msg = f"cannot read '{raw.strip()}'"
            raise FormatError(msg, source=source, line=number, column=_column(raw, keyword))
    if name is None:
        msg = "empty graph document"
        raise FormatError(msg, source=source, line=max(last, 1))
    return GraphDocument(name, Graph.build(vertices, edges))


def render_graph(graph: Graph, name: str = "G") -> str:
    """Write ``graph`` in canonical order."""
    lines = [f"graph {name}"]
    lines.extend(f"vertex {v}" for v in graph.vertices)
    lines.extend(f"edge {e.u} {e.v} {e.label}" for e in graph.edges)
    return "\n".join(lines) + "\n"


def parse_structure(text: str, graph: Graph, *, source: str = "-") -> TreeStructure:
    """Read a tree-structure document over ``graph``.

    Raises:
        FormatError: On a malformed line, a repeated class or an unknown
            class or vertex.
    """
    classes: dict[str, list[str]] = {}
    edges: list[tuple[str, str]] = []
    root: str | None = None
    last = 0
    for number, raw, tokens in _lines(text):
        last = number
        keyword = tokens[0]
        if keyword == "class" and len(tokens) >= 2 and tokens[1].endswith(":"):  # noqa: PLR2004
            name = tokens[1][:-1]
            if not name or name in classes:
                msg = f"class '{name}' is empty-named or repeated"
                raise FormatError(msg, source=source, line=number, column=_column(raw, tokens[1]))
            classes[name] = tokens[2:]
            root = root or name
        elif keyword == "tedge" and len(tokens) == 3:  # noqa: PLR2004
            edges.append((tokens[1], tokens[2]))
        else:
            msg = f"cannot read '{raw.strip()}'"
            raise FormatError(msg, source=source, line=number, column=_column(raw, keyword))
    try:
        return TreeStructure.build(graph, classes, edges, root=root)
    except InputError as exc:
        raise FormatError(str(exc), source=source, line=max(last, 1)) from exc


def render_structure(structure: TreeStructure) -> str:
    """Write ``structure`` with the root class first."""
    names = [structure.root, *sorted(n for n in structure.classes if n != structure.root)]
    lines = [f"class {n}: {' '.join(sorted(structure.classes[n]))}" for n in names]
    lines.extend(f"tedge {u} {v}" for u, v in structure.edges)
    return "\n".join(lines) + "\n"
