"""Example families: the alternating game tree, ladders, T × K2 and T2 × K3."""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from typing import TYPE_CHECKING

import networkx as nx

from matroid_common import InputError, InvariantViolationError
from matroid_kernel import Graph, Matroid
from matroid_trees import Transition, TreePresentation

from graph_structures.structures import TreeStructure

if TYPE_CHECKING:
    from collections.abc import Mapping

logger = logging.getLogger(__name__)

# The three colours of K3, also used for the T2 edge colouring.
COLOURS = (0, 1, 2)


def _require_depth(depth: int) -> None:
    if depth < 1:
        msg = f"Depth must be at least 1, got {depth}"
        raise InputError(msg)


# ============================================================================
# The alternating game tree
# ============================================================================


def gen_tgame() -> TreePresentation:
    """The binary tree with U(1,3) at even levels and U(2,3) at odd levels.

    The root holds the only real edge ``d0`` and the dummies ``c0``/``c1``;
    every core state has local labels ``up``, ``c0``, ``c1`` and transitions
    ``0``/``1`` named after the child they create. All priorities are 0,
    so every end belongs to Ψ.
    """
    even = Matroid.uniform(1, ["up", "c0", "c1"], name="even")
    odd = Matroid.uniform(2, ["up", "c0", "c1"], name="odd")
    transitions = [
        Transition.build(source, child, target, {f"c{child}": "up"})
        for source, target in (("root", "odd"), ("even", "odd"), ("odd", "even"))
        for child in ("0", "1")
    ]
    return TreePresentation.build(
        {"root": Matroid.uniform(1, ["d0", "c0", "c1"], name="root")},
        {"even": even, "odd": odd},
        transitions,
        name="tgame",
    )


# ============================================================================
# T × K2
# ============================================================================


def _truncated(tree: Graph, depth: int, root: str | None) -> tuple[str, dict[str, int]]:
    start = tree.vertices[0] if root is None else root
    if start not in tree.vertices:
        msg = f"Root '{start}' is not a vertex of the tree"
        raise InputError(msg)
    network = tree.to_networkx()
    if not nx.is_tree(network):
        msg = "T x K2 needs a tree"
        raise InputError(msg)
    return start, dict(nx.single_source_shortest_path_length(network, start, cutoff=depth))


def clone(vertex: str) -> str:
    """The copy ``v'`` of a tree vertex in ``T × K2``."""
    return f"{vertex}'"


def gen_t_k2(tree: Graph, depth: int, *, root: str | None = None) -> Graph:
    """``T × K2`` on the vertices within ``depth`` of ``root``.

    Each kept tree vertex ``v`` appears with its clone ``v'`` and the rung
    ``vv'``; each kept tree edge appears in both copies.

    Raises:
        InputError: If ``tree`` is not a tree, ``root`` is not a vertex or
            ``depth`` is below 1.
    """
    _require_depth(depth)
    _, kept = _truncated(tree, depth, root)
    edges: list[tuple[str, str]] = [(v, clone(v)) for v in kept]
    for e in tree.edges:
        if e.u in kept and e.v in kept:
            edges.extend(((e.u, e.v), (clone(e.u), clone(e.v))))
    graph = Graph.build([], edges)
    logger.debug("graphs.gen_t_k2", extra={"vertices": len(graph.vertices), "depth": depth})
    return graph


def t_k2_structure(tree: Graph, depth: int, *, root: str | None = None) -> TreeStructure:
    """The tree structure of :func:`gen_t_k2` with classes ``{v, v'}`` named ``v``."""
    start, kept = _truncated(tree, depth, root)
    graph = gen_t_k2(tree, depth, root=start)
    edges = [(e.u, e.v) for e in tree.edges if e.u in kept and e.v in kept]
    return TreeStructure.build(graph, {v: (v, clone(v)) for v in kept}, edges, root=start)


def path_tree(length: int) -> Graph:
    """The path ``p1 - p2 - … - p{length}``."""
    if length < 1:
        msg = f"A path needs at least one vertex, got {length}"
        raise InputError(msg)
    names = [f"p{i}" for i in range(1, length + 1)]
    return Graph.build(names, itertools.pairwise(names))


def ladder(rungs: int) -> tuple[Graph, TreeStructure]:
    """The ladder with ``rungs`` rungs and its width-2 rung-pair tree structure."""
    if rungs < 1:
        msg = f"A ladder needs at least one rung, got {rungs}"
        raise InputError(msg)
    path = path_tree(rungs)
    depth = max(rungs - 1, 1)
    return gen_t_k2(path, depth, root="p1"), t_k2_structure(path, depth, root="p1")


def degree_ray_tree(depth: int) -> Graph:
    """The spine ``v2 - v3 - … - v{depth+2}`` with leaves making ``deg v_n = n``.

    Rooted at ``v2``, it has exactly one vertex of each degree from 2 to
    ``depth + 2``; leaves of ``v_n`` are named ``l{n}_{i}``.
    """
    _require_depth(depth)
    spine = [f"v{n}" for n in range(2, depth + 3)]
    edges: list[tuple[str, str]] = list(itertools.pairwise(spine))
    for index, vertex in enumerate(spine):
        n = index + 2
        on_spine = (index > 0) + (index < len(spine) - 1)
        edges.extend((vertex, f"l{n}_{i}") for i in range(n - on_spine))
    return Graph.build(spine, edges)


def four_circuit_counts(graph: Graph) -> dict[str, int]:
    """Number of 4-cycles through every edge, keyed by edge label."""
    counts: dict[str, int] = {}
    for e in graph.edges:
        found = 0
        for x in graph.neighbours(e.u):
            for y in graph.neighbours(e.v):
                if e.v not in (x, y) and e.u not in (x, y) and x != y:
                    found += graph.edge_between(x, y) is not None
        counts[e.label] = found
    return counts


# ============================================================================
# T2 × K3
# ============================================================================


@dataclass(frozen=True)
class Coloring:
    """A colouring of the edges of the binary tree ``T2`` truncated at ``depth``.

    Vertices are ``r`` followed by a 0/1 word ``s``; the length of ``s``
    decides whether a vertex sees one colour (even) or three (odd).

    Attributes:
        depth: Longest word kept.
        tree: The truncated binary tree.
        colours: Colour of every tree edge, keyed by its label: the word of
            its lower end.
    """

    depth: int
    tree: Graph
    colours: Mapping[str, int]

    def seen(self, vertex: str) -> frozenset[int]:
        """Colours of the edges at ``vertex``."""
        return frozenset(self.colours[e.label] for e in self.tree.incident(vertex))

    def failures(self) -> tuple[str, ...]:
        """Inner vertices seeing the wrong number of colours."""
        found: list[str] = []
        for vertex in self.tree.vertices:
            length = len(vertex) - 1
            if length >= self.depth:
                continue
            wanted = 3 if length % 2 else 1
            if len(self.seen(vertex)) != wanted:
                found.append(f"{vertex} sees {sorted(self.seen(vertex))}, wanted {wanted}")
        return tuple(found)


def _children(word: str) -> tuple[str, str]:
    return f"{word}0", f"{word}1"


def gen_coloring(depth: int) -> Coloring:
    """The 3-colouring of ``T2`` in which odd-length words see every colour.

    The root's child edges have colour 0. Below an odd-length word the two
    child edges take the colours missing from its parent edge, in increasing
    order; below an even-length word they copy the parent edge's colour.

    Raises:
        InputError: If ``depth`` is below 1.
        InvariantViolationError: If some inner vertex sees the wrong colours.
    """
    _require_depth(depth)
    edges: list[tuple[str, str, str]] = []
    parent_colour: dict[str, int] = {}
    level = ["r"]
    for length in range(depth):
        following: list[str] = []
        for word in level:
            if length == 0:
                picks = (0, 0)
            elif length % 2:
                first, second = (c for c in COLOURS if c != parent_colour[word])
                picks = (first, second)
            else:
                picks = (parent_colour[word], parent_colour[word])
            for child, colour in zip(_children(word), picks, strict=True):
                edges.append((word, child, child))
                parent_colour[child] = colour
                following.append(child)
        level = following
    coloring = Coloring(depth, Graph.build(["r"], edges), parent_colour)
    failures = coloring.failures()
    if failures:
        msg = f"The T2 colouring at depth {depth} is inconsistent"
        raise InvariantViolationError(msg, detail={"failures": list(failures)})
    return coloring


def product_vertex(word: str, colour: int) -> str:
    """The vertex ``(s, c)`` of ``T2 × K3``."""
    return f"{word}_{colour}"


def gen_t2_k3(depth: int) -> tuple[Graph, TreeStructure]:
    """``T2 × K3`` without the edges ``e × {c(e)}``, and its tree structure.

    Classes are ``{s} × V(K3)``, named after ``s``; adjacent classes are
    joined by the two edges of the colours ``e`` does not carry, so the
    structure has width 2.
    """
    coloring = gen_coloring(depth)
    edges: list[tuple[str, str]] = []
    for word in coloring.tree.vertices:
        edges.extend(
            (product_vertex(word, a), product_vertex(word, b))
            for a, b in itertools.combinations(COLOURS, 2)
        )
    for e in coloring.tree.edges:
        removed = coloring.colours[e.label]
        edges.extend(
            (product_vertex(e.u, c), product_vertex(e.v, c)) for c in COLOURS if c != removed
        )
    graph = Graph.build([], edges)
    classes = {
        word: [product_vertex(word, c) for c in COLOURS] for word in coloring.tree.vertices
    }
    structure = TreeStructure.build(
        graph, classes, [(e.u, e.v) for e in coloring.tree.edges], root="r"
    )
    logger.debug(
        "graphs.gen_t2_k3",
        extra={"depth": depth, "classes": len(classes), "edges": len(graph.edges)},
    )
    return graph, structure
