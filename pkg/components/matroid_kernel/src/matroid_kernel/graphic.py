"""Binary representations of graphic and cographic matroids."""

from __future__ import annotations

from typing import TYPE_CHECKING

from gf_linalg import Subspace, Vector, complement

if TYPE_CHECKING:
    from matroid_kernel.graph import Graph


def cut_space(graph: Graph) -> Subspace:
    """The cut space of ``graph`` over GF(2), spanned by the vertex stars.

    Its minimal nonempty supports are the bonds of ``graph``.
    """
    labels = graph.edge_labels
    stars = [
        Vector.from_mapping(labels, 2, {e.label: 1 for e in graph.incident(v)})
        for v in graph.vertices
    ]
    return Subspace.span(labels, 2, stars)


def cycle_space(graph: Graph) -> Subspace:
    """The cycle space of ``graph`` over GF(2).

    Its minimal nonempty supports are the edge sets of cycles.
    """
    return complement(cut_space(graph))
