"""Finite matroid kernel: circuits, duals, minors, graphs and representations."""

from __future__ import annotations

from matroid_kernel.graph import Edge, Graph
from matroid_kernel.graphic import cut_space, cycle_space
from matroid_kernel.matroid import Matroid, Provenance, Scrawl

__all__ = [
    "Edge",
    "Graph",
    "Matroid",
    "Provenance",
    "Scrawl",
    "cut_space",
    "cycle_space",
]
