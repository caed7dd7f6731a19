"""Finite graphs as trees of matroids: tree structures, torsos, undomination, examples."""

from __future__ import annotations

from graph_structures.formats import (
    GraphDocument,
    parse_graph,
    parse_structure,
    render_graph,
    render_structure,
)
from graph_structures.generators import (
    Coloring,
    degree_ray_tree,
    four_circuit_counts,
    gen_coloring,
    gen_t2_k3,
    gen_t_k2,
    gen_tgame,
    ladder,
    path_tree,
    t_k2_structure,
)
from graph_structures.structures import (
    RootedForestOrder,
    StructureFailure,
    StructureReport,
    TreeStructure,
    check_spanning_tree,
    normal_spanning_tree,
    tree_structure_from_nst,
)
from graph_structures.torsos import (
    binary_representation,
    bond_dummy_bound,
    circuit_dummy_bound,
    dummy_edges,
    subdivide_interfaces,
    subdivided_structure,
    torso,
    tree_of_matroids,
)
from graph_structures.undomination import (
    UndominationGraph,
    repeats_an_edge,
    separates_in_undomination,
    undomination_graph,
    walk_g,
    walk_u,
)

__all__ = [
    "Coloring",
    "GraphDocument",
    "RootedForestOrder",
    "StructureFailure",
    "StructureReport",
    "TreeStructure",
    "UndominationGraph",
    "binary_representation",
    "bond_dummy_bound",
    "check_spanning_tree",
    "circuit_dummy_bound",
    "degree_ray_tree",
    "dummy_edges",
    "four_circuit_counts",
    "gen_coloring",
    "gen_t2_k3",
    "gen_t_k2",
    "gen_tgame",
    "ladder",
    "normal_spanning_tree",
    "parse_graph",
    "parse_structure",
    "path_tree",
    "render_graph",
    "render_structure",
    "repeats_an_edge",
    "separates_in_undomination",
    "subdivide_interfaces",
    "subdivided_structure",
    "t_k2_structure",
    "torso",
    "tree_of_matroids",
    "undomination_graph",
    "walk_g",
    "walk_u",
]
