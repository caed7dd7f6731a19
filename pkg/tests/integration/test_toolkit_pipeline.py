"""Integration tests spanning the matroid, game and graph components.

Each test feeds one component's output into another without going through
the command line.
"""

from __future__ import annotations

import itertools
from pathlib import Path

import pytest
from circuit_games import induced_matroid, psi_circuit_exists
from gf_linalg import Subspace
from graph_structures import (
    dummy_edges,
    four_circuit_counts,
    gen_tgame,
    normal_spanning_tree,
    parse_graph,
    torso,
    tree_structure_from_nst,
)
from matroid_cli import parse_presentation, parse_system, render_presentation
from matroid_kernel import Graph, Matroid
from matroid_trees import delta_glue
from orthogonality_axioms import SetSystemPair, check_axioms, reconstruct
from parity_solver_impl import ZielonkaSolver

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

pytestmark = pytest.mark.integration


# ---------------------------------------------------------------------------
# Matroids and axioms
# ---------------------------------------------------------------------------


def test_k4_pair_reconstructs_the_graphic_matroid() -> None:
    """The hand-written K4 pair passes the axioms and gives back M(K4)."""
    system = parse_system((FIXTURES / "k4.system").read_text(encoding="utf-8"))
    graph = Graph.build([], itertools.combinations("abcd", 2))

    report = check_axioms(system)

    assert report.passed
    assert reconstruct(system) == Matroid.from_graph(graph)
    assert SetSystemPair.from_matroid(Matroid.from_graph(graph)).circuits == system.circuits


def test_not_orthogonal_fixture_fails_only_orthogonality() -> None:
    """A cocircuit meeting the circuit once breaks (O1) but not the clutter axioms."""
    system = parse_system((FIXTURES / "not_orthogonal.system").read_text(encoding="utf-8"))

    report = check_axioms(system)

    assert not report.verdict("(O1)").passed
    assert report.verdict("(C1)").passed
    assert report.verdict("(C2)").passed


# ---------------------------------------------------------------------------
# Trees of matroids and games
# ---------------------------------------------------------------------------


def test_induced_matroid_equals_the_glued_representation() -> None:
    """Games on two glued triangles agree with the Δ-glue of their subspaces."""
    document = parse_presentation((FIXTURES / "triangles.presentation").read_text(encoding="utf-8"))
    left = Subspace.from_rows("abx", 2, [(1, 1, 1)])
    right = Subspace.from_rows("cdx", 2, [(1, 1, 1)])

    induced = induced_matroid(document.presentation, representation=document.representation)

    assert induced.report.passed
    assert induced.matroid == Matroid.from_representation(delta_glue(left, right))
    assert induced.matroid == Matroid.uniform(3, "abcd")


def test_presentation_text_keeps_the_game_outcome() -> None:
    """A rendered and re-read presentation has the same winners under an injected solver."""
    presentation = parse_presentation(render_presentation(gen_tgame())).presentation
    solver = ZielonkaSolver()

    assert psi_circuit_exists(presentation, "d0", solver=solver).sarah_wins
    assert not psi_circuit_exists(presentation.shifted(1), "d0", solver=solver).sarah_wins


# ---------------------------------------------------------------------------
# Graph structures
# ---------------------------------------------------------------------------


def test_normal_spanning_tree_structure_has_graphic_torsos() -> None:
    """Every torso of the grown structure carries its dummy edges and a graphic matroid."""
    graph = parse_graph((FIXTURES / "ladder3.graph").read_text(encoding="utf-8")).graph
    structure = tree_structure_from_nst(graph, normal_spanning_tree(graph, "p1"))

    assert structure.validate().valid
    for name in structure.classes:
        piece = torso(graph, structure, name)
        labels = {e.label for e in piece.edges}
        assert dummy_edges(graph, structure, name) <= labels
        assert set(Matroid.from_graph(piece).ground) == labels


def test_ladder_rungs_lie_on_their_four_cycles() -> None:
    """The middle rung of the 3-rung ladder is on two 4-cycles, the end rungs on one."""
    graph = parse_graph((FIXTURES / "ladder3.graph").read_text(encoding="utf-8")).graph

    counts = four_circuit_counts(graph)

    assert counts["p2p2'"] == 2
    assert counts["p1p1'"] == counts["p3p3'"] == 1
