"""Tests for Ψ-circuit queries, witnesses, duality and induced matroids."""

from __future__ import annotations

import pytest

from matroid_common import (
    InputError,
    InvariantViolationError,
    ResourceCapError,
    ToolkitLimits,
    telemetry,
)
from matroid_kernel import Matroid
from matroid_trees import TreePresentation, TreeRepresentation
from parity_game_api import ParityArena, ParityGameSolver, Player, Strategy
from parity_solver_impl import BruteForceSolver

from circuit_games import (
    GameSetup,
    duality_check,
    extract_automaton,
    induced_matroid,
    materialize_precircuit,
    materialize_vector,
    play,
    psi_circuit_exists,
)


class _ColinAlwaysWins(ParityGameSolver):
    """A broken solver used to trip the consistency checks."""

    name = "colin-always"

    def solve(self, arena: ParityArena) -> Strategy:
        return Strategy(tuple(Player.COLIN for _ in arena.positions), {}, arena.initial, self.name)


# ============================================================================
# Ψ-circuits and their witnesses
# ============================================================================


@pytest.mark.unit
def test_all_ends_make_d0_a_loop(tgame: TreePresentation) -> None:
    """With Ψ = all ends Sarah wins and ``d0`` is a Ψ-circuit."""
    verdict = psi_circuit_exists(tgame, "d0")

    assert verdict.sarah_wins
    assert verdict.kind == "circuit"
    assert verdict.materialization.support == frozenset({"d0"})
    assert verdict.materialization.precircuit is not None
    assert verdict.describe() == "winner: Sarah; d0 is a Ψ-circuit"


@pytest.mark.unit
@pytest.mark.parametrize("depth", range(9))
def test_witness_materializes_at_every_depth(tgame: TreePresentation, depth: int) -> None:
    """Sarah's strategy unfolds to a valid pre-circuit down to depth 8."""
    game = play(GameSetup.build(tgame, "d0"))

    materialization = materialize_precircuit(game, depth)

    assert materialization.depth == depth
    assert materialization.support == frozenset({"d0"})
    assert materialization.precircuit is not None
    assert "root" in materialization.precircuit.nodes


@pytest.mark.unit
def test_no_ends_make_d0_a_coloop(tgame: TreePresentation) -> None:
    """With Ψ empty Colin wins and the cocircuit game yields ``{d0}``."""
    verdict = psi_circuit_exists(tgame.shifted(1), "d0")

    assert not verdict.sarah_wins
    assert verdict.kind == "cocircuit"
    assert verdict.materialization.support == frozenset({"d0"})
    assert verdict.describe() == "winner: Colin; d0 is a Ψᶜ-cocircuit"


@pytest.mark.unit
def test_buchi_condition_is_won_by_sarah(buchi: TreePresentation) -> None:
    """Sarah keeps taking the favoured 0-child at every even level."""
    verdict = psi_circuit_exists(buchi, "d0", depth=6)

    assert verdict.sarah_wins
    assert verdict.materialization.precircuit is not None
    even = [s for s in verdict.automaton.states if s.site.key == "even"]
    assert even
    assert all(s.circuit == frozenset({"up", "c0"}) for s in even)


@pytest.mark.unit
def test_co_buchi_condition_is_won_by_colin(co_buchi: TreePresentation) -> None:
    """Colin keeps entering even levels through 0-transitions."""
    verdict = psi_circuit_exists(co_buchi, "d0")

    assert not verdict.sarah_wins


@pytest.mark.unit
def test_automaton_lists_reachable_choices(tgame: TreePresentation) -> None:
    """The automaton starts at the root and renders as a ``strategy`` section."""
    automaton = extract_automaton(play(GameSetup.build(tgame, "d0")))

    assert automaton.states[0].site.key == "root"
    assert "d0" in automaton.states[0].circuit
    assert all(edge.source < len(automaton.states) for edge in automaton.edges)
    text = automaton.render()
    assert text.startswith("strategy\n  q0 at root in {d0} plays {")
    assert "q0 -> q1" in text


@pytest.mark.unit
def test_automaton_needs_a_sarah_win(tgame: TreePresentation) -> None:
    """A lost game has no circuit strategy."""
    game = play(GameSetup.build(tgame.shifted(1), "d0"))

    with pytest.raises(InputError, match="does not win"):
        extract_automaton(game)
    with pytest.raises(InputError, match="won by Sarah"):
        materialize_precircuit(game, 2)


@pytest.mark.unit
def test_queries_are_counted(tgame: TreePresentation) -> None:
    """Each circuit query increments its counter."""
    sample = "matroid_toolkit_circuit_game_queries_total"
    before = telemetry.REGISTRY.get_sample_value(sample, {"kind": "circuit"}) or 0.0

    psi_circuit_exists(tgame, "d0", depth=1)

    assert telemetry.REGISTRY.get_sample_value(sample, {"kind": "circuit"}) == before + 1


@pytest.mark.unit
def test_other_solvers_can_be_injected(triangles: TreePresentation) -> None:
    """The brute-force oracle answers the same query."""
    verdict = psi_circuit_exists(triangles, "a", ["b", "c", "d"], solver=BruteForceSolver())

    assert verdict.sarah_wins
    assert verdict.materialization.support == frozenset("abcd")


@pytest.mark.unit
def test_inconsistent_solver_is_reported(tgame: TreePresentation) -> None:
    """A solver that lets Colin win both games trips the cocircuit check."""
    with pytest.raises(InvariantViolationError, match="not the cocircuit game"):
        psi_circuit_exists(tgame, "d0", solver=_ColinAlwaysWins())


# ============================================================================
# Vector witnesses
# ============================================================================


@pytest.mark.unit
def test_vector_witness_at_depth_zero(
    tgame: TreePresentation, tgame_rep: TreeRepresentation
) -> None:
    """At depth 0 the witness is a single root vector through ``d0``."""
    game = play(GameSetup.build(tgame, "d0", representation=tgame_rep))

    materialization = materialize_vector(game, 0)

    assert materialization.vector is not None
    assert set(materialization.vector.vectors) == {"root"}
    assert materialization.vector.vectors["root"]["d0"] == 1
    assert materialization.support == frozenset({"d0"})


@pytest.mark.unit
def test_vector_witness_agrees_on_every_interface(
    tgame: TreePresentation, tgame_rep: TreeRepresentation
) -> None:
    """At depth 4 the weighted sums agree across all interfaces."""
    verdict = psi_circuit_exists(tgame, "d0", representation=tgame_rep, depth=4)

    psi = verdict.materialization.vector
    assert psi is not None
    assert psi.depth == 4
    assert not psi.is_zero()
    assert verdict.materialization.support == frozenset({"d0"})
    assert len(psi.vectors) == len(verdict.materialization.tree.nodes)


@pytest.mark.unit
def test_vector_witness_needs_a_representation(tgame: TreePresentation) -> None:
    """Overlap-1 games have no vectors to sum."""
    with pytest.raises(InputError, match="need a representation"):
        materialize_vector(play(GameSetup.build(tgame, "d0")), 2)


@pytest.mark.unit
def test_representable_cocircuit_witness(
    tgame: TreePresentation, tgame_rep: TreeRepresentation
) -> None:
    """With Ψ empty the dual vectors witness the coloop."""
    verdict = psi_circuit_exists(tgame.shifted(1), "d0", representation=tgame_rep, depth=3)

    assert not verdict.sarah_wins
    assert verdict.materialization.vector is not None
    assert verdict.materialization.support == frozenset({"d0"})


# ============================================================================
# Duality
# ============================================================================


@pytest.mark.unit
def test_duality_holds_on_the_alternating_tree(
    tgame: TreePresentation, buchi: TreePresentation, co_buchi: TreePresentation
) -> None:
    """Colin wins the circuit game exactly when Colin wins the cocircuit game."""
    expected = {"all": True, "none": False, "buchi": True, "co-buchi": False}
    cases = {"all": tgame, "none": tgame.shifted(1), "buchi": buchi, "co-buchi": co_buchi}

    for name, presentation in cases.items():
        verdict = duality_check(presentation, "d0")
        assert verdict.agree
        assert verdict.sarah_wins is expected[name]


@pytest.mark.unit
def test_co_buchi_is_won_by_colin_in_both_games(co_buchi: TreePresentation) -> None:
    """Colin wins the circuit game and the cocircuit game."""
    verdict = duality_check(co_buchi, "d0")

    assert not verdict.sarah_wins
    assert verdict.colin_wins_cocircuit_game


@pytest.mark.unit
def test_duality_on_every_triangle_partition(triangles: TreePresentation) -> None:
    """Every partition of the glued triangles' edges agrees."""
    others = ["b", "c", "d"]
    for mask in range(8):
        pco = [x for i, x in enumerate(others) if mask >> i & 1]
        verdict = duality_check(triangles, "a", pco)
        assert verdict.agree
        assert verdict.sarah_wins is (len(pco) == 3)


@pytest.mark.unit
def test_duality_with_a_representation(
    tgame: TreePresentation, tgame_rep: TreeRepresentation
) -> None:
    """The representable games satisfy the same duality."""
    verdict = duality_check(tgame, "d0", representation=tgame_rep)

    assert verdict.agree
    assert verdict.sarah_wins
    assert verdict.positions[0] > 0


@pytest.mark.unit
def test_dead_end_only_arena_is_won_by_colin_twice() -> None:
    """With a coloop ``e`` Sarah is stuck at once and Colin wins both games."""
    single = TreePresentation.build({"r": Matroid.uniform(2, ["e", "f"])}, {}, [])

    verdict = duality_check(single, "e")

    assert not verdict.sarah_wins
    assert verdict.colin_wins_cocircuit_game


@pytest.mark.unit
def test_disagreement_is_an_invariant_violation(tgame: TreePresentation) -> None:
    """A solver claiming Colin wins everything fails certification."""
    with pytest.raises(InvariantViolationError, match="certificate"):
        duality_check(tgame, "d0", solver=_ColinAlwaysWins())


# ============================================================================
# Induced matroids
# ============================================================================


@pytest.mark.unit
def test_induced_matroid_of_glued_triangles(triangles: TreePresentation) -> None:
    """Two triangles glued along ``x`` induce the 4-circuit."""
    induced = induced_matroid(triangles)

    assert induced.matroid == Matroid.uniform(3, ["a", "b", "c", "d"])
    assert induced.report.passed
    assert induced.queries == 64


@pytest.mark.unit
def test_induced_loop_and_coloop(tgame: TreePresentation) -> None:
    """``d0`` is a loop when Ψ holds all ends and a coloop when it holds none."""
    loop = induced_matroid(tgame).matroid
    coloop = induced_matroid(tgame.shifted(1)).matroid

    assert loop.is_loop("d0")
    assert coloop.is_coloop("d0")


@pytest.mark.unit
def test_induced_parallel_pair(k3: TreePresentation) -> None:
    """The dummy feeding the core acts as a loop, leaving ``x`` parallel to ``y``."""
    induced = induced_matroid(k3, limits=ToolkitLimits(workers=2))

    assert induced.matroid.circuits == (frozenset("xy"),)


@pytest.mark.unit
def test_induced_matroid_from_a_representation(
    tgame: TreePresentation, tgame_rep: TreeRepresentation
) -> None:
    """Vector games induce the same matroid as circuit games."""
    assert induced_matroid(tgame, representation=tgame_rep).matroid == induced_matroid(
        tgame
    ).matroid


@pytest.mark.unit
def test_induced_cap(triangles: TreePresentation) -> None:
    """More real edges than ``induced_cap`` is refused."""
    with pytest.raises(ResourceCapError) as excinfo:
        induced_matroid(triangles, limits=ToolkitLimits(induced_cap=3))

    assert excinfo.value.requested == 4
