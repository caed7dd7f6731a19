"""Tests for the Zielonka solver, cross-checked against the exhaustive oracle."""

from __future__ import annotations

import logging

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from matroid_common import telemetry
from parity_game_api import ParityArena, Player, Position
from parity_solver_impl import BruteForceSolver, ZielonkaSolver, attractor, certify

S, C = Player.SARAH, Player.COLIN


def _arena(
    layout: list[tuple[Player, int]], moves: list[tuple[int, int]], initial: int = 0
) -> ParityArena:
    return ParityArena.build(
        [Position(owner, priority, i, str(i)) for i, (owner, priority) in enumerate(layout)],
        moves,
        initial,
    )


@st.composite
def arenas(draw: st.DrawFn) -> ParityArena:
    size = draw(st.integers(min_value=1, max_value=6))
    layout = [
        (draw(st.sampled_from([S, C])), draw(st.integers(min_value=0, max_value=4)))
        for _ in range(size)
    ]
    moves = [
        (v, u)
        for v in range(size)
        for u in draw(st.sets(st.integers(min_value=0, max_value=size - 1), max_size=3))
    ]
    return _arena(layout, moves)


# ============================================================================
# Attractor
# ============================================================================


@pytest.mark.unit
def test_attractor_needs_every_opponent_move() -> None:
    """An opponent position joins only when all its moves are attracted."""
    arena = _arena([(S, 0), (C, 0), (C, 0), (S, 0)], [(0, 3), (1, 3), (2, 3), (2, 2)])

    region, choices = attractor(arena, [3], S, frozenset(range(4)))

    assert region == frozenset({0, 1, 3})
    assert choices == {0: 3}


@pytest.mark.unit
def test_attractor_skips_opponent_dead_ends() -> None:
    """An opponent position with no moves inside the subgame is not pulled in."""
    arena = _arena([(C, 0), (S, 0)], [(0, 1)])

    region, _ = attractor(arena, [1], S, frozenset({0}))

    assert region == frozenset()


# ============================================================================
# Small games
# ============================================================================


@pytest.mark.unit
def test_even_two_cycle_is_won_by_sarah() -> None:
    """A cycle seeing only priority 0 is won by Sarah everywhere."""
    strategy = ZielonkaSolver().solve(_arena([(S, 0), (C, 0)], [(0, 1), (1, 0)]))

    assert strategy.winners == (S, S)
    assert strategy.choice(0) == 1
    assert strategy.solver == "zielonka"


@pytest.mark.unit
def test_player_who_cannot_move_loses() -> None:
    """Dead ends are lost by their owner."""
    colin_stuck = _arena([(S, 1), (C, 1)], [(0, 1)])
    sarah_stuck = _arena([(S, 0), (C, 0)], [(1, 0)])

    assert ZielonkaSolver().solve(colin_stuck).winners == (S, S)
    assert ZielonkaSolver().solve(sarah_stuck).winners == (C, C)


@pytest.mark.unit
def test_sarah_picks_the_even_loop() -> None:
    """Sarah leaves an odd self-loop for an even one."""
    arena = _arena([(S, 1), (C, 2)], [(0, 0), (0, 1), (1, 1)])

    strategy = ZielonkaSolver().solve(arena)

    assert strategy.winners == (S, S)
    assert strategy.choice(0) == 1


@pytest.mark.unit
def test_colin_picks_the_odd_loop() -> None:
    """Colin steers into the loop whose top priority is odd."""
    arena = _arena([(C, 0), (S, 1), (S, 2)], [(0, 1), (0, 2), (1, 1), (2, 2)])

    strategy = ZielonkaSolver().solve(arena)

    assert strategy.winners == (C, C, S)
    assert strategy.choice(0) == 1
    assert certify(arena, strategy).valid


@pytest.mark.unit
def test_higher_priority_dominates() -> None:
    """A forced cycle through priorities 3 and 4 is won by Sarah."""
    arena = _arena([(C, 3), (C, 4)], [(0, 1), (1, 0)])

    assert ZielonkaSolver().solve(arena).winners == (S, S)


@pytest.mark.unit
def test_solve_is_counted_and_logged(caplog: pytest.LogCaptureFixture) -> None:
    """Each solve increments the solve counter and logs a ``games.solve`` event."""
    sample = "matroid_toolkit_parity_solves_total"
    labels = {"solver": "zielonka", "winner": "Sarah"}
    before = telemetry.REGISTRY.get_sample_value(sample, labels) or 0.0

    with caplog.at_level(logging.DEBUG, logger="parity_solver_impl"):
        ZielonkaSolver().solve(_arena([(S, 0)], [(0, 0)]))

    assert telemetry.REGISTRY.get_sample_value(sample, labels) == before + 1
    assert any(r.getMessage() == "games.solve" for r in caplog.records)


# ============================================================================
# Agreement with the oracle
# ============================================================================


@pytest.mark.unit
@settings(max_examples=150, deadline=None)
@given(arena=arenas())
def test_zielonka_agrees_with_oracle(arena: ParityArena) -> None:
    """Both solvers find the same winners and both strategies certify."""
    fast = ZielonkaSolver().solve(arena)
    slow = BruteForceSolver().solve(arena)

    assert fast.winners == slow.winners
    assert certify(arena, fast).valid, certify(arena, fast).failures
    assert certify(arena, slow).valid, certify(arena, slow).failures
