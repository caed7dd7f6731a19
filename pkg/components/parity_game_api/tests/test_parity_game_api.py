"""Unit tests for the parity game API types and solver interface."""

from __future__ import annotations

import pytest

from matroid_common import InputError, ResourceCapError, ToolkitLimits
from parity_game_api import ParityArena, ParityGameSolver, Player, Position, Strategy


def _two_cycle() -> ParityArena:
    return ParityArena.build(
        [Position(Player.SARAH, 0, "a", "a"), Position(Player.COLIN, 1, "b", "b")],
        [(0, 1), (1, 0), (1, 0)],
    )


# ============================================================================
# Player
# ============================================================================


@pytest.mark.unit
def test_players_are_opponents() -> None:
    """Each player's opponent is the other one."""
    assert Player.SARAH.opponent is Player.COLIN
    assert Player.COLIN.opponent is Player.SARAH


@pytest.mark.unit
@pytest.mark.parametrize(
    ("priority", "player"), [(0, Player.SARAH), (3, Player.COLIN), (4, Player.SARAH)]
)
def test_even_priorities_favour_sarah(priority: int, player: Player) -> None:
    """Sarah is the Even player."""
    assert Player.for_priority(priority) is player


@pytest.mark.unit
def test_player_values_render_in_reports() -> None:
    """String values are the display names."""
    assert f"winner: {Player.SARAH}" == "winner: Sarah"


# ============================================================================
# Arena
# ============================================================================


@pytest.mark.unit
def test_duplicate_moves_are_merged() -> None:
    """Successor lists are sorted sets."""
    arena = _two_cycle()

    assert arena.successors(1) == (0,)
    assert arena.predecessors == ((1,), (0,))
    assert arena.max_priority == 1
    assert len(arena) == 2


@pytest.mark.unit
def test_positions_are_found_by_payload() -> None:
    """Payloads identify positions."""
    arena = _two_cycle()

    assert arena.index_of("b") == 1
    with pytest.raises(InputError, match="No position"):
        arena.index_of("z")


@pytest.mark.unit
def test_dead_ends_are_listed() -> None:
    """Positions without successors are dead ends."""
    arena = ParityArena.build(
        [Position(Player.SARAH, 0, 0), Position(Player.COLIN, 0, 1)], [(0, 1)]
    )

    assert arena.dead_ends() == frozenset({1})


@pytest.mark.unit
def test_arena_validation() -> None:
    """Bad indices, negative priorities and shared payloads are input errors."""
    with pytest.raises(InputError, match="leaves the arena"):
        ParityArena.build([Position(Player.SARAH, 0, "a")], [(0, 3)])
    with pytest.raises(InputError, match="non-negative"):
        ParityArena.build([Position(Player.SARAH, -1, "a")], [])
    with pytest.raises(InputError, match="share a payload"):
        ParityArena.build([Position(Player.SARAH, 0, "a"), Position(Player.COLIN, 0, "a")], [])
    with pytest.raises(InputError, match="Initial position"):
        ParityArena.build([Position(Player.SARAH, 0, "a")], [], initial=2)
    with pytest.raises(InputError, match="at least one position"):
        ParityArena.build([], [])


@pytest.mark.unit
def test_arena_cap_is_enforced() -> None:
    """Arenas above ``arena_cap`` positions are refused."""
    positions = [Position(Player.SARAH, 0, i) for i in range(3)]
    with pytest.raises(ResourceCapError) as excinfo:
        ParityArena.build(positions, [], limits=ToolkitLimits(arena_cap=2))

    assert excinfo.value.requested == 3


# ============================================================================
# Strategy and solver interface
# ============================================================================


@pytest.mark.unit
def test_strategy_regions_and_choices() -> None:
    """Regions partition the positions and choices are looked up by index."""
    strategy = Strategy((Player.SARAH, Player.COLIN, Player.SARAH), {0: 2}, initial=0)

    assert strategy.initial_winner is Player.SARAH
    assert strategy.region(Player.SARAH) == frozenset({0, 2})
    assert strategy.region(Player.COLIN) == frozenset({1})
    assert strategy.choice(0) == 2
    assert strategy.choice(1) is None


@pytest.mark.unit
def test_parity_game_solver_cannot_be_instantiated() -> None:
    """ParityGameSolver is abstract."""
    with pytest.raises(TypeError):
        ParityGameSolver()  # type: ignore[abstract]


@pytest.mark.unit
def test_subclass_without_solve_cannot_be_instantiated() -> None:
    """A subclass must implement ``solve``."""

    class IncompleteSolver(ParityGameSolver):
        pass

    with pytest.raises(TypeError):
        IncompleteSolver()  # type: ignore[abstract]


@pytest.mark.unit
def test_properly_implemented_solver_can_be_used() -> None:
    """A fake solver declaring Sarah the winner everywhere satisfies the interface."""

    class SarahAlwaysWins(ParityGameSolver):
        name = "fake"

        def solve(self, arena: ParityArena) -> Strategy:
            winners = tuple(Player.SARAH for _ in arena.positions)
            return Strategy(winners, {}, arena.initial, self.name)

    strategy = SarahAlwaysWins().solve(_two_cycle())

    assert strategy.initial_winner is Player.SARAH
    assert strategy.solver == "fake"
