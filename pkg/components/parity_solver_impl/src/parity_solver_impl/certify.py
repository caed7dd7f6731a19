"""Independent check that a strategy really wins the regions it claims."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import TYPE_CHECKING

from parity_game_api import Player

from parity_solver_impl.cycles import restricted_graph, winning_cycles

if TYPE_CHECKING:
    from parity_game_api import ParityArena, Strategy

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CertificateReport:
    """Outcome of :func:`certify`.

    Attributes:
        solver: Name of the solver whose strategy was checked.
        failures: One line per violated condition, empty when the strategy holds.
    """

    solver: str
    failures: tuple[str, ...] = ()

    @property
    def valid(self) -> bool:
        """True when no condition failed."""
        return not self.failures


def certify(arena: ParityArena, strategy: Strategy) -> CertificateReport:
    """Check ``strategy`` against ``arena``.

    For each player's claimed region: every owned position has a chosen move
    that stays in the region, every opponent position has all its moves in
    the region, and the opponent cannot close a cycle of its own parity there.
    """
    if len(strategy.winners) != len(arena):
        return CertificateReport(
            strategy.solver,
            (f"{len(strategy.winners)} winners for an arena of {len(arena)} positions",),
        )
    failures: list[str] = []
    for player in (Player.SARAH, Player.COLIN):
        region = strategy.region(player)
        for v in sorted(region):
            failures.extend(_local_failures(arena, strategy, player, region, v))
        graph = restricted_graph(arena, player, strategy.choices, region)
        bad = winning_cycles(arena, graph, player.opponent)
        if bad:
            msg = f"{player.opponent} closes a winning cycle through {sorted(bad)}"
            failures.append(f"{msg} in {player}'s region")
    report = CertificateReport(strategy.solver, tuple(failures))
    logger.debug(
        "games.certify",
        extra={"solver": strategy.solver, "valid": report.valid, "failures": len(failures)},
    )
    return report


def _local_failures(
    arena: ParityArena, strategy: Strategy, player: Player, region: frozenset[int], v: int
) -> list[str]:
    moves = arena.successors(v)
    if arena.owner(v) is not player:
        leaks = [u for u in moves if u not in region]
        return [f"{arena.owner(v)} escapes {player}'s region at {v} via {leaks}"] if leaks else []
    chosen = strategy.choice(v)
    if chosen is None:
        return [f"{player} has no move chosen at {v}"]
    if chosen not in moves:
        return [f"Choice {v}->{chosen} is not a move"]
    if chosen not in region:
        return [f"Choice {v}->{chosen} leaves {player}'s region"]
    return []
