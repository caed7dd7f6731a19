"""Exhaustive positional-strategy solver used to cross-check Zielonka."""

from __future__ import annotations

import itertools
import logging
import math
import time
from typing import TYPE_CHECKING

from matroid_common import InvariantViolationError
from matroid_common.config import resolve_limits
from matroid_common.exceptions import check_cap
from parity_game_api import ParityGameSolver, Player, Strategy

from parity_solver_impl.cycles import escapes, restricted_graph
from parity_solver_impl.instrument import record_solve

if TYPE_CHECKING:
    from matroid_common.config import ToolkitLimits
    from parity_game_api import ParityArena

logger = logging.getLogger(__name__)


class BruteForceSolver(ParityGameSolver):
    """Tries every positional strategy of each player.

    Parity games are positionally determined, so a player's winning region is
    the union of what its positional strategies win, and one of them wins it
    all. The number of strategies per player is capped by ``oracle_cap``.
    """

    name = "brute-force"

    def __init__(self, *, limits: ToolkitLimits | None = None) -> None:
        """Resolve the caps once; environment overrides apply when ``limits`` is omitted."""
        self._limits = resolve_limits(limits)

    def solve(self, arena: ParityArena) -> Strategy:
        """Solve ``arena`` by enumeration.

        Raises:
            ResourceCapError: If a player has more than ``oracle_cap`` strategies.
            InvariantViolationError: If the regions found do not partition the
                arena or no single strategy wins a whole region.
        """
        start = time.perf_counter()
        regions: dict[Player, frozenset[int]] = {}
        choices: dict[int, int] = {}
        for player in (Player.SARAH, Player.COLIN):
            regions[player], chosen = self._best_strategy(arena, player)
            choices.update({v: u for v, u in chosen.items() if v in regions[player]})
        sarah, colin = regions[Player.SARAH], regions[Player.COLIN]
        if sarah & colin or len(sarah | colin) != len(arena):
            msg = "Winning regions found by enumeration do not partition the arena"
            raise InvariantViolationError(
                msg, detail={"sarah": sorted(sarah), "colin": sorted(colin)}
            )
        winners = tuple(Player.SARAH if i in sarah else Player.COLIN for i in range(len(arena)))
        strategy = Strategy(winners, choices, arena.initial, self.name)
        record_solve(strategy, len(arena), time.perf_counter() - start)
        return strategy

    def _best_strategy(
        self, arena: ParityArena, player: Player
    ) -> tuple[frozenset[int], dict[int, int]]:
        owned = [v for v in range(len(arena)) if arena.owner(v) is player and arena.successors(v)]
        count = math.prod(len(arena.successors(v)) for v in owned)
        check_cap("oracle_cap", self._limits.oracle_cap, count)
        logger.debug("games.oracle", extra={"player": player.value, "strategies": count})
        everything = frozenset(range(len(arena)))
        candidates: list[tuple[frozenset[int], dict[int, int]]] = []
        for picks in itertools.product(*(arena.successors(v) for v in owned)):
            chosen = dict(zip(owned, picks, strict=True))
            lost = escapes(arena, restricted_graph(arena, player, chosen, everything), player)
            candidates.append((everything - lost, chosen))
        region = frozenset[int]().union(*(won for won, _ in candidates))
        for won, chosen in candidates:
            if won == region:
                return region, chosen
        msg = f"No positional strategy of {player} wins its whole region"
        raise InvariantViolationError(msg, detail={"region": sorted(region)})
