"""Zielonka's recursive algorithm for max-parity games with dead ends."""

from __future__ import annotations

import time
from typing import TYPE_CHECKING

from matroid_common import InvariantViolationError
from parity_game_api import ParityGameSolver, Player, Strategy

from parity_solver_impl.attractor import attractor
from parity_solver_impl.instrument import record_solve

if TYPE_CHECKING:
    from parity_game_api import ParityArena

_Solution = tuple[dict[Player, frozenset[int]], dict[int, int]]


class ZielonkaSolver(ParityGameSolver):
    """Recursive attractor decomposition.

    Dead ends are handled first in every subgame: their owner loses, so the
    opponent's attractor to them is removed before the priority recursion.
    """

    name = "zielonka"

    def solve(self, arena: ParityArena) -> Strategy:
        """Solve ``arena`` and record timing and winner metrics."""
        start = time.perf_counter()
        regions, choices = self._solve(arena, frozenset(range(len(arena))))
        sarah, colin = regions[Player.SARAH], regions[Player.COLIN]
        if sarah & colin or len(sarah | colin) != len(arena):
            msg = "Winning regions do not partition the arena"
            raise InvariantViolationError(msg, detail={"positions": len(arena)})
        winners = tuple(Player.SARAH if i in sarah else Player.COLIN for i in range(len(arena)))
        strategy = Strategy(winners, choices, arena.initial, self.name)
        record_solve(strategy, len(arena), time.perf_counter() - start)
        return strategy

    def _solve(self, arena: ParityArena, sub: frozenset[int]) -> _Solution:
        empty: dict[Player, frozenset[int]] = {Player.SARAH: frozenset(), Player.COLIN: frozenset()}
        if not sub:
            return empty, {}

        for player in (Player.SARAH, Player.COLIN):
            stuck = [
                v
                for v in sorted(sub)
                if arena.owner(v) is player and not any(u in sub for u in arena.successors(v))
            ]
            if stuck:
                lost, pulls = attractor(arena, stuck, player.opponent, sub)
                regions, choices = self._solve(arena, sub - lost)
                regions[player.opponent] |= lost
                return regions, {**choices, **pulls}

        top = max(arena.priority(v) for v in sub)
        favoured = Player.for_priority(top)
        other = favoured.opponent
        peak = [v for v in sorted(sub) if arena.priority(v) == top]
        forced, pulls = attractor(arena, peak, favoured, sub)
        regions, choices = self._solve(arena, sub - forced)
        if not regions[other]:
            stay = {
                v: next(u for u in arena.successors(v) if u in sub)
                for v in peak
                if arena.owner(v) is favoured
            }
            return {favoured: sub, other: frozenset()}, {**choices, **pulls, **stay}

        escaped, escape_pulls = attractor(arena, regions[other], other, sub)
        kept = {v: choices[v] for v in regions[other] if v in choices}
        rest, rest_choices = self._solve(arena, sub - escaped)
        rest[other] |= escaped
        return rest, {**rest_choices, **escape_pulls, **kept}
