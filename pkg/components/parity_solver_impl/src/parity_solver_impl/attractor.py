"""Attractor computation shared by the solvers."""

from __future__ import annotations

from collections import deque
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from collections.abc import Iterable

    from parity_game_api import ParityArena, Player


def attractor(
    arena: ParityArena, target: Iterable[int], player: Player, within: frozenset[int]
) -> tuple[frozenset[int], dict[int, int]]:
    """Positions of ``within`` from which ``player`` can force a visit to ``target``.

    ``player``'s positions join as soon as one successor is attracted; the
    opponent's positions join once every successor inside ``within`` is.
    Opponent positions without successors in ``within`` never join.

    Returns:
        The attractor and, for every ``player`` position that joined, the
        successor that pulls it in.
    """
    attracted = {v for v in target if v in within}
    choices: dict[int, int] = {}
    remaining = {
        v: sum(1 for u in arena.successors(v) if u in within)
        for v in within
        if arena.owner(v) is not player
    }
    queue = deque(sorted(attracted))
    while queue:
        u = queue.popleft()
        for v in arena.predecessors[u]:
            if v not in within or v in attracted:
                continue
            if arena.owner(v) is player:
                attracted.add(v)
                choices[v] = u
                queue.append(v)
                continue
            remaining[v] -= 1
            if remaining[v] == 0:
                attracted.add(v)
                queue.append(v)
    return frozenset(attracted), choices
