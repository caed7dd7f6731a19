"""Parity arenas and positional strategies.

Priorities follow the max convention: an infinite play is won by Sarah (the
Even player) when the largest priority seen infinitely often is even. A
player who cannot move loses.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import StrEnum
from functools import cached_property
from typing import TYPE_CHECKING

from matroid_common import InputError
from matroid_common.config import ToolkitLimits, resolve_limits
from matroid_common.exceptions import check_cap

if TYPE_CHECKING:
    from collections.abc import Hashable, Iterable, Mapping


class Player(StrEnum):
    """The two players of every circuit game."""

    SARAH = "Sarah"
    COLIN = "Colin"

    @property
    def opponent(self) -> Player:
        """The other player."""
        return Player.COLIN if self is Player.SARAH else Player.SARAH

    @classmethod
    def for_priority(cls, priority: int) -> Player:
        """The player favoured by a priority: Sarah for even, Colin for odd."""
        return cls.SARAH if priority % 2 == 0 else cls.COLIN


@dataclass(frozen=True)
class Position:
    """One vertex of a parity arena.

    Attributes:
        owner: The player who moves here.
        priority: Parity priority of visiting this position.
        payload: Builder-specific identity of the position; unique per arena.
        label: Human-readable rendering used in reports.
    """

    owner: Player
    priority: int
    payload: Hashable
    label: str = ""


@dataclass(frozen=True)
class ParityArena:
    """A finite parity game graph with a distinguished initial position.

    Attributes:
        positions: All positions; indices into this tuple identify them.
        moves: Successor indices for every position, sorted.
        initial: Index of the initial position.
    """

    positions: tuple[Position, ...]
    moves: tuple[tuple[int, ...], ...] = field(repr=False)
    initial: int = 0

    @classmethod
    def build(
        cls,
        positions: Iterable[Position],
        moves: Iterable[tuple[int, int]],
        initial: int = 0,
        *,
        limits: ToolkitLimits | None = None,
    ) -> ParityArena:
        """Validate positions and moves.

        Duplicate moves are merged.

        Raises:
            InputError: If the arena is empty, a move or the initial index is
                out of range, a priority is negative, or two positions share a
                payload.
            ResourceCapError: If there are more than ``arena_cap`` positions.
        """
        listed = tuple(positions)
        if not listed:
            msg = "An arena needs at least one position"
            raise InputError(msg)
        check_cap("arena_cap", resolve_limits(limits).arena_cap, len(listed))
        if any(p.priority < 0 for p in listed):
            msg = "Priorities must be non-negative"
            raise InputError(msg)
        if len({p.payload for p in listed}) != len(listed):
            msg = "Two positions share a payload"
            raise InputError(msg)
        successors: list[set[int]] = [set() for _ in listed]
        for source, target in moves:
            if not (0 <= source < len(listed) and 0 <= target < len(listed)):
                msg = f"Move {source}->{target} leaves the arena of {len(listed)} positions"
                raise InputError(msg)
            successors[source].add(target)
        if not 0 <= initial < len(listed):
            msg = f"Initial position {initial} is not in the arena"
            raise InputError(msg)
        return cls(listed, tuple(tuple(sorted(s)) for s in successors), initial)

    def __len__(self) -> int:
        """Number of positions."""
        return len(self.positions)

    def owner(self, index: int) -> Player:
        """Who moves at ``index``."""
        return self.positions[index].owner

    def priority(self, index: int) -> int:
        """Priority of ``index``."""
        return self.positions[index].priority

    def successors(self, index: int) -> tuple[int, ...]:
        """Positions reachable in one move."""
        return self.moves[index]

    @cached_property
    def predecessors(self) -> tuple[tuple[int, ...], ...]:
        """Positions that can move to each position, sorted."""
        found: list[list[int]] = [[] for _ in self.positions]
        for source, targets in enumerate(self.moves):
            for target in targets:
                found[target].append(source)
        return tuple(tuple(p) for p in found)

    @cached_property
    def max_priority(self) -> int:
        """Largest priority in the arena."""
        return max(p.priority for p in self.positions)

    @cached_property
    def _index(self) -> dict[Hashable, int]:
        return {p.payload: i for i, p in enumerate(self.positions)}

    def index_of(self, payload: Hashable) -> int:
        """The position carrying ``payload``.

        Raises:
            InputError: If no position carries it.
        """
        try:
            return self._index[payload]
        except KeyError as exc:
            msg = f"No position with payload {payload!r}"
            raise InputError(msg) from exc

    def dead_ends(self) -> frozenset[int]:
        """Positions without moves; their owner loses there."""
        return frozenset(i for i, targets in enumerate(self.moves) if not targets)


@dataclass(frozen=True)
class Strategy:
    """Winning regions and positional choices for a solved arena.

    Attributes:
        winners: The winner of every position, indexed like the arena.
        choices: For each position won by its owner, the move to play.
        initial: Index of the arena's initial position.
        solver: Name of the solver that produced the strategy.
    """

    winners: tuple[Player, ...]
    choices: Mapping[int, int] = field(repr=False)
    initial: int = 0
    solver: str = ""

    @property
    def initial_winner(self) -> Player:
        """Who wins the initial position."""
        return self.winners[self.initial]

    def winner(self, index: int) -> Player:
        """Who wins from ``index``."""
        return self.winners[index]

    def region(self, player: Player) -> frozenset[int]:
        """All positions won by ``player``."""
        return frozenset(i for i, w in enumerate(self.winners) if w is player)

    def choice(self, index: int) -> int | None:
        """The chosen move at ``index``, if its owner wins there."""
        return self.choices.get(index)
