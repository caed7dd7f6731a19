"""Abstract interface for parity game solvers."""

from __future__ import annotations

from abc import ABC, abstractmethod
from typing import TYPE_CHECKING, ClassVar

if TYPE_CHECKING:
    from parity_game_api.models import ParityArena, Strategy


class ParityGameSolver(ABC):
    """Solves finite parity arenas under the max-parity, dead-end-loses rules."""

    name: ClassVar[str] = "solver"

    @abstractmethod
    def solve(self, arena: ParityArena) -> Strategy:
        """Compute the winner of every position and positional winning choices.

        Args:
            arena: The arena to solve.

        Returns:
            A strategy whose winning regions partition the positions. Every
            position won by its owner carries a choice of successor inside
            that region.

        Example:
            >>> strategy = ZielonkaSolver().solve(arena)
            >>> strategy.initial_winner
            <Player.SARAH: 'Sarah'>
        """
