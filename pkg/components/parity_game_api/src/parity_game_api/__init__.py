"""Parity game API: arenas, strategies and the solver interface."""

from __future__ import annotations

from parity_game_api.models import ParityArena, Player, Position, Strategy
from parity_game_api.solver import ParityGameSolver

__all__ = ["ParityArena", "ParityGameSolver", "Player", "Position", "Strategy"]
