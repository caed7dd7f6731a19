"""Metrics and log events emitted after every solve."""

from __future__ import annotations

import logging
from typing import TYPE_CHECKING

from matroid_common import telemetry

if TYPE_CHECKING:
    from parity_game_api import Strategy

logger = logging.getLogger(__name__)


def record_solve(strategy: Strategy, positions: int, seconds: float) -> None:
    """Count the solve, time it and log the winner of the initial position."""
    winner = strategy.initial_winner.value
    telemetry.parity_solves_total.labels(solver=strategy.solver, winner=winner).inc()
    telemetry.parity_solve_seconds.labels(solver=strategy.solver).observe(seconds)
    logger.debug(
        "games.solve",
        extra={
            "solver": strategy.solver,
            "positions": positions,
            "winner": winner,
            "seconds": seconds,
        },
    )
