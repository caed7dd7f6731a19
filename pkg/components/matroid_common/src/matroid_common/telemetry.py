"""Prometheus metrics for solver and checker activity."""

from __future__ import annotations

from typing import TYPE_CHECKING

from prometheus_client import CollectorRegistry, Counter, Histogram, write_to_textfile

if TYPE_CHECKING:
    from pathlib import Path

# ============================================================================
# Prometheus Metrics
# ============================================================================

_NAMESPACE = "matroid_toolkit"

REGISTRY = CollectorRegistry()

parity_solves_total = Counter(
    f"{_NAMESPACE}_parity_solves_total",
    "Parity games solved, by solver and winner of the initial position",
    ["solver", "winner"],
    registry=REGISTRY,
)

parity_solve_seconds = Histogram(
    f"{_NAMESPACE}_parity_solve_seconds",
    "Wall time spent solving one parity arena",
    ["solver"],
    buckets=(0.0005, 0.001, 0.005, 0.01, 0.05, 0.1, 0.5, 1.0, 5.0, 30.0),
    registry=REGISTRY,
)

arena_positions = Histogram(
    f"{_NAMESPACE}_arena_positions",
    "Number of positions in built circuit-game arenas",
    buckets=(1, 4, 16, 64, 256, 1024, 4096, 16384, 65536),
    registry=REGISTRY,
)

circuit_game_queries_total = Counter(
    f"{_NAMESPACE}_circuit_game_queries_total",
    "Circuit and cocircuit game queries answered",
    ["kind"],
    registry=REGISTRY,
)

axiom_checks_total = Counter(
    f"{_NAMESPACE}_axiom_checks_total",
    "Orthogonality axiom checks, by overall verdict",
    ["verdict"],
    registry=REGISTRY,
)


def write_metrics(path: Path) -> None:
    """Write the toolkit registry in the Prometheus text format."""
    write_to_textfile(str(path), REGISTRY)
