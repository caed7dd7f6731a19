"""Circuit games on presented trees of matroids."""

from __future__ import annotations

from circuit_games.arenas import (
    Exit,
    build_arena,
    build_arena_overlap1,
    build_arena_representable,
    exits,
    sarah_winners_agree,
)
from circuit_games.models import (
    ArenaAgreement,
    CircuitVerdict,
    ColinTurn,
    DualityVerdict,
    GameSetup,
    InducedMatroid,
    Materialization,
    SarahTurn,
    Site,
    SolvedGame,
)
from circuit_games.queries import (
    default_depth,
    duality_check,
    induced_matroid,
    play,
    psi_circuit_exists,
    solve,
)
from circuit_games.witness import (
    AutomatonEdge,
    AutomatonState,
    StrategyAutomaton,
    extract_automaton,
    materialize,
    materialize_precircuit,
    materialize_vector,
)

__all__ = [
    "ArenaAgreement",
    "AutomatonEdge",
    "AutomatonState",
    "CircuitVerdict",
    "ColinTurn",
    "DualityVerdict",
    "Exit",
    "GameSetup",
    "InducedMatroid",
    "Materialization",
    "SarahTurn",
    "Site",
    "SolvedGame",
    "StrategyAutomaton",
    "build_arena",
    "build_arena_overlap1",
    "build_arena_representable",
    "default_depth",
    "duality_check",
    "exits",
    "extract_automaton",
    "induced_matroid",
    "materialize",
    "materialize_precircuit",
    "materialize_vector",
    "play",
    "psi_circuit_exists",
    "sarah_winners_agree",
    "solve",
]
