"""Questions answered by playing circuit games.

Every query accepts a ``solver`` so any :class:`ParityGameSolver` can be
injected; Zielonka's solver is the default.
"""

from __future__ import annotations

import itertools
import logging
from concurrent.futures import ThreadPoolExecutor
from typing import TYPE_CHECKING

from matroid_common import InvariantViolationError, canonical_sets, sort_labels, telemetry
from matroid_common.config import resolve_limits
from matroid_common.exceptions import check_cap
from orthogonality_axioms import SetSystemPair, check_axioms, minimal_members, reconstruct
from parity_solver_impl import ZielonkaSolver, certify

from circuit_games.arenas import build_arena
from circuit_games.models import (
    CircuitVerdict,
    DualityVerdict,
    GameSetup,
    InducedMatroid,
    SolvedGame,
)
from circuit_games.witness import extract_automaton, materialize

if TYPE_CHECKING:
    from collections.abc import Iterable

    from matroid_common.config import ToolkitLimits
    from matroid_trees import TreePresentation, TreeRepresentation
    from parity_game_api import ParityArena, ParityGameSolver, Strategy

logger = logging.getLogger(__name__)

# Depth added below the deepest prefix node when materializing by default.
DEFAULT_EXTRA_DEPTH = 4


def solve(arena: ParityArena, *, solver: ParityGameSolver | None = None) -> Strategy:
    """Solve ``arena`` with ``solver``, Zielonka's by default."""
    return (solver or ZielonkaSolver()).solve(arena)


def play(
    setup: GameSetup,
    *,
    solver: ParityGameSolver | None = None,
    limits: ToolkitLimits | None = None,
) -> SolvedGame:
    """Build the arena of ``setup`` and solve it."""
    arena = build_arena(setup, limits=limits)
    return SolvedGame(setup, arena, solve(arena, solver=solver))


def default_depth(presentation: TreePresentation) -> int:
    """Materialization depth used when none is given."""
    return max(presentation.prefix.depths.values()) + DEFAULT_EXTRA_DEPTH


def psi_circuit_exists(  # noqa: PLR0913
    presentation: TreePresentation,
    element: str,
    pco: Iterable[str] = (),
    pde: Iterable[str] | None = None,
    *,
    representation: TreeRepresentation | None = None,
    solver: ParityGameSolver | None = None,
    depth: int | None = None,
    limits: ToolkitLimits | None = None,
) -> CircuitVerdict:
    """Decide whether some Ψ-circuit ``C`` has ``e ∈ C ⊆ {e} ∪ P_C``.

    When Sarah wins, the winning strategy is the witness. When Colin wins, the
    cocircuit game is solved as well and the circuit role's strategy there
    witnesses a Ψᶜ-cocircuit ``D`` with ``e ∈ D ⊆ {e} ∪ P_D``.

    Raises:
        InputError: If the partition or the representation is invalid.
        InvariantViolationError: If Colin wins both the circuit game and, in
            the dual game, loses the circuit role, or a witness fails its
            check.
    """
    setup = GameSetup.build(presentation, element, pco, pde, representation=representation)
    game = play(setup, solver=solver, limits=limits)
    telemetry.circuit_game_queries_total.labels(kind="circuit").inc()
    witness = game
    if not game.sarah_wins:
        witness = play(setup.dual(), solver=solver, limits=limits)
        telemetry.circuit_game_queries_total.labels(kind="cocircuit").inc()
        if not witness.sarah_wins:
            msg = f"Colin wins the circuit game at {element} but not the cocircuit game"
            raise InvariantViolationError(
                msg, detail={"element": element, "pco": sorted(setup.pco)}
            )
    bound = default_depth(presentation) if depth is None else depth
    verdict = CircuitVerdict(
        element,
        game.sarah_wins,
        extract_automaton(witness),
        materialize(witness, bound, limits=limits),
    )
    logger.debug(
        "games.psi_circuit",
        extra={
            "element": element,
            "winner": "Sarah" if verdict.sarah_wins else "Colin",
            "support": sorted(verdict.materialization.support),
        },
    )
    return verdict


def duality_check(  # noqa: PLR0913
    presentation: TreePresentation,
    element: str,
    pco: Iterable[str] = (),
    pde: Iterable[str] | None = None,
    *,
    representation: TreeRepresentation | None = None,
    solver: ParityGameSolver | None = None,
    limits: ToolkitLimits | None = None,
) -> DualityVerdict:
    """Solve a circuit game and its cocircuit game independently and compare.

    Both strategies are certified by re-play.

    Raises:
        InvariantViolationError: If a strategy fails its certificate or Colin
            wins exactly one of the two games.
    """
    setup = GameSetup.build(presentation, element, pco, pde, representation=representation)
    game = play(setup, solver=solver, limits=limits)
    dual = play(setup.dual(), solver=solver, limits=limits)
    telemetry.circuit_game_queries_total.labels(kind="duality").inc()
    for name, solved in (("circuit", game), ("cocircuit", dual)):
        report = certify(solved.arena, solved.strategy)
        if not report.valid:
            msg = f"The {name} game strategy fails its certificate"
            raise InvariantViolationError(msg, detail={"failures": list(report.failures)})
    verdict = DualityVerdict(
        element, game.sarah_wins, dual.sarah_wins, (len(game.arena), len(dual.arena))
    )
    logger.debug(
        "games.duality",
        extra={"element": element, "agree": verdict.agree, "positions": verdict.positions},
    )
    if not verdict.agree:
        msg = (
            f"Colin {'loses' if verdict.sarah_wins else 'wins'} the circuit game at {element} "
            f"but {'wins' if verdict.colin_wins_cocircuit_game else 'loses'} the cocircuit game"
        )
        raise InvariantViolationError(
            msg, detail={"element": element, "positions": verdict.positions}
        )
    return verdict


def _winning_sets(
    presentation: TreePresentation,
    representation: TreeRepresentation | None,
    solver: ParityGameSolver | None,
    limits: ToolkitLimits,
) -> tuple[frozenset[str], ...]:
    """Every ``S`` such that Sarah wins ``W(e, S)`` for some ``e ∈ S``."""
    edges = sort_labels(presentation.real_edges)
    queries = [
        (e, frozenset(chosen))
        for size in range(1, len(edges) + 1)
        for chosen in itertools.combinations(edges, size)
        for e in chosen
    ]

    def wins(query: tuple[str, frozenset[str]]) -> bool:
        e, chosen = query
        setup = GameSetup.build(
            presentation,
            e,
            chosen - {e},
            frozenset(edges) - chosen,
            representation=representation,
        )
        return play(setup, solver=solver, limits=limits).sarah_wins

    with ThreadPoolExecutor(max_workers=limits.workers) as pool:
        outcomes = list(pool.map(wins, queries))
    return canonical_sets(
        chosen for (_, chosen), won in zip(queries, outcomes, strict=True) if won
    )


def induced_matroid(
    presentation: TreePresentation,
    *,
    representation: TreeRepresentation | None = None,
    solver: ParityGameSolver | None = None,
    limits: ToolkitLimits | None = None,
) -> InducedMatroid:
    """The matroid whose circuits are the minimal underlying sets of Ψ-circuits.

    Circuits come from circuit games on the presentation and cocircuits from
    circuit games on its dual with Ψ complemented. The pair must pass every
    orthogonality axiom before it is turned into a matroid.

    Raises:
        ResourceCapError: If there are more than ``induced_cap`` real edges.
        InvariantViolationError: If the circuits and cocircuits fail an axiom.
    """
    resolved = resolve_limits(limits)
    edges = sort_labels(presentation.real_edges)
    check_cap("induced_cap", resolved.induced_cap, len(edges))
    circuits = minimal_members(_winning_sets(presentation, representation, solver, resolved))
    cocircuits = minimal_members(
        _winning_sets(
            presentation.dual().shifted(1),
            None if representation is None else representation.dual(),
            solver,
            resolved,
        )
    )
    queries = 2 * len(edges) * 2 ** max(len(edges) - 1, 0)
    telemetry.circuit_game_queries_total.labels(kind="induced").inc(queries)
    system = SetSystemPair.build(
        edges, circuits, cocircuits, name=presentation.name or "induced"
    )
    report = check_axioms(system, limits=resolved)
    if not report.passed:
        msg = f"Game circuits and cocircuits fail the axioms: {report.summary()}"
        raise InvariantViolationError(
            msg, detail={"failures": [v.describe() for v in report.failures]}
        )
    matroid = reconstruct(system, limits=resolved)
    logger.debug(
        "games.induced",
        extra={"edges": len(edges), "circuits": len(circuits), "cocircuits": len(cocircuits)},
    )
    return InducedMatroid(matroid, report, queries)
