"""Read witnesses off winning strategies.

A positional winning strategy for the circuit role is a finite automaton:
its states are the Sarah positions reachable under the strategy, each with
the circuit (or vector) chosen there. Unfolding the automaton along the
unfolded tree down to a depth gives a truncated pre-circuit or Ψ-vector,
which is checked before it is returned.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from typing import TYPE_CHECKING

from gf_linalg import Vector, in_span
from matroid_common import InputError, InvariantViolationError, format_set
from matroid_trees import PreCircuit, PsiVector, psi_vector_failures, validate_precircuit

from circuit_games.arenas import Exit
from circuit_games.models import Materialization, Site

if TYPE_CHECKING:
    from matroid_common.config import ToolkitLimits
    from matroid_trees import Unfolding

    from circuit_games.models import SolvedGame

logger = logging.getLogger(__name__)


# ============================================================================
# Strategy automata
# ============================================================================


@dataclass(frozen=True)
class AutomatonState:
    """A Sarah position reachable under the winning strategy.

    Attributes:
        position: Index of the Sarah position in the arena.
        site: Where the turn takes place.
        circuit: The circuit (or support of the vector) chosen there.
        challenge: The challenge answered, in the representable game.
        vector: The vector chosen, in the representable game.
    """

    position: int
    site: Site
    circuit: frozenset[str]
    challenge: Vector | None = None
    vector: Vector | None = None


@dataclass(frozen=True)
class AutomatonEdge:
    """Colin's reply leading from one state to another."""

    source: int
    target: int


@dataclass(frozen=True)
class StrategyAutomaton:
    """The finite witness of an infinite circuit.

    Attributes:
        states: Reachable states in breadth-first order; state 0 is initial.
        edges: Every Colin reply between states.
    """

    states: tuple[AutomatonState, ...]
    edges: tuple[AutomatonEdge, ...]

    def render(self) -> str:
        """The automaton as a ``strategy`` section of the presentation format."""
        lines = ["strategy"]
        for number, state in enumerate(self.states):
            line = f"  q{number} at {state.site.render()} plays {format_set(state.circuit)}"
            if state.vector is not None:
                line += f" as {state.vector} against {state.challenge}"
            lines.append(line)
        lines.extend(f"  q{edge.source} -> q{edge.target}" for edge in self.edges)
        return "\n".join(lines)


def _chosen(game: SolvedGame, sarah: int) -> int:
    colin = game.strategy.choice(sarah)
    if colin is None:
        msg = f"The winning strategy has no choice at position {sarah}"
        raise InvariantViolationError(msg, detail={"position": sarah})
    return colin


def extract_automaton(game: SolvedGame) -> StrategyAutomaton:
    """Collect Sarah's reachable positions and the choices made there.

    Raises:
        InputError: If Sarah does not win the initial position.
        InvariantViolationError: If a reachable Sarah position has no choice.
    """
    if not game.sarah_wins:
        msg = "Sarah does not win the initial position; there is no strategy to extract"
        raise InputError(msg)
    arena = game.arena
    number: dict[int, int] = {arena.initial: 0}
    states: list[AutomatonState] = []
    edges: list[AutomatonEdge] = []
    queue = deque([arena.initial])
    while queue:
        sarah = queue.popleft()
        colin = _chosen(game, sarah)
        asked, answer = game.sarah_turn(sarah), game.colin_turn(colin)
        states.append(
            AutomatonState(sarah, asked.site, answer.circuit, asked.challenge, answer.vector)
        )
        for nxt in arena.successors(colin):
            if nxt not in number:
                number[nxt] = len(number)
                queue.append(nxt)
            edges.append(AutomatonEdge(number[sarah], number[nxt]))
    logger.debug("games.automaton", extra={"states": len(states), "edges": len(edges)})
    return StrategyAutomaton(tuple(states), tuple(edges))


# ============================================================================
# Materialization
# ============================================================================


def _entered(unfolding: Unfolding, node: str, neighbour: str) -> Exit:
    """How the play crosses from ``node`` into ``neighbour`` of the unfolding."""
    origin = unfolding.origins[neighbour]
    if origin.via is None:
        shared = unfolding.tree.interface(node, neighbour)
        return Exit(Site(neighbour, shared), shared, {x: x for x in shared})
    t = origin.via
    return Exit(Site(t.target, t.target_labels, t.key), t.source_labels, t.to_target())


def _answer(game: SolvedGame, colin: int, site: Site) -> int:
    for nxt in game.arena.successors(colin):
        if game.sarah_turn(nxt).site == site:
            return nxt
    msg = f"Colin has no move to {site.render()} from position {colin}"
    raise InvariantViolationError(msg, detail={"position": colin})


def _start(game: SolvedGame, depth: int, limits: ToolkitLimits | None) -> tuple[Unfolding, str]:
    if not game.sarah_wins:
        msg = "Only a game won by Sarah has a witness to materialize"
        raise InputError(msg)
    presentation = game.setup.presentation
    start = presentation.element_node(game.setup.element)
    if depth < presentation.prefix.depths[start]:
        msg = f"Depth {depth} does not reach the node holding {game.setup.element}"
        raise InputError(msg)
    return presentation.truncate(depth, limits=limits), start


def materialize_precircuit(
    game: SolvedGame, depth: int, *, limits: ToolkitLimits | None = None
) -> Materialization:
    """Unfold Sarah's strategy in the overlap-1 game into a truncated pre-circuit.

    Starting at the node holding ``e``, every node reached carries Sarah's
    chosen circuit; the walk follows each interface the circuit uses.

    Raises:
        InputError: If Sarah loses, or ``depth`` cuts off the node holding ``e``.
        InvariantViolationError: If the result is not a pre-circuit.
    """
    unfolding, start = _start(game, depth, limits)
    tree = unfolding.tree
    circuits: dict[str, frozenset[str]] = {}
    queue: deque[tuple[str, str | None, int]] = deque([(start, None, game.arena.initial)])
    while queue:
        node, came_from, sarah = queue.popleft()
        colin = _chosen(game, sarah)
        labels = unfolding.origins[node].labels
        circuits[node] = frozenset(labels[x] for x in game.colin_turn(colin).circuit)
        for neighbour in tree.neighbours(node):
            if neighbour == came_from:
                continue
            if tree.interface_label(node, neighbour) in circuits[node]:
                way = _entered(unfolding, node, neighbour)
                queue.append((neighbour, node, _answer(game, colin, way.site)))

    precircuit = PreCircuit(circuits)
    verdict = validate_precircuit(tree, precircuit)
    if not verdict.valid:
        msg = f"The strategy unfolds to an invalid pre-circuit at depth {depth}"
        raise InvariantViolationError(
            msg, detail={"failures": [f.detail for f in verdict.failures]}
        )
    logger.debug(
        "games.materialize",
        extra={"kind": "precircuit", "depth": depth, "nodes": len(circuits)},
    )
    return Materialization(depth, tree, precircuit.underlying(tree), precircuit=precircuit)


def materialize_vector(
    game: SolvedGame, depth: int, *, limits: ToolkitLimits | None = None
) -> Materialization:
    """Unfold Sarah's strategy in the representable game into a truncated Ψ-vector.

    Every node carries weights on Colin positions, starting with weight 1 on
    Sarah's first choice, and its vector is the weighted sum of the vectors
    chosen there. To cross an interface, the part of each chosen vector on it
    is written as a combination of Sarah's answers to the challenges Colin
    may raise there; the coefficients weight the next node.

    Raises:
        InputError: If Sarah loses, the setup has no representation, or
            ``depth`` cuts off the node holding ``e``.
        InvariantViolationError: If an interface part is not spanned by the
            answers, or the result is not a Ψ-vector.
    """
    rep = game.setup.representation
    if rep is None:
        msg = "Vector witnesses need a representation"
        raise InputError(msg)
    unfolding, start = _start(game, depth, limits)
    tree = unfolding.tree
    weights: dict[str, dict[int, int]] = {start: {_chosen(game, game.arena.initial): 1}}
    vectors: dict[str, Vector] = {}
    queue: deque[tuple[str, str | None]] = deque([(start, None)])
    while queue:
        node, came_from = queue.popleft()
        origin = unfolding.origins[node]
        total = Vector.zero(rep.space(origin.key).ambient, rep.p)
        for colin, weight in weights[node].items():
            total += _vector(game, colin).scale(weight)
        vectors[node] = total.relabel(origin.labels)
        for neighbour in tree.neighbours(node):
            if neighbour != came_from:
                way = _entered(unfolding, node, neighbour)
                weights[neighbour] = _carry(game, weights[node], way, rep.p)
                queue.append((neighbour, node))

    psi = PsiVector(vectors, depth)
    failures = psi_vector_failures(tree, rep.restricted_to(tree, unfolding.relabelling()), psi)
    if failures:
        msg = f"The strategy unfolds to an invalid Ψ-vector at depth {depth}"
        raise InvariantViolationError(msg, detail={"failures": list(failures)})
    logger.debug(
        "games.materialize",
        extra={"kind": "vector", "depth": depth, "nodes": len(vectors)},
    )
    return Materialization(depth, tree, psi.support(tree), vector=psi)


def _vector(game: SolvedGame, colin: int) -> Vector:
    vector = game.colin_turn(colin).vector
    if vector is None:
        msg = f"Position {colin} is not a vector move"
        raise InvariantViolationError(msg, detail={"position": colin})
    return vector


def _carry(game: SolvedGame, weights: dict[int, int], way: Exit, p: int) -> dict[int, int]:
    """Weights on the Colin positions reached after crossing ``way``."""
    carried: dict[int, int] = {}
    for colin, weight in weights.items():
        shown = _vector(game, colin).restrict(way.labels)
        if shown.is_zero:
            continue
        target = shown.relabel(way.rename)
        answers = sorted(
            {
                _chosen(game, sarah)
                for sarah in game.arena.successors(colin)
                if game.sarah_turn(sarah).site == way.site
            }
        )
        rows = [_vector(game, a).restrict(way.site.incoming) for a in answers]
        span = in_span(target, rows)
        if span.coefficients is None:
            msg = f"{target} is not spanned by Sarah's answers at {way.site.render()}"
            raise InvariantViolationError(msg, detail={"position": colin})
        for answer, coefficient in zip(answers, span.coefficients, strict=True):
            carried[answer] = (carried.get(answer, 0) + weight * coefficient) % p
    return {k: v for k, v in carried.items() if v}


def materialize(
    game: SolvedGame, depth: int, *, limits: ToolkitLimits | None = None
) -> Materialization:
    """A vector witness when the game is representable, else a pre-circuit."""
    if game.setup.representable:
        return materialize_vector(game, depth, limits=limits)
    return materialize_precircuit(game, depth, limits=limits)
