"""Compile circuit games into finite parity arenas.

Sarah positions are identified by a site: the node or core state whose
matroid is played, the interface the play came in through, and the
transition crossed to get there. Finitely many sites exist, so the game on
the infinite unfolding becomes a finite arena. A Sarah position entered
through a transition carries that transition's priority; every other
position has priority 0.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from typing import TYPE_CHECKING

from gf_linalg import Subspace, Vector
from matroid_common import InputError, format_set, telemetry
from matroid_common.config import resolve_limits
from matroid_common.exceptions import check_cap
from parity_game_api import ParityArena, Player, Position

from circuit_games.models import ArenaAgreement, ColinTurn, SarahTurn, Site

if TYPE_CHECKING:
    from collections.abc import Mapping

    from matroid_common.config import ToolkitLimits
    from matroid_trees import TreePresentation

    from circuit_games.models import GameSetup, SolvedGame

logger = logging.getLogger(__name__)

Turn = SarahTurn | ColinTurn


@dataclass(frozen=True)
class Exit:
    """A way for Colin to leave a site.

    Attributes:
        site: The site the play moves to.
        labels: Interface labels, named as at the current site.
        rename: Current label to the label used at ``site``.
    """

    site: Site
    labels: frozenset[str]
    rename: Mapping[str, str]


def exits(presentation: TreePresentation, site: Site) -> tuple[Exit, ...]:
    """Every interface at ``site`` other than the one the play came in through.

    Prefix sites reach their prefix neighbours in both directions; every
    site reaches the states glued below it by transitions.
    """
    found: list[Exit] = []
    if site.via is None:
        prefix = presentation.prefix
        for neighbour in prefix.neighbours(site.key):
            shared = prefix.interface(site.key, neighbour)
            if shared != site.incoming:
                found.append(Exit(Site(neighbour, shared), shared, {x: x for x in shared}))
    found.extend(
        Exit(Site(t.target, t.target_labels, t.key), t.source_labels, t.to_target())
        for t in presentation.outgoing(site.key)
    )
    return tuple(found)


def start_site(setup: GameSetup) -> Site:
    """The prefix node holding ``e``, entered through ``{e}``."""
    node = setup.presentation.element_node(setup.element)
    return Site(node, frozenset({setup.element}))


class _ArenaBuilder:
    """Collects positions breadth-first, deduplicated by payload."""

    def __init__(self, presentation: TreePresentation, limits: ToolkitLimits) -> None:
        self._presentation = presentation
        self._limits = limits
        self._positions: list[Position] = []
        self._index: dict[Turn, int] = {}
        self._moves: list[tuple[int, int]] = []
        self._pending: deque[int] = deque()

    def add(self, turn: Turn) -> int:
        if turn in self._index:
            return self._index[turn]
        check_cap("arena_cap", self._limits.arena_cap, len(self._positions) + 1)
        if isinstance(turn, SarahTurn):
            via = turn.site.via
            priority = 0 if via is None else self._presentation.transition(via).priority
            position = Position(Player.SARAH, priority, turn, f"S {turn.site.render()}")
        else:
            label = f"C {turn.site.render()} plays {format_set(turn.circuit)}"
            position = Position(Player.COLIN, 0, turn, label)
        self._index[turn] = len(self._positions)
        self._positions.append(position)
        self._pending.append(self._index[turn])
        return self._index[turn]

    def move(self, source: int, turn: Turn) -> None:
        self._moves.append((source, self.add(turn)))

    def pending(self) -> tuple[int, Turn] | None:
        if not self._pending:
            return None
        index = self._pending.popleft()
        payload = self._positions[index].payload
        if not isinstance(payload, SarahTurn | ColinTurn):
            msg = f"Unexpected payload {payload!r}"
            raise InputError(msg)
        return index, payload

    def arena(self, kind: str) -> ParityArena:
        arena = ParityArena.build(self._positions, self._moves, 0, limits=self._limits)
        telemetry.arena_positions.observe(len(arena))
        sarah = sum(1 for p in arena.positions if p.owner is Player.SARAH)
        logger.debug(
            "games.arena",
            extra={
                "kind": kind,
                "positions": len(arena),
                "sarah": sarah,
                "colin": len(arena) - sarah,
                "moves": len(self._moves),
            },
        )
        return arena


# ============================================================================
# Overlap-1 circuit game
# ============================================================================


def build_arena_overlap1(
    setup: GameSetup, *, limits: ToolkitLimits | None = None
) -> ParityArena:
    """The circuit game of an overlap-1 presentation.

    At a site Sarah plays a circuit through the incoming label that avoids
    ``P_D``; Colin then crosses any interface whose label the circuit uses.
    Position 0 is Sarah's turn at the node holding ``e``.

    Raises:
        InputError: If some interface has more than one label.
        ResourceCapError: If the arena exceeds ``arena_cap`` positions.
    """
    presentation = setup.presentation
    if not presentation.is_overlap_one:
        msg = "The circuit game needs a presentation of overlap 1"
        raise InputError(msg)
    builder = _ArenaBuilder(presentation, resolve_limits(limits))
    builder.add(SarahTurn(start_site(setup)))
    while (item := builder.pending()) is not None:
        index, turn = item
        site = turn.site
        if isinstance(turn, SarahTurn):
            for circuit in presentation.matroid(site.key).circuits:
                if site.incoming <= circuit and not circuit & setup.pde:
                    builder.move(index, ColinTurn(site, circuit))
            continue
        for way in exits(presentation, site):
            if way.labels & turn.circuit:
                builder.move(index, SarahTurn(way.site))
    return builder.arena("overlap1")


# ============================================================================
# Representable circuit game
# ============================================================================


def initial_challenge(setup: GameSetup, p: int) -> Vector:
    """``x(e) = 1`` on the single label ``e``."""
    return Vector.from_mapping([setup.element], p, {setup.element: 1})


def build_arena_representable(
    setup: GameSetup, *, limits: ToolkitLimits | None = None
) -> ParityArena:
    """The representable circuit game.

    Sarah answers a challenge ``x`` on the incoming interface with a vector
    ``v`` of the site's subspace that is zero on ``P_D`` and satisfies
    ``<v, x> != 0`` there. Colin then picks an interface and a challenge
    ``x'`` on it with ``<v, x'> != 0``.

    Raises:
        InputError: If the setup carries no representation.
        ResourceCapError: If a subspace has more than ``vector_cap`` vectors
            or the arena exceeds ``arena_cap`` positions.
    """
    rep = setup.representation
    if rep is None:
        msg = "The representable circuit game needs a representation"
        raise InputError(msg)
    resolved = resolve_limits(limits)
    presentation = setup.presentation
    space_of, p = rep.space, rep.p
    answers: dict[str, list[Vector]] = {}
    challenges: dict[frozenset[str], list[Vector]] = {}

    def vectors_at(key: str) -> list[Vector]:
        if key not in answers:
            answers[key] = [
                v
                for v in space_of(key).vectors(resolved)
                if not v.is_zero and not any(v[x] for x in setup.pde & set(v.ambient))
            ]
        return answers[key]

    def challenges_on(labels: frozenset[str]) -> list[Vector]:
        if labels not in challenges:
            full = Subspace.full(labels, p).vectors(resolved)
            challenges[labels] = [x for x in full if not x.is_zero]
        return challenges[labels]

    builder = _ArenaBuilder(presentation, resolved)
    builder.add(SarahTurn(start_site(setup), initial_challenge(setup, p)))
    while (item := builder.pending()) is not None:
        index, turn = item
        site = turn.site
        if isinstance(turn, SarahTurn):
            if turn.challenge is None:
                msg = f"Sarah's turn at {site.render()} has no challenge"
                raise InputError(msg)
            for v in vectors_at(site.key):
                if v.restrict(site.incoming).dot(turn.challenge):
                    builder.move(index, ColinTurn(site, v.support, v))
            continue
        if turn.vector is None:
            msg = f"Colin's turn at {site.render()} has no vector"
            raise InputError(msg)
        for way in exits(presentation, site):
            shown = turn.vector.restrict(way.labels)
            if shown.is_zero:
                continue
            for x in challenges_on(way.labels):
                if shown.dot(x):
                    builder.move(index, SarahTurn(way.site, x.relabel(way.rename)))
    return builder.arena("representable")


def build_arena(setup: GameSetup, *, limits: ToolkitLimits | None = None) -> ParityArena:
    """The representable arena when the setup has a representation, else the overlap-1 one."""
    if setup.representable:
        return build_arena_representable(setup, limits=limits)
    return build_arena_overlap1(setup, limits=limits)


# ============================================================================
# Comparing the two games
# ============================================================================


def sarah_winners_agree(overlap: SolvedGame, representable: SolvedGame) -> ArenaAgreement:
    """Compare who wins each Sarah site in the two versions of one game.

    Every Sarah position of the representable arena is matched with the
    overlap-1 position at the same site; sites missing from either arena
    are skipped.
    """
    by_site: dict[Site, Player] = {}
    for index, position in enumerate(overlap.arena.positions):
        if isinstance(position.payload, SarahTurn):
            by_site[position.payload.site] = overlap.strategy.winner(index)
    compared: set[Site] = set()
    disagreements: set[Site] = set()
    for index, position in enumerate(representable.arena.positions):
        payload = position.payload
        if not isinstance(payload, SarahTurn) or payload.site not in by_site:
            continue
        compared.add(payload.site)
        if representable.strategy.winner(index) is not by_site[payload.site]:
            disagreements.add(payload.site)
    ordered = tuple(sorted(disagreements, key=lambda s: s.render()))
    logger.debug(
        "games.compare_arenas",
        extra={"compared": len(compared), "disagreements": len(ordered)},
    )
    return ArenaAgreement(len(compared), ordered)
