"""Game setups, arena payloads and the verdicts returned by game queries."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import TYPE_CHECKING

from matroid_common import InputError, format_set, sort_labels
from parity_game_api import Player

if TYPE_CHECKING:
    from collections.abc import Iterable

    from gf_linalg import Vector
    from matroid_kernel import Matroid
    from matroid_trees import (
        ExplicitTreeOfMatroids,
        PreCircuit,
        PsiVector,
        TransitionKey,
        TreePresentation,
        TreeRepresentation,
    )
    from orthogonality_axioms import AxiomReport
    from parity_game_api import ParityArena, Strategy

    from circuit_games.witness import StrategyAutomaton


# ============================================================================
# Setup
# ============================================================================


@dataclass(frozen=True)
class GameSetup:
    """One instance ``{e} ∪ P_C ∪ P_D`` of the circuit game.

    Attributes:
        presentation: The tree of matroids, with Ψ given by its priorities.
        element: The real edge ``e`` the game starts from.
        pco: Real edges Sarah's circuits may use besides ``e``.
        pde: Real edges Sarah's circuits must avoid.
        representation: Subspaces for the representable game; ``None`` for
            the overlap-1 game.
    """

    presentation: TreePresentation
    element: str
    pco: frozenset[str]
    pde: frozenset[str]
    representation: TreeRepresentation | None = field(default=None, repr=False)

    @classmethod
    def build(
        cls,
        presentation: TreePresentation,
        element: str,
        pco: Iterable[str] = (),
        pde: Iterable[str] | None = None,
        *,
        representation: TreeRepresentation | None = None,
    ) -> GameSetup:
        """Check that ``{e}``, ``pco`` and ``pde`` partition the real edges.

        ``pde`` defaults to every real edge not in ``{e}`` or ``pco``.

        Raises:
            InputError: If ``e`` is not a real edge, the sets do not partition
                the real edges, the overlap-1 game is asked of a presentation
                with larger interfaces, or the representation does not cover
                the presentation.
        """
        real = presentation.real_edges
        if element not in real:
            msg = f"'{element}' is not a real edge; real edges are {format_set(real)}"
            raise InputError(msg)
        circuit_side = frozenset(pco)
        rest = real - {element} - circuit_side
        deleted = rest if pde is None else frozenset(pde)
        overlap = circuit_side & deleted
        if overlap or element in circuit_side | deleted:
            msg = f"P_C and P_D must be disjoint and avoid {element}"
            raise InputError(msg)
        if circuit_side | deleted | {element} != real:
            missing = real - circuit_side - deleted - {element}
            stray = (circuit_side | deleted) - real
            msg = (
                f"{{{element}}}, P_C and P_D must partition the real edges: "
                f"missing {format_set(missing)}, unknown {format_set(stray)}"
            )
            raise InputError(msg)
        if representation is None and not presentation.is_overlap_one:
            msg = "Interfaces larger than one label need a representation"
            raise InputError(msg)
        if representation is not None and set(representation.spaces) != set(
            presentation.matroids
        ):
            msg = "The representation must give one subspace per prefix node and state"
            raise InputError(msg)
        return cls(presentation, element, circuit_side, deleted, representation)

    @property
    def representable(self) -> bool:
        """True when the game is played with vectors."""
        return self.representation is not None

    def dual(self) -> GameSetup:
        """The circuit game underlying the cocircuit game.

        Matroids and subspaces are dualised, every priority is shifted by one
        so Ψ becomes its complement, and ``P_C`` and ``P_D`` swap.
        """
        return GameSetup(
            self.presentation.dual().shifted(1),
            self.element,
            self.pde,
            self.pco,
            None if self.representation is None else self.representation.dual(),
        )


# ============================================================================
# Arena payloads
# ============================================================================


@dataclass(frozen=True)
class Site:
    """Where a Sarah turn takes place.

    Attributes:
        key: The prefix node or core state whose matroid is played.
        incoming: Local labels of the interface the play arrived through;
            ``{e}`` at the start.
        via: The transition crossed to arrive; ``None`` inside the prefix.
    """

    key: str
    incoming: frozenset[str]
    via: TransitionKey | None = None

    def render(self) -> str:
        """``key`` or ``key@source/name``, followed by the incoming labels."""
        where = self.key if self.via is None else f"{self.key}@{self.via[0]}/{self.via[1]}"
        return f"{where} in {format_set(self.incoming)}"


@dataclass(frozen=True)
class SarahTurn:
    """Sarah must answer the challenge at ``site``.

    ``challenge`` is ``None`` in the overlap-1 game.
    """

    site: Site
    challenge: Vector | None = None


@dataclass(frozen=True)
class ColinTurn:
    """Colin answers Sarah's circuit (or vector) played at ``site``."""

    site: Site
    circuit: frozenset[str]
    vector: Vector | None = None


@dataclass(frozen=True)
class SolvedGame:
    """A setup together with its arena and a solution.

    Attributes:
        setup: The game instance.
        arena: The compiled parity arena; payloads are turns.
        strategy: Winners and positional choices for ``arena``.
    """

    setup: GameSetup
    arena: ParityArena = field(repr=False)
    strategy: Strategy = field(repr=False)

    @property
    def sarah_wins(self) -> bool:
        """Sarah wins from the initial position."""
        return self.strategy.initial_winner is Player.SARAH

    def sarah_turn(self, index: int) -> SarahTurn:
        """The payload of a Sarah position."""
        payload = self.arena.positions[index].payload
        if not isinstance(payload, SarahTurn):
            msg = f"Position {index} is not Sarah's turn"
            raise InputError(msg)
        return payload

    def colin_turn(self, index: int) -> ColinTurn:
        """The payload of a Colin position."""
        payload = self.arena.positions[index].payload
        if not isinstance(payload, ColinTurn):
            msg = f"Position {index} is not Colin's turn"
            raise InputError(msg)
        return payload


# ============================================================================
# Verdicts
# ============================================================================


@dataclass(frozen=True)
class Materialization:
    """A depth-bounded view of an infinite witness.

    Attributes:
        depth: Truncation depth of the unfolding.
        tree: The truncated unfolding the witness lives on.
        support: Real edges used by the witness.
        precircuit: The witness in the overlap-1 game.
        vector: The witness in the representable game.
    """

    depth: int
    tree: ExplicitTreeOfMatroids = field(repr=False)
    support: frozenset[str]
    precircuit: PreCircuit | None = field(default=None, repr=False)
    vector: PsiVector | None = field(default=None, repr=False)


@dataclass(frozen=True)
class CircuitVerdict:
    """Answer to "is there a Ψ-circuit through ``e`` inside ``{e} ∪ P_C``?".

    Attributes:
        element: The edge ``e``.
        sarah_wins: Sarah wins the circuit game, so a Ψ-circuit exists.
        automaton: Winning strategy of the circuit game when Sarah wins, else
            Colin's winning strategy read off the cocircuit game.
        materialization: The automaton unfolded to a finite depth.
    """

    element: str
    sarah_wins: bool
    automaton: StrategyAutomaton = field(repr=False)
    materialization: Materialization = field(repr=False)

    @property
    def kind(self) -> str:
        """``circuit`` or ``cocircuit``: what the witness is."""
        return "circuit" if self.sarah_wins else "cocircuit"

    def describe(self) -> str:
        """One-line report, e.g. ``winner: Sarah; d0 is a Ψ-circuit``."""
        winner = "Sarah" if self.sarah_wins else "Colin"
        noun = "Ψ-circuit" if self.sarah_wins else "Ψᶜ-cocircuit"
        support = " ".join(sort_labels(self.materialization.support))
        return f"winner: {winner}; {support} is a {noun}"


@dataclass(frozen=True)
class DualityVerdict:
    """Outcome of solving a circuit game and its cocircuit game independently.

    Attributes:
        element: The edge ``e``.
        sarah_wins: Sarah wins the circuit game.
        colin_wins_cocircuit_game: Colin wins the cocircuit game, that is, the
            circuit role wins the dual circuit game.
        positions: Arena sizes of the circuit game and of its dual game.
    """

    element: str
    sarah_wins: bool
    colin_wins_cocircuit_game: bool
    positions: tuple[int, int] = (0, 0)

    @property
    def agree(self) -> bool:
        """Colin wins both games or neither."""
        return (not self.sarah_wins) == self.colin_wins_cocircuit_game


@dataclass(frozen=True)
class InducedMatroid:
    """The matroid induced on the real edges, with the evidence for it.

    Attributes:
        matroid: The reconstructed matroid.
        report: Axiom report of the circuit and cocircuit families.
        queries: Number of games solved.
    """

    matroid: Matroid
    report: AxiomReport = field(repr=False)
    queries: int


@dataclass(frozen=True)
class ArenaAgreement:
    """Comparison of the overlap-1 and representable arenas site by site.

    Attributes:
        compared: Number of sites present in both arenas.
        disagreements: Sites whose winners differ.
    """

    compared: int
    disagreements: tuple[Site, ...] = ()

    @property
    def agree(self) -> bool:
        """No site disagrees."""
        return not self.disagreements
