"""Set systems and axiom reports."""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

from matroid_common import InputError, canonical_sets, format_set, sort_labels

if TYPE_CHECKING:
    from collections.abc import Iterable

    from matroid_kernel import Matroid

AXIOMS: tuple[str, ...] = ("(C1)", "(C2)", "(C1*)", "(C2*)", "(O1)", "(O2)", "(O3)", "(O3*)")
DETERMINING_AXIOMS: tuple[str, ...] = ("(O1)", "(O2)", "(O3)", "(O3*)")

WitnessItem = str | frozenset[str]


@dataclass(frozen=True)
class SetSystemPair:
    """Candidate circuit and cocircuit families over one ground set.

    Attributes:
        ground: Ground set in canonical order.
        circuits: The putative circuits, canonical and deduplicated.
        cocircuits: The putative cocircuits, canonical and deduplicated.
        name: Optional display name.
    """

    ground: tuple[str, ...]
    circuits: tuple[frozenset[str], ...]
    cocircuits: tuple[frozenset[str], ...]
    name: str = ""

    @classmethod
    def build(
        cls,
        ground: Iterable[str],
        circuits: Iterable[Iterable[str]],
        cocircuits: Iterable[Iterable[str]],
        *,
        name: str = "",
    ) -> SetSystemPair:
        """Canonicalise both families and check they live in ``ground``.

        Raises:
            InputError: If a member has elements outside ``ground``.
        """
        labels = sort_labels(ground)
        c_family = canonical_sets(circuits)
        d_family = canonical_sets(cocircuits)
        allowed = set(labels)
        for member in (*c_family, *d_family):
            if not member <= allowed:
                msg = f"{format_set(member)} has elements outside the ground set"
                raise InputError(msg)
        return cls(labels, c_family, d_family, name)

    @classmethod
    def from_matroid(cls, matroid: Matroid) -> SetSystemPair:
        """The circuits and cocircuits of ``matroid``."""
        return cls(matroid.ground, matroid.circuits, matroid.cocircuits, matroid.name)

    def dual(self) -> SetSystemPair:
        """Swap the two families."""
        return SetSystemPair(self.ground, self.cocircuits, self.circuits, self.name)


@dataclass(frozen=True)
class AxiomVerdict:
    """Outcome for one axiom.

    ``witness`` is empty when the axiom holds. Its shape depends on the axiom:
    ``(∅,)`` for (C1)/(C1*), ``(A, B)`` with ``A ⊊ B`` for (C2)/(C2*),
    ``(C, D)`` for (O1), ``(e, P_C, P_D)`` for (O2) and ``(C, e, X)`` for (O3)/(O3*).
    """

    axiom: str
    passed: bool
    witness: tuple[WitnessItem, ...] = ()

    def describe(self) -> str:
        """One-line rendering, e.g. ``(O2) FAIL a {} {}``."""
        if self.passed:
            return f"{self.axiom} PASS"
        parts = [item if isinstance(item, str) else format_set(item) for item in self.witness]
        return f"{self.axiom} FAIL " + " ".join(parts)


@dataclass(frozen=True)
class AxiomReport:
    """Verdicts for all eight axioms, in their canonical order."""

    verdicts: tuple[AxiomVerdict, ...]

    def verdict(self, axiom: str) -> AxiomVerdict:
        """Look up one axiom."""
        for v in self.verdicts:
            if v.axiom == axiom:
                return v
        msg = f"Unknown axiom {axiom!r}"
        raise InputError(msg)

    @property
    def passed(self) -> bool:
        """All eight axioms hold."""
        return all(v.passed for v in self.verdicts)

    @property
    def determines_matroid(self) -> bool:
        """(O1), (O2), (O3) and (O3*) hold."""
        return all(self.verdict(a).passed for a in DETERMINING_AXIOMS)

    @property
    def failures(self) -> tuple[AxiomVerdict, ...]:
        """The failed verdicts."""
        return tuple(v for v in self.verdicts if not v.passed)

    def summary(self) -> str:
        """``PASS (8/8)`` or ``FAIL (k/8)``."""
        count = sum(v.passed for v in self.verdicts)
        word = "PASS" if self.passed else "FAIL"
        return f"{word} ({count}/{len(self.verdicts)})"


@dataclass(frozen=True)
class EliminationAgreement:
    """Both sides of the (O2)-versus-elimination equivalence for one family.

    Attributes:
        o2_holds: (O2) holds for the family paired with its orthogonal family.
        elimination_holds: The family satisfies circuit elimination.
    """

    o2_holds: bool
    elimination_holds: bool

    @property
    def agree(self) -> bool:
        """Both hold or both fail."""
        return self.o2_holds == self.elimination_holds
