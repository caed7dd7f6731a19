"""Circuit elimination on set families and its (O2) counterpart."""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from typing import TYPE_CHECKING

from matroid_common import canonical_sets, sort_labels
from matroid_common.config import ToolkitLimits, resolve_limits
from matroid_common.exceptions import check_cap

from orthogonality_axioms.checker import holds_o2
from orthogonality_axioms.models import EliminationAgreement, SetSystemPair

if TYPE_CHECKING:
    from collections.abc import Iterable

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EliminationFailure:
    """A counterexample to circuit elimination.

    Attributes:
        circuit: The member ``C`` being eliminated from.
        eliminated: The set ``X`` inside ``C``.
        family: One member ``C_x`` per ``x`` in ``X`` with ``C_x & X == {x}``.
        z: An element of ``C`` outside every ``C_x`` that no member
            ``C'`` with ``z in C' <= (C | U C_x) - X`` contains.
    """

    circuit: frozenset[str]
    eliminated: frozenset[str]
    family: tuple[frozenset[str], ...]
    z: str


def orthogonal_family(
    ground: Iterable[str], family: Iterable[Iterable[str]]
) -> tuple[frozenset[str], ...]:
    """All subsets of ``ground`` meeting no member of ``family`` in exactly one element."""
    labels = sort_labels(ground)
    index = {label: i for i, label in enumerate(labels)}
    masks = [sum(1 << index[x] for x in member) for member in family]
    found = [
        frozenset(label for i, label in enumerate(labels) if s >> i & 1)
        for s in range(1 << len(labels))
        if all((s & m).bit_count() != 1 for m in masks)
    ]
    return canonical_sets(found)


def circuit_elimination_failures(
    ground: Iterable[str],
    family: Iterable[Iterable[str]],
    *,
    max_failures: int | None = None,
    limits: ToolkitLimits | None = None,
) -> tuple[EliminationFailure, ...]:
    """Search the X-indexed elimination axiom exhaustively.

    Families ``(C_x)`` are explored up to their union, which is all the axiom
    depends on.

    Raises:
        ResourceCapError: If the ground set exceeds ``axiom_cap``.
    """
    labels = sort_labels(ground)
    check_cap("axiom_cap", resolve_limits(limits).axiom_cap, len(labels))
    index = {label: i for i, label in enumerate(labels)}
    members = canonical_sets(family)
    masks = [sum(1 << index[x] for x in m) for m in members]

    def labels_of(mask: int) -> frozenset[str]:
        return frozenset(label for i, label in enumerate(labels) if mask >> i & 1)

    failures: list[EliminationFailure] = []
    for c in masks:
        bits = [i for i in range(len(labels)) if c >> i & 1]
        for size in range(1, len(bits) + 1):
            for chosen in itertools.combinations(bits, size):
                x_mask = sum(1 << i for i in chosen)
                unions: dict[int, tuple[int, ...]] = {0: ()}
                for x in chosen:
                    options = [m for m in masks if m & x_mask == 1 << x]
                    unions = {
                        u | m: (*picked, m) for u, picked in unions.items() for m in options
                    }
                for union, picked in sorted(unions.items()):
                    window = (c | union) & ~x_mask
                    for z in bits:
                        if union >> z & 1 or x_mask >> z & 1:
                            continue
                        if any(m >> z & 1 and m & ~window == 0 for m in masks):
                            continue
                        failures.append(
                            EliminationFailure(
                                labels_of(c),
                                labels_of(x_mask),
                                tuple(labels_of(m) for m in picked),
                                labels[z],
                            )
                        )
                        if max_failures is not None and len(failures) >= max_failures:
                            return tuple(failures)
    return tuple(failures)


def check_o2_via_elimination(
    ground: Iterable[str],
    family: Iterable[Iterable[str]],
    *,
    limits: ToolkitLimits | None = None,
) -> EliminationAgreement:
    """Test (O2) for ``family`` against its orthogonal family, and elimination independently.

    The two verdicts always agree for a correct implementation.

    Raises:
        ResourceCapError: If the ground set exceeds ``axiom_cap``.
    """
    labels = sort_labels(ground)
    members = canonical_sets(family)
    eliminates = not circuit_elimination_failures(labels, members, max_failures=1, limits=limits)
    system = SetSystemPair.build(labels, members, orthogonal_family(labels, members))
    verdict = EliminationAgreement(o2_holds=holds_o2(system), elimination_holds=eliminates)
    logger.debug(
        "axioms.o2_via_elimination",
        extra={"ground": len(labels), "o2": verdict.o2_holds, "elimination": eliminates},
    )
    return verdict
