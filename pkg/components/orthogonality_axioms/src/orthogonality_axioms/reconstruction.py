"""Matroids determined by a pair of set systems, and recursive base extension."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import TYPE_CHECKING

from matroid_common import (
    AxiomViolationError,
    InputError,
    InvariantViolationError,
    canonical_sets,
    format_set,
    lex_key,
)
from matroid_kernel import Matroid

from orthogonality_axioms.checker import check_axioms

if TYPE_CHECKING:
    from collections.abc import Iterable, Sequence

    from matroid_common.config import ToolkitLimits

    from orthogonality_axioms.models import SetSystemPair

logger = logging.getLogger(__name__)


def minimal_members(family: Iterable[frozenset[str]]) -> tuple[frozenset[str], ...]:
    """Inclusion-minimal nonempty members, in canonical order."""
    ordered = canonical_sets(m for m in family if m)
    minimal: list[frozenset[str]] = []
    for member in ordered:
        if not any(kept <= member for kept in minimal):
            minimal.append(member)
    return tuple(minimal)


def reconstruct(system: SetSystemPair, *, limits: ToolkitLimits | None = None) -> Matroid:
    """Recover the matroid determined by ``system``.

    Its circuits are the minimal nonempty members of ``system.circuits``.
    Only (O1), (O2), (O3) and (O3*) are required; (C1)/(C2) may fail.

    Raises:
        AxiomViolationError: If one of the four determining axioms fails; the
            report is attached.
        InvariantViolationError: If the result is not sandwiched between the
            circuits and scrawls of the recovered matroid (or of its dual).
    """
    report = check_axioms(system, limits=limits)
    if not report.determines_matroid:
        first = next(v for v in report.failures if v.axiom.startswith("(O"))
        msg = f"Cannot reconstruct: {first.describe()}"
        raise AxiomViolationError(msg, axiom=first.axiom, witness=first.witness, report=report)

    try:
        matroid = Matroid.from_circuits(
            system.ground, minimal_members(system.circuits), name=system.name, limits=limits
        )
    except AxiomViolationError as exc:
        msg = f"Minimal members fail {exc.axiom} although the orthogonality axioms hold"
        raise InvariantViolationError(msg, detail={"axiom": exc.axiom}) from exc

    if not matroid.sandwiched(system.circuits):
        msg = "Circuit family is not sandwiched between circuits and scrawls"
        raise InvariantViolationError(msg, detail={"system": system.name})
    if not matroid.dual().sandwiched(system.cocircuits):
        msg = "Cocircuit family is not sandwiched between cocircuits and coscrawls"
        raise InvariantViolationError(msg, detail={"system": system.name})
    logger.debug(
        "axioms.reconstruct",
        extra={"ground": len(matroid.ground), "circuits": len(matroid.circuits)},
    )
    return matroid


# ============================================================================
# Base extension
# ============================================================================


@dataclass(frozen=True)
class BasePartition:
    """Result of extending an independent set to a base of ``X``.

    Attributes:
        independent: The maximal independent subset of ``X`` that was built.
        rest: The remaining elements of ``X``.
        steps: Which rule placed each enumerated element: ``circuit``,
            ``cocircuit`` or ``dual``.
    """

    independent: frozenset[str]
    rest: frozenset[str]
    steps: tuple[tuple[str, str], ...]


def base_extend(
    system: SetSystemPair,
    independent: Iterable[str],
    within: Iterable[str],
    order: Sequence[str] | None = None,
) -> BasePartition:
    """Extend ``independent`` to a maximal independent subset of ``within``.

    Runs the recursion over the enumeration ``order`` of ``within`` (default:
    canonical label order). At step ``n``:

    1. If some member of ``C`` through ``e_n`` lies inside ``I + e_n``,
       ``e_n`` joins ``J``.
    2. Else if ``e_n`` is not in ``J``, it joins ``I`` and ``J`` grows by the
       member ``D`` of ``D`` through ``e_n`` avoiding ``I - e_n`` with
       inclusion-minimal ``D - J`` (lexicographically least on ties).
    3. Else ``I`` grows by the member of ``C`` through ``e_n`` avoiding
       ``J - e_n`` with inclusion-minimal ``C - I``.

    Raises:
        InputError: If ``independent`` is not an independent subset of
            ``within``, ``order`` is not an enumeration of ``within``, or no
            member required by a step exists (the axioms fail).
        InvariantViolationError: If the result is not a maximal independent
            subset of ``within``.
    """
    ground = frozenset(system.ground)
    x_set = frozenset(within)
    i_set = frozenset(independent)
    circuits = minimal_members(system.circuits)
    if not x_set <= ground:
        msg = f"{format_set(x_set - ground)} lies outside the ground set"
        raise InputError(msg)
    if not i_set <= x_set:
        msg = f"{format_set(i_set)} is not inside {format_set(x_set)}"
        raise InputError(msg)
    if any(c <= i_set for c in circuits):
        msg = f"{format_set(i_set)} is not independent"
        raise InputError(msg)
    enumeration = tuple(order) if order is not None else lex_key(x_set)
    if sorted(enumeration) != sorted(x_set):
        msg = "The enumeration must list every element of the set exactly once"
        raise InputError(msg)

    current_i: frozenset[str] = i_set
    current_j: frozenset[str] = ground - x_set
    steps: list[tuple[str, str]] = []
    for e in enumeration:
        if any(e in c and c <= current_i | {e} for c in system.circuits):
            current_j |= {e}
            steps.append((e, "circuit"))
        elif e not in current_j:
            avoid = current_i - {e}
            member = _least_extension(system.cocircuits, e, avoid, current_j)
            if member is None:
                msg = f"No cocircuit through {e} avoids {format_set(avoid)}; (O2) fails"
                raise InputError(msg)
            current_i |= {e}
            current_j = (current_j | member) - {e}
            steps.append((e, "cocircuit"))
        else:
            avoid = current_j - {e}
            member = _least_extension(system.circuits, e, avoid, current_i)
            if member is None:
                msg = f"No circuit through {e} avoids {format_set(avoid)}; (O2) fails"
                raise InputError(msg)
            current_i = (current_i | member) - {e}
            steps.append((e, "dual"))

    result = current_i & x_set
    if any(c <= result for c in circuits) or any(
        not any(c <= result | {x} for c in circuits) for x in x_set - result
    ):
        msg = f"{format_set(result)} is not a maximal independent subset of {format_set(x_set)}"
        raise InvariantViolationError(msg, detail={"steps": steps})
    logger.debug("axioms.base_extend", extra={"within": len(x_set), "base": len(result)})
    return BasePartition(result, x_set - result, tuple(steps))


def _least_extension(
    family: Iterable[frozenset[str]],
    e: str,
    avoid: frozenset[str],
    covered: frozenset[str],
) -> frozenset[str] | None:
    """Member through ``e`` disjoint from ``avoid`` with inclusion-minimal ``member - covered``."""
    candidates = [m for m in family if e in m and not m & avoid]
    minimal = [
        m for m in candidates if not any((other - covered) < (m - covered) for other in candidates)
    ]
    if not minimal:
        return None
    return min(minimal, key=lambda m: lex_key(m - covered) + ("",) + lex_key(m))
