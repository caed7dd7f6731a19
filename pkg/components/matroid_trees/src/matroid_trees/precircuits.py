"""Pre-circuits of overlap-1 trees of matroids.

A pre-circuit is a connected set of nodes ``C`` with a circuit ``o(t)`` of
``M(t)`` at each of them, such that for every ``t`` in ``C`` and every
neighbour ``t'`` the dummy edge ``e(tt')`` lies in ``o(t)`` exactly when
``t'`` is in ``C``. On a finite tree there are no ends, so every pre-circuit
counts.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from typing import TYPE_CHECKING

import networkx as nx

from matroid_common import InputError, canonical_sets, format_set
from matroid_common.config import ToolkitLimits, resolve_limits
from matroid_common.exceptions import check_cap

if TYPE_CHECKING:
    from collections.abc import Mapping

    from matroid_trees.explicit import ExplicitTreeOfMatroids

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PreCircuit:
    """Node set ``C`` with one chosen circuit per node.

    Attributes:
        circuits: ``o(t)`` for every node ``t`` of ``C``.
    """

    circuits: Mapping[str, frozenset[str]]

    @property
    def nodes(self) -> frozenset[str]:
        """The node set ``C``."""
        return frozenset(self.circuits)

    def underlying(self, tree: ExplicitTreeOfMatroids) -> frozenset[str]:
        """``E ∩ ⋃ o(t)``: the ground elements used."""
        used: set[str] = set()
        for circuit in self.circuits.values():
            used |= circuit
        return frozenset(used) & tree.ground


@dataclass(frozen=True)
class PrecircuitFailure:
    """One broken condition of a candidate pre-circuit.

    Attributes:
        kind: ``empty``, ``unknown-node``, ``disconnected``, ``not-a-circuit``
            or ``interface``.
        node: The node at fault, when there is one.
        detail: Human-readable description. For ``interface`` failures it
            names the neighbour and the dummy edge.
    """

    kind: str
    node: str = ""
    detail: str = ""


@dataclass(frozen=True)
class PrecircuitVerdict:
    """Outcome of :func:`validate_precircuit`."""

    failures: tuple[PrecircuitFailure, ...]

    @property
    def valid(self) -> bool:
        """No condition failed."""
        return not self.failures


@dataclass(frozen=True)
class CircuitEnumeration:
    """Every pre-circuit of a finite overlap-1 tree and what they induce.

    Attributes:
        precircuits: All pre-circuits.
        underlying: The distinct nonempty underlying sets, canonically ordered.
        circuits: The inclusion-minimal members of ``underlying``.
    """

    precircuits: tuple[PreCircuit, ...]
    underlying: tuple[frozenset[str], ...]
    circuits: tuple[frozenset[str], ...]


def _require_overlap_one(tree: ExplicitTreeOfMatroids) -> None:
    if not tree.is_overlap_one:
        msg = "Pre-circuits are defined for trees of overlap 1 only"
        raise InputError(msg)


def validate_precircuit(tree: ExplicitTreeOfMatroids, precircuit: PreCircuit) -> PrecircuitVerdict:
    """Check every defining condition and report all failures.

    Boundary labels of a truncated tree may be used freely: the node on their
    far side is outside the truncation.

    Raises:
        InputError: If ``tree`` does not have overlap 1.
    """
    _require_overlap_one(tree)
    failures: list[PrecircuitFailure] = []
    chosen = precircuit.nodes
    if not chosen:
        return PrecircuitVerdict((PrecircuitFailure("empty", detail="C has no nodes"),))
    unknown = sorted(chosen - set(tree.nodes))
    failures.extend(
        PrecircuitFailure("unknown-node", node, "not a node of the tree") for node in unknown
    )
    if unknown:
        return PrecircuitVerdict(tuple(failures))

    if not nx.is_connected(tree.graph.subgraph(chosen)):
        failures.append(PrecircuitFailure("disconnected", detail=f"{format_set(chosen)}"))

    for node in sorted(chosen):
        circuit = precircuit.circuits[node]
        if circuit not in tree.matroid(node).circuits:
            failures.append(
                PrecircuitFailure("not-a-circuit", node, f"{format_set(circuit)} is not a circuit")
            )
        for neighbour in tree.neighbours(node):
            label = tree.interface_label(node, neighbour)
            if (label in circuit) != (neighbour in chosen):
                side = "uses" if label in circuit else "avoids"
                status = "outside" if neighbour not in chosen else "inside"
                failures.append(
                    PrecircuitFailure(
                        "interface",
                        node,
                        f"o({node}) {side} {label} but {neighbour} is {status} C",
                    )
                )
    return PrecircuitVerdict(tuple(failures))


def enumerate_precircuits(
    tree: ExplicitTreeOfMatroids, *, limits: ToolkitLimits | None = None
) -> tuple[PreCircuit, ...]:
    """Every pre-circuit of a finite overlap-1 tree.

    Each pre-circuit is generated once, from its node closest to the root:
    that node's circuit avoids the edge to its parent, and every included
    child is completed recursively with circuits through the shared edge.

    Raises:
        InputError: If the tree lacks overlap 1 or has boundary labels.
        ResourceCapError: If the tree has more than ``tree_node_cap`` nodes.
    """
    _require_overlap_one(tree)
    if tree.boundary:
        msg = f"Cannot enumerate pre-circuits of a truncation (open: {format_set(tree.boundary)})"
        raise InputError(msg)
    check_cap("tree_node_cap", resolve_limits(limits).tree_node_cap, len(tree.nodes))

    cache: dict[tuple[str, str | None, bool], list[dict[str, frozenset[str]]]] = {}

    def completions(
        node: str, above: str | None, above_in: bool
    ) -> list[dict[str, frozenset[str]]]:
        key = (node, above, above_in)
        if key in cache:
            return cache[key]
        up_label = tree.interface_label(node, above) if above is not None else None
        below = [n for n in tree.neighbours(node) if n != above]
        found: list[dict[str, frozenset[str]]] = []
        for circuit in tree.matroid(node).circuits:
            if up_label is not None and (up_label in circuit) != above_in:
                continue
            included = [n for n in below if tree.interface_label(node, n) in circuit]
            options = [completions(child, node, above_in=True) for child in included]
            for combo in itertools.product(*options):
                merged = {node: circuit}
                for part in combo:
                    merged.update(part)
                found.append(merged)
        cache[key] = found
        return found

    result: list[PreCircuit] = []
    for top in tree.nodes:
        for circuits in completions(top, tree.parents[top], above_in=False):
            result.append(PreCircuit(circuits))
    logger.debug(
        "trees.enumerate_precircuits", extra={"nodes": len(tree.nodes), "found": len(result)}
    )
    return tuple(result)


def enumerate_circuits(
    tree: ExplicitTreeOfMatroids, *, limits: ToolkitLimits | None = None
) -> CircuitEnumeration:
    """Underlying sets of all pre-circuits and their minimal nonempty members.

    Raises:
        InputError: If the tree lacks overlap 1 or has boundary labels.
        ResourceCapError: If the tree has more than ``tree_node_cap`` nodes.
    """
    precircuits = enumerate_precircuits(tree, limits=limits)
    underlying = canonical_sets(s for p in precircuits if (s := p.underlying(tree)))
    minimal: list[frozenset[str]] = []
    for candidate in underlying:
        if not any(kept <= candidate for kept in minimal):
            minimal.append(candidate)
    return CircuitEnumeration(precircuits, underlying, tuple(minimal))
