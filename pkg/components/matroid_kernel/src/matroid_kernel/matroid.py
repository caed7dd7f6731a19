"""Finite matroids stored as explicit, canonically ordered circuit lists.

Representations and graphs are compiled down to circuits on construction.
Every derived family (bases, cocircuits) is computed from the circuits once
and cached on the instance.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from enum import StrEnum
from functools import cached_property
from typing import TYPE_CHECKING

import networkx as nx

from gf_linalg import Subspace, complement
from matroid_common import (
    AxiomViolationError,
    InputError,
    InvariantViolationError,
    canonical_sets,
    sort_labels,
)
from matroid_common.config import ToolkitLimits, resolve_limits
from matroid_common.exceptions import check_cap

from matroid_kernel.graph import Graph

if TYPE_CHECKING:
    from collections.abc import Callable, Iterable, Mapping

logger = logging.getLogger(__name__)


class Provenance(StrEnum):
    """Where a matroid's circuits came from."""

    EXPLICIT = "explicit"
    GRAPHIC = "graphic"
    REPRESENTED = "represented"


@dataclass(frozen=True)
class Scrawl:
    """A union of circuits together with the circuits covering it."""

    edges: frozenset[str]
    witness: tuple[frozenset[str], ...]


@dataclass(frozen=True)
class Matroid:
    """A finite matroid given by its circuits.

    Two matroids are equal when their ground sets and circuit lists agree;
    ``provenance``, ``source`` and ``name`` are informational only.
    """

    ground: tuple[str, ...]
    circuits: tuple[frozenset[str], ...]
    provenance: Provenance = field(default=Provenance.EXPLICIT, compare=False)
    source: Graph | Subspace | None = field(default=None, compare=False, repr=False)
    name: str = field(default="", compare=False)

    # ========================================================================
    # Construction
    # ========================================================================

    @classmethod
    def from_circuits(
        cls,
        ground: Iterable[str],
        circuits: Iterable[Iterable[str]],
        *,
        name: str = "",
        limits: ToolkitLimits | None = None,
    ) -> Matroid:
        """Validate a circuit list and build the matroid.

        Checks (C1), (C2) and classical circuit elimination, then the
        X-indexed elimination for ``|X| <= 2`` on ground sets within
        ``axiom_cap``.

        Raises:
            InputError: If a circuit has elements outside ``ground``.
            AxiomViolationError: Naming the failed axiom and its witness sets.
        """
        labels = sort_labels(ground)
        family = canonical_sets(circuits)
        outside = sorted(set().union(*family) - set(labels)) if family else []
        if outside:
            msg = f"Circuit elements {outside} are not in the ground set"
            raise InputError(msg)
        _validate_circuit_axioms(labels, family, resolve_limits(limits))
        return cls(labels, family, name=name)

    @classmethod
    def uniform(cls, rank: int, ground: Iterable[str], *, name: str = "") -> Matroid:
        """The uniform matroid of the given rank: circuits are the ``rank + 1``-subsets."""
        labels = sort_labels(ground)
        if not 0 <= rank <= len(labels):
            msg = f"Uniform rank {rank} is outside [0, {len(labels)}]"
            raise InputError(msg)
        circuits = [frozenset(c) for c in itertools.combinations(labels, rank + 1)]
        return cls(labels, canonical_sets(circuits), name=name)

    @classmethod
    def from_representation(
        cls,
        space: Subspace,
        *,
        name: str = "",
        limits: ToolkitLimits | None = None,
    ) -> Matroid:
        """The matroid whose circuits are the minimal nonempty supports of ``space``.

        Raises:
            ResourceCapError: If the ambient set exceeds ``representation_cap``
                or the subspace has more than ``vector_cap`` vectors.
        """
        resolved = resolve_limits(limits)
        check_cap("representation_cap", resolved.representation_cap, len(space.ambient))
        rows = space.enumerate_rows(resolved)
        supports = {
            sum(1 << i for i, value in enumerate(row) if value) for row in rows.tolist()
        }
        supports.discard(0)
        circuits = [_mask_to_set(space.ambient, m) for m in _minimal_masks(supports)]
        logger.debug(
            "matroid.from_representation",
            extra={"ambient": len(space.ambient), "dim": space.dim, "circuits": len(circuits)},
        )
        return cls(
            space.ambient,
            canonical_sets(circuits),
            provenance=Provenance.REPRESENTED,
            source=space,
            name=name,
        )

    @classmethod
    def from_graph(cls, graph: Graph, *, name: str = "") -> Matroid:
        """The cycle matroid of ``graph``: circuits are edge sets of cycles."""
        circuits: list[frozenset[str]] = []
        for cycle in nx.simple_cycles(graph.to_networkx()):
            labels: set[str] = set()
            for u, v in itertools.pairwise([*cycle, cycle[0]]):
                edge = graph.edge_between(u, v)
                if edge is None:  # pragma: no cover - simple_cycles follows edges
                    msg = f"Cycle step {u}-{v} is not an edge"
                    raise InvariantViolationError(msg)
                labels.add(edge.label)
            circuits.append(frozenset(labels))
        return cls(
            graph.edge_labels,
            canonical_sets(circuits),
            provenance=Provenance.GRAPHIC,
            source=graph,
            name=name,
        )

    # ========================================================================
    # Bit masks
    # ========================================================================

    @cached_property
    def _index(self) -> dict[str, int]:
        return {label: i for i, label in enumerate(self.ground)}

    @cached_property
    def _circuit_masks(self) -> tuple[int, ...]:
        return tuple(self._mask(c) for c in self.circuits)

    def _mask(self, elements: Iterable[str]) -> int:
        mask = 0
        for label in elements:
            if label not in self._index:
                msg = f"'{label}' is not in the ground set {self.ground}"
                raise InputError(msg)
            mask |= 1 << self._index[label]
        return mask

    def _set(self, mask: int) -> frozenset[str]:
        return _mask_to_set(self.ground, mask)

    def _independent_mask(self, mask: int) -> bool:
        return not any(c & ~mask == 0 for c in self._circuit_masks)

    # ========================================================================
    # Independence, rank, bases
    # ========================================================================

    def is_independent(self, elements: Iterable[str]) -> bool:
        """True when ``elements`` contains no circuit."""
        return self._independent_mask(self._mask(elements))

    def rank_of(self, elements: Iterable[str]) -> int:
        """Size of a maximal independent subset, found greedily."""
        wanted = self._mask(elements)
        chosen = 0
        size = 0
        for i in range(len(self.ground)):
            if not wanted >> i & 1:
                continue
            if self._independent_mask(chosen | (1 << i)):
                chosen |= 1 << i
                size += 1
        return size

    @cached_property
    def rank(self) -> int:
        """Rank of the whole matroid."""
        return self.rank_of(self.ground)

    @cached_property
    def _base_masks(self) -> frozenset[int]:
        return frozenset(
            mask
            for combo in itertools.combinations(range(len(self.ground)), self.rank)
            if self._independent_mask(mask := sum(1 << i for i in combo))
        )

    @cached_property
    def bases(self) -> tuple[frozenset[str], ...]:
        """All bases in canonical order."""
        return canonical_sets(self._set(m) for m in self._base_masks)

    def is_base(self, elements: Iterable[str]) -> bool:
        """Membership in the base list."""
        return self._mask(elements) in self._base_masks

    @cached_property
    def cocircuits(self) -> tuple[frozenset[str], ...]:
        """Circuits of the dual, collected as fundamental cocircuits of every base."""
        found: set[int] = set()
        n = len(self.ground)
        for base in self._base_masks:
            for i in range(n):
                if not base >> i & 1:
                    continue
                rest = base & ~(1 << i)
                cocircuit = 1 << i
                for j in range(n):
                    if not base >> j & 1 and rest | (1 << j) in self._base_masks:
                        cocircuit |= 1 << j
                found.add(cocircuit)
        return canonical_sets(self._set(m) for m in found)

    @cached_property
    def _cocircuit_masks(self) -> tuple[int, ...]:
        return tuple(self._mask(d) for d in self.cocircuits)

    def is_loop(self, element: str) -> bool:
        """``{element}`` is a circuit."""
        return frozenset({element}) in self.circuits

    def is_coloop(self, element: str) -> bool:
        """``{element}`` is a cocircuit."""
        return frozenset({element}) in self.cocircuits

    # ========================================================================
    # Duality and minors
    # ========================================================================

    def dual(self) -> Matroid:
        """The dual matroid; its cocircuits are this matroid's circuits."""
        provenance = Provenance.EXPLICIT
        source: Subspace | None = None
        if isinstance(self.source, Subspace):
            provenance, source = Provenance.REPRESENTED, complement(self.source)
        dual = Matroid(
            self.ground,
            self.cocircuits,
            provenance=provenance,
            source=source,
            name=f"{self.name}*" if self.name else "",
        )
        vars(dual)["cocircuits"] = self.circuits
        return dual

    def minor(self, contract: Iterable[str] = (), delete: Iterable[str] = ()) -> Matroid:
        """The minor ``M / contract \\ delete``.

        Its circuits are the minimal nonempty sets ``o - contract`` over the
        circuits ``o`` avoiding ``delete``.

        Raises:
            InputError: If the two sets overlap or leave the ground set.
        """
        contracted = frozenset(contract)
        deleted = frozenset(delete)
        if contracted & deleted:
            msg = f"Contract and delete sets overlap in {sorted(contracted & deleted)}"
            raise InputError(msg)
        c_mask, d_mask = self._mask(contracted), self._mask(deleted)
        candidates = {c & ~c_mask for c in self._circuit_masks if not c & d_mask}
        candidates.discard(0)
        ground = [label for label in self.ground if label not in contracted | deleted]
        circuits = [self._set(m) for m in _minimal_masks(candidates)]
        return Matroid(sort_labels(ground), canonical_sets(circuits))

    def relabel(self, mapping: Mapping[str, str]) -> Matroid:
        """Rename elements injectively; unmapped labels keep their name."""
        renamed = [mapping.get(label, label) for label in self.ground]
        if len(set(renamed)) != len(renamed):
            msg = "Relabelling must be injective on the ground set"
            raise InputError(msg)
        circuits = [frozenset(mapping.get(x, x) for x in c) for c in self.circuits]
        return Matroid(sort_labels(renamed), canonical_sets(circuits), name=self.name)

    # ========================================================================
    # Fundamental circuits, scrawls, separating cocircuits
    # ========================================================================

    def fundamental(self, base: Iterable[str], element: str) -> frozenset[str]:
        """Fundamental circuit (``element`` outside ``base``) or cocircuit (inside).

        Raises:
            InputError: If ``base`` is not a base or ``element`` is not in the ground set.
        """
        base_mask = self._mask(base)
        if base_mask not in self._base_masks:
            msg = f"{sorted(self._set(base_mask))} is not a base"
            raise InputError(msg)
        bit = self._mask([element])
        if base_mask & bit:
            window = (~base_mask | bit) & ((1 << len(self.ground)) - 1)
            family = self._cocircuit_masks
        else:
            window = base_mask | bit
            family = self._circuit_masks
        for member in family:
            if member & bit and member & ~window == 0:
                return self._set(member)
        msg = f"No fundamental set through {element} for base {sorted(self._set(base_mask))}"
        raise InvariantViolationError(msg)

    def scrawl_cover(self, elements: Iterable[str]) -> Scrawl | None:
        """Circuits covering ``elements`` exactly, or ``None`` if it is no scrawl."""
        mask = self._mask(elements)
        inside = [c for c in self._circuit_masks if c & ~mask == 0]
        union = 0
        for c in inside:
            union |= c
        if union != mask:
            return None
        return Scrawl(self._set(mask), tuple(self._set(c) for c in inside))

    def is_scrawl(self, elements: Iterable[str]) -> bool:
        """True when ``elements`` is a union of circuits."""
        return self.scrawl_cover(elements) is not None

    def separating_cocircuit(self, circuit: Iterable[str], e: str, f: str) -> frozenset[str]:
        """A cocircuit meeting ``circuit`` in exactly ``{e, f}``.

        Raises:
            InputError: If ``circuit`` is not a circuit or ``e``, ``f`` are not
                two distinct elements of it.
        """
        target = frozenset(circuit)
        if target not in self.circuits:
            msg = f"{sorted(target)} is not a circuit"
            raise InputError(msg)
        if e == f or e not in target or f not in target:
            msg = f"{e} and {f} must be distinct elements of the circuit"
            raise InputError(msg)
        want = self._mask([e, f])
        o_mask = self._mask(target)
        for d in self._cocircuit_masks:
            if d & o_mask == want:
                return self._set(d)
        msg = f"No cocircuit separates {e} and {f} in {sorted(target)}"
        raise InvariantViolationError(msg)

    def is_circuit_by_cocircuits(self, elements: Iterable[str]) -> bool:
        """Decide circuithood of a dependent set through cocircuit intersections.

        A dependent ``w`` is a circuit exactly when every pair ``e != f`` of
        ``w`` is cut out of ``w`` by some cocircuit.

        Raises:
            InputError: If ``elements`` is independent.
        """
        w = self._mask(elements)
        if self._independent_mask(w):
            msg = f"{sorted(self._set(w))} is independent"
            raise InputError(msg)
        meets = {d & w for d in self._cocircuit_masks}
        bits = [1 << i for i in range(len(self.ground)) if w >> i & 1]
        return all(a | b in meets for a, b in itertools.combinations(bits, 2))

    def sandwiched(self, family: Iterable[Iterable[str]]) -> bool:
        """True when every circuit is in ``family`` and every member is a scrawl."""
        members = {frozenset(s) for s in family}
        return set(self.circuits) <= members and all(self.is_scrawl(s) for s in members)


# ============================================================================
# Axiom validation
# ============================================================================


def _validate_circuit_axioms(
    ground: tuple[str, ...],
    family: tuple[frozenset[str], ...],
    limits: ToolkitLimits,
) -> None:
    index = {label: i for i, label in enumerate(ground)}
    masks = [sum(1 << index[x] for x in c) for c in family]

    if 0 in masks:
        msg = "(C1) fails: the empty set is listed as a circuit"
        raise AxiomViolationError(msg, axiom="(C1)", witness=(frozenset(),))

    for a, b in itertools.permutations(range(len(masks)), 2):
        if masks[a] & ~masks[b] == 0:
            msg = f"(C2) fails: {sorted(family[a])} is contained in {sorted(family[b])}"
            raise AxiomViolationError(msg, axiom="(C2)", witness=(family[a], family[b]))

    def has_circuit_within(window: int, through: int = 0) -> bool:
        return any(m & through == through and m & ~window == 0 for m in masks)

    for a, b in itertools.combinations(range(len(masks)), 2):
        shared = masks[a] & masks[b]
        for i in range(len(ground)):
            z = 1 << i
            if shared & z and not has_circuit_within((masks[a] | masks[b]) & ~z):
                msg = (
                    f"(C3) fails: no circuit inside {sorted(family[a] | family[b])} "
                    f"avoiding {ground[i]}"
                )
                raise AxiomViolationError(
                    msg, axiom="(C3)", witness=(family[a], family[b], ground[i])
                )

    if len(ground) > limits.axiom_cap:
        return
    failure = _indexed_elimination_failure(ground, masks, has_circuit_within)
    if failure is not None:
        base, others, z = failure
        witness = (_mask_to_set(ground, base), *(_mask_to_set(ground, m) for m in others), z)
        msg = f"(C3) fails for the circuit {sorted(witness[0])} at {z}"
        raise AxiomViolationError(msg, axiom="(C3)", witness=witness)


def _indexed_elimination_failure(
    ground: tuple[str, ...],
    masks: list[int],
    check: Callable[[int, int], bool],
) -> tuple[int, tuple[int, ...], str] | None:
    """Search the X-indexed elimination for ``|X| <= 2``."""
    n = len(ground)
    through = {i: [m for m in masks if m >> i & 1] for i in range(n)}
    for c in masks:
        elements = [i for i in range(n) if c >> i & 1]
        for x in elements:
            for cx in through[x]:
                for z in range(n):
                    if c >> z & 1 and not cx >> z & 1:
                        window = (c | cx) & ~(1 << x)
                        if not check(window, 1 << z):
                            return c, (cx,), ground[z]
        for x, y in itertools.combinations(elements, 2):
            for cx in (m for m in through[x] if not m >> y & 1):
                for cy in (m for m in through[y] if not m >> x & 1):
                    rest = c & ~(cx | cy)
                    for z in range(n):
                        if rest >> z & 1:
                            window = (c | cx | cy) & ~((1 << x) | (1 << y))
                            if not check(window, 1 << z):
                                return c, (cx, cy), ground[z]
    return None


# ============================================================================
# Helpers
# ============================================================================


def _mask_to_set(ground: tuple[str, ...], mask: int) -> frozenset[str]:
    return frozenset(label for i, label in enumerate(ground) if mask >> i & 1)


def _minimal_masks(masks: Iterable[int]) -> list[int]:
    ordered = sorted(set(masks), key=lambda m: (m.bit_count(), m))
    minimal: list[int] = []
    for m in ordered:
        if not any(k & ~m == 0 for k in minimal):
            minimal.append(m)
    return minimal
