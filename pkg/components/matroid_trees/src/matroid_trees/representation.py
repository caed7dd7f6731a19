"""k-representations of trees of matroids, Ψ-vectors and the △-glue.

A representation assigns to every node (or presentation state) a subspace
``V(t)`` of ``k^E(t)`` whose matroid is ``M(t)``. A Ψ-vector picks one vector
of each ``V(t)`` so that neighbours agree on their shared labels.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import TYPE_CHECKING

import networkx as nx
import numpy as np

from gf_linalg import Subspace, Vector, complement, null_space, sum_intersect
from matroid_common import InputError, format_set, sort_labels
from matroid_kernel import Matroid

if TYPE_CHECKING:
    from collections.abc import Mapping

    from matroid_common.config import ToolkitLimits

    from matroid_trees.explicit import ExplicitTreeOfMatroids

logger = logging.getLogger(__name__)

_SEPARATOR = "|"


# ============================================================================
# Representations
# ============================================================================


@dataclass(frozen=True)
class TreeRepresentation:
    """A subspace ``V(t)`` for every node or presentation state.

    Attributes:
        p: The field characteristic shared by every subspace.
        spaces: ``V(t)`` keyed like the matroids it represents.
    """

    p: int
    spaces: Mapping[str, Subspace] = field(repr=False)

    @classmethod
    def build(
        cls,
        matroids: Mapping[str, Matroid],
        spaces: Mapping[str, Subspace],
        *,
        limits: ToolkitLimits | None = None,
    ) -> TreeRepresentation:
        """Check that each subspace represents its matroid.

        Raises:
            InputError: If keys differ, the fields differ, an ambient set is
                not the matroid's ground set, or a subspace represents a
                different matroid.
        """
        if set(matroids) != set(spaces):
            missing = sorted(set(matroids) ^ set(spaces))
            msg = f"Representation and matroids disagree on the nodes {missing}"
            raise InputError(msg)
        fields_used = {space.p for space in spaces.values()}
        if len(fields_used) > 1:
            msg = f"Field mismatch: subspaces over GF({sorted(fields_used)})"
            raise InputError(msg)
        for key in sort_labels(spaces):
            space, matroid = spaces[key], matroids[key]
            if space.ambient != matroid.ground:
                msg = (
                    f"V({key}) lives over {format_set(space.ambient)}, "
                    f"not {format_set(matroid.ground)}"
                )
                raise InputError(msg)
            if Matroid.from_representation(space, limits=limits) != matroid:
                msg = f"V({key}) represents a different matroid than M({key})"
                raise InputError(msg)
        p = fields_used.pop() if fields_used else 2
        return cls(p, dict(spaces))

    def space(self, key: str) -> Subspace:
        """``V(key)``."""
        if key not in self.spaces:
            msg = f"No subspace for '{key}'"
            raise InputError(msg)
        return self.spaces[key]

    def dual(self) -> TreeRepresentation:
        """``V^⊥``: node-wise orthogonal complements, representing the dual tree."""
        return TreeRepresentation(self.p, {k: complement(s) for k, s in self.spaces.items()})

    def matroids(self, *, limits: ToolkitLimits | None = None) -> dict[str, Matroid]:
        """The represented matroid of every subspace."""
        return {k: Matroid.from_representation(s, limits=limits) for k, s in self.spaces.items()}

    def restricted_to(
        self, tree: ExplicitTreeOfMatroids, origins: Mapping[str, tuple[str, Mapping[str, str]]]
    ) -> TreeRepresentation:
        """Carry the representation over to an unfolded tree.

        Args:
            tree: The unfolded tree.
            origins: For each node of ``tree``, the key it was copied from and
                the renaming of that key's labels.
        """
        return TreeRepresentation(
            self.p,
            {node: self.space(origins[node][0]).relabel(origins[node][1]) for node in tree.nodes},
        )


# ============================================================================
# Psi-vectors
# ============================================================================


@dataclass(frozen=True)
class PsiVector:
    """One vector ``v(t)`` per node.

    Attributes:
        vectors: ``v(t)`` keyed by node.
        depth: Materialization depth for vectors read off a strategy; ``None``
            when the family covers a whole finite tree.
    """

    vectors: Mapping[str, Vector]
    depth: int | None = None

    def support(self, tree: ExplicitTreeOfMatroids) -> frozenset[str]:
        """``E ∩ ⋃ supp v(t)``."""
        used: set[str] = set()
        for vector in self.vectors.values():
            used |= vector.support
        return frozenset(used) & tree.ground

    def is_zero(self) -> bool:
        """Every ``v(t)`` is zero."""
        return all(v.is_zero for v in self.vectors.values())


def psi_vector_failures(
    tree: ExplicitTreeOfMatroids, rep: TreeRepresentation, vector: PsiVector
) -> tuple[str, ...]:
    """Every violated condition of a candidate Ψ-vector, as messages.

    Checks that each node has a vector of ``V(t)`` and that adjacent nodes
    agree on their interface. Nodes absent from ``vector`` fail.
    """
    failures: list[str] = []
    for node in tree.nodes:
        v = vector.vectors.get(node)
        if v is None:
            failures.append(f"{node}: no vector")
        elif not rep.space(node).contains(v):
            failures.append(f"{node}: {v} is not in V({node})")
    for u, w in tree.edges:
        if u not in vector.vectors or w not in vector.vectors:
            continue
        shared = tree.interface(u, w)
        left, right = vector.vectors[u].restrict(shared), vector.vectors[w].restrict(shared)
        if left != right:
            failures.append(f"{u}-{w}: {left} != {right} on {format_set(shared)}")
    return tuple(failures)


def _coordinate(node: str, label: str) -> str:
    return f"{node}{_SEPARATOR}{label}"


def psi_vector_space(tree: ExplicitTreeOfMatroids, rep: TreeRepresentation) -> Subspace:
    """All interface-agreeing families as one subspace.

    Coordinates are ``node|label``. The result is the kernel of the agreement
    constraints restricted to the direct sum of the ``V(t)``.
    """
    coordinates = sort_labels(
        _coordinate(node, x) for node in tree.nodes for x in rep.space(node).ambient
    )
    column = {c: i for i, c in enumerate(coordinates)}
    rows: list[list[int]] = []
    for node in tree.nodes:
        for b in rep.space(node).basis:
            row = [0] * len(coordinates)
            for label, value in b.entries:
                row[column[_coordinate(node, label)]] = value
            rows.append(row)
    if not rows:
        return Subspace.zero(coordinates, rep.p)
    basis = np.array(rows, dtype=np.int64)
    constraints: list[list[int]] = []
    for u, w in tree.edges:
        for x in sorted(tree.interface(u, w)):
            constraint = [0] * len(coordinates)
            constraint[column[_coordinate(u, x)]] = 1
            constraint[column[_coordinate(w, x)]] = rep.p - 1
            constraints.append(constraint)
    if not constraints:
        return Subspace.from_matrix(coordinates, rep.p, basis)
    evaluated = (basis @ np.array(constraints, dtype=np.int64).T) % rep.p
    combos = null_space(evaluated.T, rep.p)
    logger.debug(
        "trees.psi_vector_space",
        extra={"coordinates": len(coordinates), "dim": int(combos.shape[0])},
    )
    if combos.shape[0] == 0:
        return Subspace.zero(coordinates, rep.p)
    return Subspace.from_matrix(coordinates, rep.p, (combos @ basis) % rep.p)


def split_psi_vector(
    tree: ExplicitTreeOfMatroids, rep: TreeRepresentation, flat: Vector
) -> PsiVector:
    """Cut a vector of :func:`psi_vector_space` back into per-node vectors."""
    values = flat.as_mapping()
    return PsiVector(
        {
            node: Vector.from_mapping(
                rep.space(node).ambient,
                rep.p,
                {x: values.get(_coordinate(node, x), 0) for x in rep.space(node).ambient},
            )
            for node in tree.nodes
        }
    )


def psi_vectors(
    tree: ExplicitTreeOfMatroids,
    rep: TreeRepresentation,
    *,
    limits: ToolkitLimits | None = None,
) -> list[PsiVector]:
    """Every Ψ-vector of a finite tree, zero first.

    Raises:
        ResourceCapError: If there are more than ``vector_cap`` of them.
    """
    space = psi_vector_space(tree, rep)
    return [split_psi_vector(tree, rep, flat) for flat in space.vectors(limits)]


# ============================================================================
# Gluing and pairing
# ============================================================================


def delta_glue(first: Subspace, second: Subspace) -> Subspace:
    """``U1 △ U2 = (U1 + U2) ∩ k^(E1 △ E2)``, living over ``E1 △ E2``.

    Raises:
        InputError: If the two subspaces are over different fields.
    """
    if first.p != second.p:
        msg = f"Field mismatch: GF({first.p}) vs GF({second.p})"
        raise InputError(msg)
    union = sort_labels([*first.ambient, *second.ambient])
    outer = set(first.ambient) ^ set(second.ambient)
    glued = sum_intersect(first.embed(union), second.embed(union), outer)
    return glued.project(outer)


def hat_pairing(
    tree: ExplicitTreeOfMatroids,
    rep: TreeRepresentation,
    v: PsiVector,
    w: PsiVector,
    *,
    base: str | None = None,
) -> int:
    """``Σ_{e ∈ E} v̂(e) ŵ(e)`` where ``ŵ`` carries the sign ``(-1)^d(t)``.

    ``d(t)`` is the tree distance from ``base`` (the root by default). For a
    Ψ-vector of ``V`` and one of ``V^⊥`` the sum vanishes.

    Raises:
        InputError: If ``v`` is not a Ψ-vector of ``rep``, ``w`` is not one of
            ``rep.dual()``, or either is nonzero on a boundary label of a
            truncation.
    """
    for name, candidate, space in (("v", v, rep), ("w", w, rep.dual())):
        failures = psi_vector_failures(tree, space, candidate)
        if failures:
            msg = f"{name} is not a Ψ-vector: {failures[0]}"
            raise InputError(msg)
        if any(candidate.vectors[tree.node_of(x)][x] for x in tree.boundary):
            msg = f"{name} is nonzero on the truncation boundary; the pairing is undefined"
            raise InputError(msg)
    origin = tree.root if base is None else base
    distance = tree.depths if origin == tree.root else _distances(tree, origin)
    total = 0
    for e in tree.ground:
        node = tree.node_of(e)
        sign = -1 if distance[node] % 2 else 1
        total += v.vectors[node][e] * w.vectors[node][e] * sign
    return total % rep.p


def _distances(tree: ExplicitTreeOfMatroids, origin: str) -> dict[str, int]:
    if origin not in tree.nodes:
        msg = f"Unknown node '{origin}'"
        raise InputError(msg)
    return dict(nx.single_source_shortest_path_length(tree.graph, origin))


def representation_of(
    tree: ExplicitTreeOfMatroids,
    spaces: Mapping[str, Subspace],
    *,
    limits: ToolkitLimits | None = None,
) -> TreeRepresentation:
    """Validate a representation of an explicit tree."""
    return TreeRepresentation.build(tree.matroids, dict(spaces), limits=limits)
