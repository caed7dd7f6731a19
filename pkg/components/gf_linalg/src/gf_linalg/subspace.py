"""Subspaces of GF(p)^E in canonical reduced row-echelon form.

All elimination runs on ``numpy`` int64 arrays reduced mod p after every
operation; with p <= 251 no intermediate value comes near overflow.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np
import numpy.typing as npt

from matroid_common import InputError, sort_labels
from matroid_common.config import ToolkitLimits, resolve_limits
from matroid_common.exceptions import check_cap

from gf_linalg.field import check_characteristic
from gf_linalg.vector import Vector

if TYPE_CHECKING:
    from collections.abc import Iterable, Mapping, Sequence

logger = logging.getLogger(__name__)

IntMatrix = npt.NDArray[np.int64]


# ============================================================================
# Matrix kernels
# ============================================================================


def rref_matrix(matrix: IntMatrix, p: int) -> tuple[IntMatrix, tuple[int, ...]]:
    """Reduce ``matrix`` to reduced row-echelon form over GF(p).

    Returns:
        The nonzero rows of the reduced matrix and the tuple of pivot columns.
    """
    m = np.array(matrix, dtype=np.int64) % p
    if m.ndim != 2:  # noqa: PLR2004
        msg = "Expected a two-dimensional matrix"
        raise InputError(msg)
    rows, cols = m.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nonzero = np.nonzero(m[r:, c])[0]
        if nonzero.size == 0:
            continue
        k = r + int(nonzero[0])
        if k != r:
            m[[r, k]] = m[[k, r]]
        m[r] = (m[r] * pow(int(m[r, c]), -1, p)) % p
        for i in range(rows):
            if i != r and m[i, c]:
                m[i] = (m[i] - m[i, c] * m[r]) % p
        pivots.append(c)
        r += 1
    return m[:r], tuple(pivots)


def null_space(matrix: IntMatrix, p: int) -> IntMatrix:
    """Basis (as rows) of ``{x : matrix @ x = 0}`` over GF(p).

    Free columns get value 1 in turn; pivot coordinates are read off the
    reduced matrix.
    """
    m = np.array(matrix, dtype=np.int64)
    cols = m.shape[1]
    reduced, pivots = rref_matrix(m, p)
    pivot_set = set(pivots)
    free = [c for c in range(cols) if c not in pivot_set]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for i, f in enumerate(free):
        basis[i, f] = 1
        for row, pivot in enumerate(pivots):
            basis[i, pivot] = (-reduced[row, f]) % p
    return basis


# ============================================================================
# Subspace
# ============================================================================


@dataclass(frozen=True)
class Subspace:
    """A subspace of GF(p)^ambient.

    ``basis`` is the canonical reduced row-echelon basis with strictly
    increasing pivots in label order, so equal subspaces compare equal.
    """

    ambient: tuple[str, ...]
    p: int
    basis: tuple[Vector, ...]

    @classmethod
    def span(cls, ambient: Iterable[str], p: int, rows: Iterable[Vector]) -> Subspace:
        """The span of ``rows`` inside GF(p)^ambient."""
        labels = sort_labels(ambient)
        check_characteristic(p)
        matrix = _rows_to_matrix(labels, p, list(rows))
        return cls.from_matrix(labels, p, matrix)

    @classmethod
    def from_rows(cls, ambient: Sequence[str], p: int, rows: Iterable[Sequence[int]]) -> Subspace:
        """The span of dense rows listed in the order of ``ambient``."""
        vectors = [Vector.from_dense(ambient, p, row) for row in rows]
        return cls.span(ambient, p, vectors)

    @classmethod
    def zero(cls, ambient: Iterable[str], p: int) -> Subspace:
        """The zero subspace."""
        return cls.span(ambient, p, [])

    @classmethod
    def full(cls, ambient: Iterable[str], p: int) -> Subspace:
        """The whole space GF(p)^ambient."""
        labels = sort_labels(ambient)
        return cls.from_matrix(labels, p, np.eye(len(labels), dtype=np.int64))

    @classmethod
    def from_matrix(cls, labels: tuple[str, ...], p: int, matrix: IntMatrix) -> Subspace:
        """Row space of ``matrix`` whose columns follow the canonical ``labels``."""
        if matrix.size == 0:
            return cls(labels, p, ())
        reduced, _ = rref_matrix(matrix, p)
        basis = tuple(Vector.from_dense(labels, p, [int(x) for x in row]) for row in reduced)
        return cls(labels, p, basis)

    # ========================================================================
    # Queries
    # ========================================================================

    @property
    def dim(self) -> int:
        """Number of basis rows."""
        return len(self.basis)

    def matrix(self) -> IntMatrix:
        """Basis rows as a ``dim x |ambient|`` array."""
        if not self.basis:
            return np.zeros((0, len(self.ambient)), dtype=np.int64)
        return np.array([v.dense() for v in self.basis], dtype=np.int64)

    def enumerate_rows(self, limits: ToolkitLimits | None = None) -> IntMatrix:
        """Every vector of the subspace as a row of a ``p**dim x |ambient|`` array.

        Raises:
            ResourceCapError: If ``p**dim`` exceeds ``vector_cap``.
        """
        cap = resolve_limits(limits).vector_cap
        check_cap("vector_cap", cap, self.p**self.dim)
        coefficients = np.array(
            list(itertools.product(range(self.p), repeat=self.dim)), dtype=np.int64
        ).reshape(self.p**self.dim, self.dim)
        return (coefficients @ self.matrix()) % self.p

    def vectors(self, limits: ToolkitLimits | None = None) -> list[Vector]:
        """Every vector of the subspace, zero first."""
        return [
            Vector.from_dense(self.ambient, self.p, [int(x) for x in row])
            for row in self.enumerate_rows(limits)
        ]

    def contains(self, vector: Vector) -> bool:
        """Membership test."""
        return in_span(vector, list(self.basis), ambient=self.ambient, p=self.p).member

    # ========================================================================
    # Changing the ambient set
    # ========================================================================

    def embed(self, ambient: Iterable[str]) -> Subspace:
        """The same subspace inside a larger ambient set."""
        labels = sort_labels(ambient)
        return Subspace.span(labels, self.p, [v.embed(labels) for v in self.basis])

    def project(self, labels: Iterable[str]) -> Subspace:
        """Image under the coordinate projection onto ``labels``."""
        target = sort_labels(labels)
        return Subspace.span(target, self.p, [v.restrict(target) for v in self.basis])

    def relabel(self, mapping: Mapping[str, str]) -> Subspace:
        """Rename ambient labels injectively."""
        renamed = [mapping.get(label, label) for label in self.ambient]
        return Subspace.span(renamed, self.p, [v.relabel(mapping) for v in self.basis])


# ============================================================================
# Operations
# ============================================================================


@dataclass(frozen=True)
class SpanResult:
    """Outcome of a span-membership query.

    ``coefficients`` is set exactly when ``member`` is true and satisfies
    ``sum(c_i * x_i) == y``.
    """

    member: bool
    coefficients: tuple[int, ...] | None


def rref(
    rows: Sequence[Vector],
    *,
    ambient: Iterable[str] | None = None,
    p: int | None = None,
) -> Subspace:
    """Canonical reduced row-echelon basis of the span of ``rows``.

    Args:
        rows: Vectors over a common ambient set and field.
        ambient: Required only when ``rows`` is empty.
        p: Required only when ``rows`` is empty.

    Raises:
        InputError: On mismatched ambient sets or fields, or when an empty
            row list comes without ``ambient`` and ``p``.
    """
    if rows:
        labels, field = rows[0].ambient, rows[0].p
    elif ambient is not None and p is not None:
        labels, field = sort_labels(ambient), p
    else:
        msg = "rref of an empty row list needs an explicit ambient set and field"
        raise InputError(msg)
    return Subspace.span(labels, field, rows)


def complement(space: Subspace) -> Subspace:
    """The orthogonal complement ``{w : <w, u> = 0 for all u in space}``."""
    if space.dim == 0:
        return Subspace.full(space.ambient, space.p)
    kernel = null_space(space.matrix(), space.p)
    return Subspace.from_matrix(space.ambient, space.p, kernel)


def in_span(
    y: Vector,
    xs: Sequence[Vector],
    *,
    ambient: Iterable[str] | None = None,
    p: int | None = None,
) -> SpanResult:
    """Decide whether ``y`` lies in the span of ``xs``.

    Solves ``sum(lambda_i * x_i) = y`` by eliminating the augmented matrix
    ``[x_1 ... x_m | y]``; free coefficients are set to zero.

    Raises:
        InputError: On mismatched ambient sets or fields.
    """
    labels = y.ambient if ambient is None else sort_labels(ambient)
    field = y.p if p is None else p
    matrix = _rows_to_matrix(labels, field, [*xs, y])
    augmented = matrix.T
    reduced, pivots = rref_matrix(augmented, field)
    last = len(xs)
    if last in pivots:
        return SpanResult(member=False, coefficients=None)
    coefficients = [0] * len(xs)
    for row, pivot in enumerate(pivots):
        coefficients[pivot] = int(reduced[row, last])
    return SpanResult(member=True, coefficients=tuple(coefficients))


def sum_intersect(first: Subspace, second: Subspace, within: Iterable[str]) -> Subspace:
    """Canonical basis of ``(first + second) ∩ k^within``.

    Both subspaces must share one ambient set; the result lives in that
    ambient set with every vector supported inside ``within``.

    Raises:
        InputError: On mismatched ambient sets or fields, or labels of
            ``within`` outside the ambient set.
    """
    if first.p != second.p:
        msg = f"Field mismatch: GF({first.p}) vs GF({second.p})"
        raise InputError(msg)
    if first.ambient != second.ambient:
        msg = "sum_intersect needs both subspaces embedded in one ambient set"
        raise InputError(msg)
    keep = set(within)
    if not keep <= set(first.ambient):
        msg = f"Labels {sorted(keep - set(first.ambient))} are outside the ambient set"
        raise InputError(msg)

    total = Subspace.span(first.ambient, first.p, [*first.basis, *second.basis])
    if total.dim == 0:
        return total
    outside = [i for i, label in enumerate(total.ambient) if label not in keep]
    basis = total.matrix()
    if not outside:
        return total
    # lambda ranges over combinations of basis rows that vanish off ``within``.
    combos = null_space(basis[:, outside].T, total.p)
    logger.debug(
        "gf.sum_intersect",
        extra={"dim_sum": total.dim, "dim_result": int(combos.shape[0]), "p": total.p},
    )
    if combos.shape[0] == 0:
        return Subspace.zero(total.ambient, total.p)
    return Subspace.from_matrix(total.ambient, total.p, (combos @ basis) % total.p)


# ============================================================================
# Helpers
# ============================================================================


def _rows_to_matrix(labels: tuple[str, ...], p: int, rows: Sequence[Vector]) -> IntMatrix:
    for row in rows:
        if row.p != p:
            msg = f"Field mismatch: expected GF({p}), got GF({row.p})"
            raise InputError(msg)
        if row.ambient != labels:
            msg = "Ambient mismatch: every row must live over the same ground set"
            raise InputError(msg)
    if not rows:
        return np.zeros((0, len(labels)), dtype=np.int64)
    return np.array([row.dense() for row in rows], dtype=np.int64)
