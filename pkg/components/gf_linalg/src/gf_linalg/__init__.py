"""Exact linear algebra over prime fields GF(p)."""

from __future__ import annotations

from gf_linalg.field import MAX_CHARACTERISTIC, FieldElement, check_characteristic, is_prime
from gf_linalg.subspace import (
    SpanResult,
    Subspace,
    complement,
    in_span,
    null_space,
    rref,
    rref_matrix,
    sum_intersect,
)
from gf_linalg.vector import Vector

__all__ = [
    "MAX_CHARACTERISTIC",
    "FieldElement",
    "SpanResult",
    "Subspace",
    "Vector",
    "check_characteristic",
    "complement",
    "in_span",
    "is_prime",
    "null_space",
    "rref",
    "rref_matrix",
    "sum_intersect",
]
