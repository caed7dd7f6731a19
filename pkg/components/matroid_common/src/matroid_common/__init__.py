"""Shared plumbing for the matroid toolkit: errors, limits, telemetry, ordering."""

from __future__ import annotations

from matroid_common.config import ToolkitLimits
from matroid_common.exceptions import (
    AxiomViolationError,
    FormatError,
    InputError,
    InvariantViolationError,
    MatroidToolkitError,
    ResourceCapError,
)
from matroid_common.ordering import canonical_sets, format_set, lex_key, sort_labels

__all__ = [
    "AxiomViolationError",
    "FormatError",
    "InputError",
    "InvariantViolationError",
    "MatroidToolkitError",
    "ResourceCapError",
    "ToolkitLimits",
    "canonical_sets",
    "format_set",
    "lex_key",
    "sort_labels",
]
