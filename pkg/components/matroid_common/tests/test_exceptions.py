"""Unit tests for the shared exception hierarchy and ordering helpers."""

from __future__ import annotations

import pytest

from matroid_common import (
    AxiomViolationError,
    FormatError,
    InputError,
    InvariantViolationError,
    MatroidToolkitError,
    ResourceCapError,
    canonical_sets,
    format_set,
)
from matroid_common.exceptions import check_cap

pytestmark = pytest.mark.unit


@pytest.mark.parametrize(
    ("error", "code"),
    [
        (AxiomViolationError("bad", axiom="(O1)"), 1),
        (InputError("bad"), 2),
        (FormatError("bad", source="x", line=1), 2),
        (ResourceCapError(cap_name="axiom_cap", limit=1, requested=2), 3),
        (InvariantViolationError("bad"), 4),
    ],
)
def test_exit_codes_follow_the_cli_table(error: MatroidToolkitError, code: int) -> None:
    """Every error class maps to its documented exit status."""
    assert error.exit_code == code
    assert isinstance(error, MatroidToolkitError)


def test_format_error_renders_location() -> None:
    """Parse errors lead with source, line and column."""
    error = FormatError("expected 'ground:'", source="k4.matroid", line=3, column=5)

    assert str(error) == "k4.matroid:3:5: expected 'ground:'"
    assert error.reason == "expected 'ground:'"


def test_axiom_violation_keeps_witness() -> None:
    """The witness travels with the error for replay."""
    witness = (frozenset({"a"}), frozenset({"a", "b"}))
    error = AxiomViolationError("containment", axiom="(C2)", witness=witness)

    assert error.axiom == "(C2)"
    assert error.witness == witness


def test_check_cap_raises_only_above_limit() -> None:
    """Reaching the cap exactly is allowed; exceeding it is not."""
    check_cap("vector_cap", 8, 8)
    with pytest.raises(ResourceCapError, match="vector_cap exceeded: requested 9, limit 8"):
        check_cap("vector_cap", 8, 9)


def test_canonical_sets_orders_by_size_then_labels() -> None:
    """Families are deduplicated and sorted size-first."""
    family = [{"b", "c"}, {"a"}, {"c", "a"}, {"a"}]

    assert canonical_sets(family) == (
        frozenset({"a"}),
        frozenset({"a", "c"}),
        frozenset({"b", "c"}),
    )
    assert format_set({"c", "a"}) == "{a, c}"
