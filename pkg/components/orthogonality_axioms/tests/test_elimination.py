"""Unit tests for circuit elimination and its (O2) counterpart."""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from matroid_kernel import Matroid
from orthogonality_axioms import (
    check_o2_via_elimination,
    circuit_elimination_failures,
    orthogonal_family,
)


@pytest.mark.unit
def test_u23_circuits_eliminate_and_satisfy_o2() -> None:
    """Both sides hold for a matroid's circuits."""
    verdict = check_o2_via_elimination("abc", Matroid.uniform(2, "abc").circuits)

    assert verdict.o2_holds
    assert verdict.elimination_holds
    assert verdict.agree


@pytest.mark.unit
def test_overlapping_pairs_fail_both_sides() -> None:
    """{{a,b},{b,c}} cannot eliminate b; (O2) fails against its orthogonal family."""
    verdict = check_o2_via_elimination("abc", [{"a", "b"}, {"b", "c"}])

    assert not verdict.o2_holds
    assert not verdict.elimination_holds


@pytest.mark.unit
def test_empty_family_on_empty_ground_holds_vacuously() -> None:
    """Nothing to check on the empty set."""
    verdict = check_o2_via_elimination([], [])

    assert verdict.o2_holds
    assert verdict.elimination_holds


@pytest.mark.unit
def test_failures_name_a_concrete_counterexample() -> None:
    """The counterexample eliminates b from {a,b} using {b,c} and strands a."""
    failures = circuit_elimination_failures("abc", [{"a", "b"}, {"b", "c"}])

    assert failures
    first = failures[0]
    assert first.circuit == frozenset("ab")
    assert first.eliminated == frozenset("b")
    assert first.family == (frozenset("bc"),)
    assert first.z == "a"


@pytest.mark.unit
def test_orthogonal_family_of_overlapping_pairs() -> None:
    """Only the empty set and the whole set meet both pairs evenly."""
    assert orthogonal_family("abc", [{"a", "b"}, {"b", "c"}]) == (frozenset(), frozenset("abc"))


@pytest.mark.unit
@given(data=st.data())
@settings(max_examples=200, deadline=None)
def test_o2_and_elimination_always_agree(data: st.DataObject) -> None:
    """The two verdicts coincide on random families over at most 5 elements."""
    n = data.draw(st.integers(min_value=0, max_value=5))
    ground = [f"e{i}" for i in range(n)]
    family = (
        data.draw(st.lists(st.frozensets(st.sampled_from(ground), min_size=1), max_size=5))
        if ground
        else []
    )

    assert check_o2_via_elimination(ground, family).agree
