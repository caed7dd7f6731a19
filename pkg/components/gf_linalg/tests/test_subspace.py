"""Unit and property tests for subspaces, complements and span membership."""

from __future__ import annotations

import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gf_linalg import (
    Subspace,
    Vector,
    complement,
    in_span,
    null_space,
    rref,
    sum_intersect,
)
from matroid_common import InputError, ResourceCapError, ToolkitLimits

ABC = ("a", "b", "c")


def _vec(p: int, *values: int, labels: tuple[str, ...] = ABC) -> Vector:
    return Vector.from_dense(labels, p, values)


@st.composite
def subspaces(draw: st.DrawFn, *, max_dim: int = 6) -> Subspace:
    """A random subspace of GF(2)^n or GF(3)^n with n <= ``max_dim``."""
    p = draw(st.sampled_from([2, 3]))
    n = draw(st.integers(min_value=1, max_value=max_dim))
    labels = [f"e{i}" for i in range(n)]
    rows = draw(
        st.lists(st.lists(st.integers(0, p - 1), min_size=n, max_size=n), max_size=n)
    )
    return Subspace.from_rows(labels, p, rows)


# ============================================================================
# rref
# ============================================================================


@pytest.mark.unit
def test_rref_of_identity_is_identity() -> None:
    """The identity rows are already canonical."""
    rows = [_vec(2, 1, 0, 0), _vec(2, 0, 1, 0), _vec(2, 0, 0, 1)]

    assert list(rref(rows).basis) == rows


@pytest.mark.unit
def test_rref_reduces_above_pivots() -> None:
    """{(1,1,0),(0,1,1)} over GF(2) reduces to {(1,0,1),(0,1,1)}."""
    space = rref([_vec(2, 1, 1, 0), _vec(2, 0, 1, 1)])

    assert [v.dense() for v in space.basis] == [(1, 0, 1), (0, 1, 1)]
    assert space.dim == 2


@pytest.mark.unit
def test_rref_of_zero_row_is_empty() -> None:
    """Zero rows contribute nothing."""
    assert rref([_vec(2, 0, 0, 0)]).dim == 0


@pytest.mark.unit
def test_rref_rejects_mixed_fields() -> None:
    """Rows must share a field."""
    with pytest.raises(InputError, match="Field mismatch"):
        rref([_vec(2, 1, 0, 0), _vec(3, 1, 0, 0)])


@pytest.mark.unit
def test_rref_of_empty_list_needs_context() -> None:
    """An empty row list has no ambient set of its own."""
    with pytest.raises(InputError, match="explicit ambient"):
        rref([])
    assert rref([], ambient=ABC, p=5).dim == 0


@pytest.mark.unit
def test_canonical_form_is_independent_of_generators() -> None:
    """Two generator lists of one subspace give identical bases."""
    first = Subspace.from_rows(ABC, 3, [(1, 1, 0), (0, 1, 1)])
    second = Subspace.from_rows(ABC, 3, [(1, 2, 1), (2, 0, 1)])

    assert first == second


# ============================================================================
# complement
# ============================================================================


@pytest.mark.unit
def test_complement_matches_brute_force() -> None:
    """The complement of span{(1,1,0),(0,1,1)} in GF(2)^3 is span{(1,1,1)}."""
    space = Subspace.from_rows(ABC, 2, [(1, 1, 0), (0, 1, 1)])
    expected = [
        w
        for w in itertools.product(range(2), repeat=3)
        if all(sum(a * b for a, b in zip(w, u.dense(), strict=True)) % 2 == 0 for u in space.basis)
    ]

    result = complement(space)

    assert [v.dense() for v in result.basis] == [(1, 1, 1)]
    assert sorted(v.dense() for v in result.vectors()) == sorted(expected)


@pytest.mark.unit
def test_complement_of_full_and_zero() -> None:
    """Full and zero subspaces are complements of each other."""
    assert complement(Subspace.full(ABC, 2)).dim == 0
    assert complement(Subspace.zero(["x", "y"], 3)) == Subspace.full(["x", "y"], 3)


@pytest.mark.unit
@given(space=subspaces())
@settings(max_examples=200, deadline=None)
def test_complement_is_an_involution(space: Subspace) -> None:
    """complement(complement(U)) == U in canonical form, with complementary dimensions."""
    perp = complement(space)

    assert space.dim + perp.dim == len(space.ambient)
    assert complement(perp) == space


# ============================================================================
# in_span
# ============================================================================


@pytest.mark.unit
def test_in_span_returns_coefficients() -> None:
    """(1,0,1) = (1,1,0) + (0,1,1) over GF(2)."""
    result = in_span(_vec(2, 1, 0, 1), [_vec(2, 1, 1, 0), _vec(2, 0, 1, 1)])

    assert result.member
    assert result.coefficients == (1, 1)


@pytest.mark.unit
def test_in_span_rejects_non_members() -> None:
    """(1,1,1) is not a combination of (1,1,0) and (0,1,1) over GF(2)."""
    result = in_span(_vec(2, 1, 1, 1), [_vec(2, 1, 1, 0), _vec(2, 0, 1, 1)])

    assert not result.member
    assert result.coefficients is None


@pytest.mark.unit
def test_zero_is_always_in_span() -> None:
    """The zero vector lies in every span, including the empty one."""
    assert in_span(_vec(5, 0, 0, 0), []).coefficients == ()
    assert in_span(_vec(5, 0, 0, 0), [_vec(5, 1, 2, 3)]).coefficients == (0,)


@pytest.mark.unit
@given(space=subspaces(), data=st.data())
@settings(max_examples=200, deadline=None)
def test_span_membership_matches_complement_inclusion(space: Subspace, data: st.DataObject) -> None:
    """y is in span X exactly when adding y does not shrink the complement."""
    values = data.draw(
        st.lists(
            st.integers(0, space.p - 1),
            min_size=len(space.ambient),
            max_size=len(space.ambient),
        )
    )
    y = Vector.from_dense(space.ambient, space.p, values)
    xs = list(space.basis)

    result = in_span(y, xs)
    wider = complement(Subspace.span(space.ambient, space.p, [*xs, y]))
    same_complement = all(wider.contains(w) for w in complement(space).basis)

    assert result.member == same_complement
    if result.coefficients is not None:
        total = Vector.zero(space.ambient, space.p)
        for c, x in zip(result.coefficients, xs, strict=True):
            total = total + x.scale(c)
        assert total == y


# ============================================================================
# sum_intersect
# ============================================================================

AMBIENT = ("a", "b", "c", "d", "e")


@pytest.mark.unit
def test_sum_intersect_glues_two_triangles() -> None:
    """span{e+a+b} + span{e+c+d} meets k^{a,b,c,d} in span{a+b+c+d}."""
    first = Subspace.span(AMBIENT, 2, [Vector.from_mapping(AMBIENT, 2, {"e": 1, "a": 1, "b": 1})])
    second = Subspace.span(AMBIENT, 2, [Vector.from_mapping(AMBIENT, 2, {"e": 1, "c": 1, "d": 1})])

    result = sum_intersect(first, second, {"a", "b", "c", "d"})

    assert result.dim == 1
    assert result.basis[0].support == frozenset({"a", "b", "c", "d"})


@pytest.mark.unit
def test_sum_intersect_with_full_window_is_the_sum() -> None:
    """Intersecting with the whole ambient set leaves U1 + U2."""
    first = Subspace.from_rows(ABC, 3, [(1, 0, 2)])
    second = Subspace.from_rows(ABC, 3, [(0, 1, 1)])

    assert sum_intersect(first, second, ABC) == Subspace.from_rows(ABC, 3, [(1, 0, 2), (0, 1, 1)])


@pytest.mark.unit
def test_sum_intersect_with_zero_second_space() -> None:
    """With U2 = 0 the result is U1 restricted to vectors supported in S."""
    first = Subspace.from_rows(ABC, 2, [(1, 1, 0), (0, 1, 1)])

    result = sum_intersect(first, Subspace.zero(ABC, 2), {"a", "c"})

    assert [v.dense() for v in result.basis] == [(1, 0, 1)]


@pytest.mark.unit
def test_sum_intersect_rejects_labels_outside_ambient() -> None:
    """S must live inside the ambient set."""
    space = Subspace.zero(ABC, 2)
    with pytest.raises(InputError, match="outside the ambient set"):
        sum_intersect(space, space, {"z"})


@pytest.mark.unit
@given(first=subspaces(max_dim=5), data=st.data())
@settings(max_examples=150, deadline=None)
def test_sum_intersect_basis_is_witnessed(first: Subspace, data: st.DataObject) -> None:
    """Every result vector lies in U1 + U2 and is supported inside S."""
    n = len(first.ambient)
    rows = data.draw(
        st.lists(st.lists(st.integers(0, first.p - 1), min_size=n, max_size=n), max_size=n)
    )
    second = Subspace.from_rows(first.ambient, first.p, rows)
    window = set(data.draw(st.sets(st.sampled_from(first.ambient))))
    total = Subspace.span(first.ambient, first.p, [*first.basis, *second.basis])

    result = sum_intersect(first, second, window)

    for v in result.basis:
        assert v.support <= window
        assert total.contains(v)
    brute = {v for v in total.vectors() if v.support <= window}
    assert set(result.vectors()) == brute


# ============================================================================
# Kernels and caps
# ============================================================================


@pytest.mark.unit
def test_null_space_rows_are_annihilated() -> None:
    """matrix @ row == 0 for every null-space row."""
    matrix = np.array([[1, 2, 0, 1], [0, 1, 1, 2]], dtype=np.int64)

    kernel = null_space(matrix, 3)

    assert kernel.shape == (2, 4)
    assert not ((matrix @ kernel.T) % 3).any()


@pytest.mark.unit
def test_vector_enumeration_is_capped() -> None:
    """Enumerating 2^3 vectors under a cap of 4 is refused."""
    limits = ToolkitLimits.from_env(vector_cap=4)
    with pytest.raises(ResourceCapError, match="vector_cap"):
        Subspace.full(ABC, 2).vectors(limits)


@pytest.mark.unit
def test_zero_subspace_enumerates_the_zero_vector() -> None:
    """A zero-dimensional subspace holds exactly one vector."""
    assert Subspace.zero(ABC, 3).vectors() == [Vector.zero(ABC, 3)]


@pytest.mark.unit
def test_project_embed_and_relabel() -> None:
    """Ambient changes act row by row."""
    space = Subspace.from_rows(ABC, 2, [(1, 1, 0)])

    assert space.project(["a"]) == Subspace.full(["a"], 2)
    assert space.embed(["a", "b", "c", "d"]).dim == 1
    assert space.relabel({"c": "z"}).ambient == ("a", "b", "z")
