"""Unit tests for tree representations, Ψ-vectors, the △-glue and the hat pairing."""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gf_linalg import Subspace, Vector, complement
from matroid_common import InputError
from matroid_kernel import Matroid
from matroid_trees import (
    ExplicitTreeOfMatroids,
    PsiVector,
    delta_glue,
    hat_pairing,
    psi_vector_failures,
    psi_vectors,
    representation_of,
)

TRIANGLES = ExplicitTreeOfMatroids.build(
    {"A": Matroid.uniform(2, "abx"), "B": Matroid.uniform(2, "cdx")}
)
V_A = Subspace.from_rows(("a", "b", "x"), 3, [[1, 1, 1]])
V_B = Subspace.from_rows(("c", "d", "x"), 3, [[1, 1, 2]])
REP = representation_of(TRIANGLES, {"A": V_A, "B": V_B})


def _vector(ambient: str, p: int, values: list[int]) -> Vector:
    return Vector.from_dense(tuple(ambient), p, values)


# ============================================================================
# Representations
# ============================================================================


@pytest.mark.unit
def test_representation_must_match_each_node() -> None:
    """A subspace representing another matroid is rejected."""
    wrong = Subspace.from_rows(("c", "d", "x"), 3, [[1, 0, 0], [0, 1, 1]])
    with pytest.raises(InputError, match="different matroid"):
        representation_of(TRIANGLES, {"A": V_A, "B": wrong})


@pytest.mark.unit
def test_representation_needs_every_node_and_one_field() -> None:
    """Missing nodes and mixed characteristics are input errors."""
    with pytest.raises(InputError, match="disagree on the nodes"):
        representation_of(TRIANGLES, {"A": V_A})
    binary = Subspace.from_rows(("c", "d", "x"), 2, [[1, 1, 1]])
    with pytest.raises(InputError, match="Field mismatch"):
        representation_of(TRIANGLES, {"A": V_A, "B": binary})


@pytest.mark.unit
def test_dual_representation_represents_the_dual_tree() -> None:
    """Orthogonal complements represent the node-wise duals."""
    assert REP.dual().matroids() == TRIANGLES.dual().matroids


# ============================================================================
# Psi-vectors
# ============================================================================


@pytest.mark.unit
def test_psi_vectors_of_glued_triangles() -> None:
    """Interface agreement forces the scalar on ``B`` once ``A`` is chosen."""
    found = psi_vectors(TRIANGLES, REP)

    assert len(found) == 3
    assert found[0].is_zero()
    for psi in found[1:]:
        assert not psi_vector_failures(TRIANGLES, REP, psi)
        assert psi.support(TRIANGLES) == frozenset("abcd")


@pytest.mark.unit
def test_disagreeing_family_is_reported() -> None:
    """Vectors of the right spaces that differ on the interface fail."""
    psi = PsiVector(
        {"A": _vector("abx", 3, [1, 1, 1]), "B": _vector("cdx", 3, [1, 1, 2])}
    )

    (failure,) = psi_vector_failures(TRIANGLES, REP, psi)
    assert failure.startswith("A-B")


@pytest.mark.unit
def test_missing_and_foreign_vectors_are_reported() -> None:
    """Each node needs a vector of its own subspace."""
    psi = PsiVector({"A": _vector("abx", 3, [1, 0, 0])})

    failures = psi_vector_failures(TRIANGLES, REP, psi)
    assert "B: no vector" in failures
    assert any(f.startswith("A:") for f in failures)


# ============================================================================
# Hat pairing
# ============================================================================


@pytest.mark.unit
def test_hat_pairing_vanishes() -> None:
    """A Ψ-vector of ``V`` pairs to zero with one of ``V^⊥``."""
    v = PsiVector({"A": _vector("abx", 3, [1, 1, 1]), "B": _vector("cdx", 3, [2, 2, 1])})
    w = PsiVector({"A": _vector("abx", 3, [1, 0, 2]), "B": _vector("cdx", 3, [2, 0, 2])})

    assert hat_pairing(TRIANGLES, REP, v, w) == 0
    assert hat_pairing(TRIANGLES, REP, v, w, base="B") == 0


@pytest.mark.unit
def test_hat_pairing_over_every_pair() -> None:
    """The pairing vanishes for all Ψ-vectors of ``V`` and ``V^⊥``."""
    dual = REP.dual()
    for v in psi_vectors(TRIANGLES, REP):
        for w in psi_vectors(TRIANGLES, dual):
            assert hat_pairing(TRIANGLES, REP, v, w) == 0


@pytest.mark.unit
def test_hat_pairing_rejects_non_psi_vectors() -> None:
    """Both arguments are validated before pairing."""
    v = PsiVector({"A": _vector("abx", 3, [1, 1, 1]), "B": _vector("cdx", 3, [2, 2, 1])})
    w = PsiVector({"A": _vector("abx", 3, [1, 0, 0]), "B": _vector("cdx", 3, [2, 0, 2])})
    with pytest.raises(InputError, match="w is not a Ψ-vector"):
        hat_pairing(TRIANGLES, REP, v, w)


# ============================================================================
# Delta glue
# ============================================================================


@pytest.mark.unit
def test_glued_triangles_over_gf2() -> None:
    """``span{abx} △ span{cdx}`` is ``span{abcd}``."""
    glued = delta_glue(
        Subspace.from_rows(("a", "b", "x"), 2, [[1, 1, 1]]),
        Subspace.from_rows(("c", "d", "x"), 2, [[1, 1, 1]]),
    )

    assert glued.ambient == ("a", "b", "c", "d")
    assert glued.dim == 1
    assert Matroid.from_representation(glued) == Matroid.uniform(3, "abcd")


@pytest.mark.unit
def test_glue_across_a_loop_interface_is_degenerate() -> None:
    """A subspace vanishing on the interface glues as a direct sum."""
    glued = delta_glue(
        Subspace.from_rows(("a", "x"), 2, [[1, 0]]),
        Subspace.from_rows(("c", "x"), 2, [[0, 1]]),
    )

    assert glued.ambient == ("a", "c")
    assert glued.dim == 1
    assert glued.contains(_vector("ac", 2, [1, 0]))


@pytest.mark.unit
def test_glue_rejects_mixed_fields() -> None:
    """Both subspaces must live over one field."""
    with pytest.raises(InputError, match="Field mismatch"):
        delta_glue(V_A, Subspace.from_rows(("c", "x"), 2, [[1, 1]]))


@st.composite
def _interface_pairs(draw: st.DrawFn) -> tuple[Subspace, Subspace]:
    p = draw(st.sampled_from([2, 3]))
    left, right = ("a", "b", "x", "y"), ("c", "d", "x", "y")
    row = st.lists(st.integers(0, p - 1), min_size=4, max_size=4)
    first = Subspace.from_rows(left, p, draw(st.lists(row, max_size=3)))
    second = Subspace.from_rows(right, p, draw(st.lists(row, max_size=3)))
    return first, second


@pytest.mark.unit
@settings(max_examples=60, deadline=None)
@given(pair=_interface_pairs())
def test_glue_commutes_with_duality_on_supports(pair: tuple[Subspace, Subspace]) -> None:
    """``U1^⊥ △ U2^⊥`` and ``(U1 △ U2)^⊥`` have the same matroid."""
    first, second = pair
    glued_duals = delta_glue(complement(first), complement(second))
    dual_of_glue = complement(delta_glue(first, second))

    assert Matroid.from_representation(glued_duals) == Matroid.from_representation(dual_of_glue)


@pytest.mark.unit
def test_representation_carries_over_to_a_relabelled_copy() -> None:
    """``restricted_to`` renames each subspace by the node's label map."""
    copy = ExplicitTreeOfMatroids.build(
        {"A": Matroid.uniform(2, "abx"), "B2": Matroid.uniform(2, "pqx")}
    )
    carried = REP.restricted_to(
        copy, {"A": ("A", {}), "B2": ("B", {"c": "p", "d": "q"})}
    )

    assert carried.space("B2").ambient == ("p", "q", "x")
    assert carried.matroids() == copy.matroids
