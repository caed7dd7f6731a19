"""Trees of matroids: explicit trees, pre-circuits, representations, presentations."""

from __future__ import annotations

from matroid_trees.explicit import ExplicitTreeOfMatroids
from matroid_trees.precircuits import (
    CircuitEnumeration,
    PreCircuit,
    PrecircuitFailure,
    PrecircuitVerdict,
    enumerate_circuits,
    enumerate_precircuits,
    validate_precircuit,
)
from matroid_trees.presentation import (
    NodeOrigin,
    Transition,
    TransitionKey,
    TreePresentation,
    Unfolding,
    state_names,
)
from matroid_trees.representation import (
    PsiVector,
    TreeRepresentation,
    delta_glue,
    hat_pairing,
    psi_vector_failures,
    psi_vector_space,
    psi_vectors,
    representation_of,
    split_psi_vector,
)

__all__ = [
    "CircuitEnumeration",
    "ExplicitTreeOfMatroids",
    "NodeOrigin",
    "PreCircuit",
    "PrecircuitFailure",
    "PrecircuitVerdict",
    "PsiVector",
    "Transition",
    "TransitionKey",
    "TreePresentation",
    "TreeRepresentation",
    "Unfolding",
    "delta_glue",
    "enumerate_circuits",
    "enumerate_precircuits",
    "hat_pairing",
    "psi_vector_failures",
    "psi_vector_space",
    "psi_vectors",
    "representation_of",
    "split_psi_vector",
    "state_names",
    "validate_precircuit",
]
