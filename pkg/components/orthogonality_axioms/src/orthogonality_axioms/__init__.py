"""Orthogonality axioms: checking, reconstruction and base extension."""

from __future__ import annotations

from orthogonality_axioms.checker import check_axioms, holds_o2, replay
from orthogonality_axioms.elimination import (
    EliminationFailure,
    check_o2_via_elimination,
    circuit_elimination_failures,
    orthogonal_family,
)
from orthogonality_axioms.models import (
    AXIOMS,
    AxiomReport,
    AxiomVerdict,
    EliminationAgreement,
    SetSystemPair,
)
from orthogonality_axioms.reconstruction import (
    BasePartition,
    base_extend,
    minimal_members,
    reconstruct,
)

__all__ = [
    "AXIOMS",
    "AxiomReport",
    "AxiomVerdict",
    "BasePartition",
    "EliminationAgreement",
    "EliminationFailure",
    "SetSystemPair",
    "base_extend",
    "check_axioms",
    "check_o2_via_elimination",
    "circuit_elimination_failures",
    "holds_o2",
    "minimal_members",
    "orthogonal_family",
    "reconstruct",
    "replay",
]
