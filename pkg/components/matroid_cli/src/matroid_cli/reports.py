"""Pydantic models for the structured reports the CLI emits with ``--json``.

Every list of labels or sets is in canonical order, so two runs on the same
input serialise to identical documents.
"""

from __future__ import annotations

from typing import TYPE_CHECKING, Literal

from pydantic import BaseModel, ConfigDict, Field

from matroid_common import format_set, sort_labels

if TYPE_CHECKING:
    from collections.abc import Iterable

    from gf_linalg import Subspace
    from graph_structures import TreeStructure
    from matroid_kernel import Graph, Matroid
    from orthogonality_axioms import AxiomReport


class ReportModel(BaseModel):
    """Base for all reports.

    Forbids extra fields and freezes instances once built.
    """

    model_config = ConfigDict(extra="forbid", frozen=True)


def _sets(family: Iterable[frozenset[str]]) -> list[list[str]]:
    return [list(sort_labels(member)) for member in family]


# ---------------------------------------------------------------------------
# Matroids and set systems
# ---------------------------------------------------------------------------


class MatroidModel(ReportModel):
    """A matroid by its circuits and cocircuits, with its representation if known."""

    name: str = Field(..., description="Display name of the matroid")
    ground: list[str] = Field(..., description="Ground set in canonical order")
    rank: int = Field(..., description="Size of every base")
    circuits: list[list[str]] = Field(..., description="Circuits, by size then lexicographically")
    cocircuits: list[list[str]] = Field(..., description="Cocircuits in the same order")
    p: int | None = Field(default=None, description="Field characteristic of the representation")
    basis: list[list[int]] = Field(
        default_factory=list, description="Reduced row-echelon basis in ground order"
    )

    @classmethod
    def of(
        cls, matroid: Matroid, space: Subspace | None = None, *, name: str = ""
    ) -> MatroidModel:
        """Describe ``matroid`` and, when given, the subspace representing it."""
        return cls(
            name=name or matroid.name,
            ground=list(matroid.ground),
            rank=matroid.rank,
            circuits=_sets(matroid.circuits),
            cocircuits=_sets(matroid.cocircuits),
            p=None if space is None else space.p,
            basis=[] if space is None else space.matrix().tolist(),
        )


class AxiomVerdictModel(ReportModel):
    """One axiom and the witness of its failure."""

    axiom: str
    passed: bool
    witness: list[str] = Field(default_factory=list, description="Rendered sets and elements")


class AxiomCheckReport(ReportModel):
    """Outcome of ``check-axioms``."""

    system: str
    ground: list[str]
    summary: str = Field(..., description="PASS (8/8) or FAIL (k/8)")
    passed: bool
    verdicts: list[AxiomVerdictModel]

    @classmethod
    def of(cls, name: str, ground: Iterable[str], report: AxiomReport) -> AxiomCheckReport:
        """Flatten an axiom report."""
        return cls(
            system=name,
            ground=list(ground),
            summary=report.summary(),
            passed=report.passed,
            verdicts=[
                AxiomVerdictModel(
                    axiom=v.axiom,
                    passed=v.passed,
                    witness=[w if isinstance(w, str) else format_set(w) for w in v.witness],
                )
                for v in report.verdicts
            ],
        )


class ReconstructReport(ReportModel):
    """Outcome of ``reconstruct``."""

    system: str
    matroid: MatroidModel


class MinorModel(ReportModel):
    """A minor and the sets it was taken by."""

    contract: list[str]
    delete: list[str]
    matroid: MatroidModel


class MatroidInfoReport(ReportModel):
    """Outcome of ``matroid-info``."""

    matroid: MatroidModel
    dual: MatroidModel
    loops: list[str]
    coloops: list[str]
    minor: MinorModel | None = None


class BaseStepModel(ReportModel):
    """Where one element went and which case sent it there."""

    element: str
    rule: str


class BaseExtendReport(ReportModel):
    """Outcome of ``base-extend``."""

    system: str
    start: list[str] = Field(..., description="The independent set that was extended")
    within: list[str]
    order: list[str] = Field(..., description="Enumeration of the set that was followed")
    independent: list[str] = Field(..., description="The maximal independent subset found")
    rest: list[str]
    steps: list[BaseStepModel]


class GlueReport(ReportModel):
    """Outcome of ``glue``: the represented matroid of the glued subspace."""

    first: str
    second: str
    shared: list[str] = Field(..., description="Labels the two ambient sets have in common")
    matroid: MatroidModel


# ---------------------------------------------------------------------------
# Games
# ---------------------------------------------------------------------------


class CircuitGameReport(ReportModel):
    """Outcome of ``solve``."""

    presentation: str
    element: str
    pco: list[str]
    pde: list[str]
    representable: bool
    winner: Literal["Sarah", "Colin"]
    kind: Literal["circuit", "cocircuit"]
    support: list[str] = Field(..., description="Real edges of the materialised witness")
    depth: int = Field(..., description="Truncation depth the witness was materialised at")
    summary: str
    strategy: list[str] = Field(..., description="The strategy section, line by line")


class DualityCaseModel(ReportModel):
    """One partition ``{e}, P_C, P_D`` and both game outcomes."""

    element: str
    pco: list[str]
    pde: list[str]
    sarah_wins: bool
    colin_wins_cocircuit_game: bool
    positions: list[int]


class DualityReport(ReportModel):
    """Outcome of ``duality-check``; every case agreed or the verb failed."""

    presentation: str
    cases: list[DualityCaseModel]


class InducedReport(ReportModel):
    """Outcome of ``induced``."""

    presentation: str
    summary: str
    queries: int
    matroid: MatroidModel


# ---------------------------------------------------------------------------
# Graphs
# ---------------------------------------------------------------------------


class GraphModel(ReportModel):
    """A graph as vertex and ``[u, v, label]`` edge lists."""

    name: str
    vertices: list[str]
    edges: list[list[str]]

    @classmethod
    def of(cls, graph: Graph, name: str) -> GraphModel:
        """Describe ``graph``."""
        return cls(
            name=name,
            vertices=list(graph.vertices),
            edges=[[e.u, e.v, e.label] for e in graph.edges],
        )


class TreeStructureModel(ReportModel):
    """Classes, tree edges and the validation verdict of a tree structure."""

    root: str
    classes: dict[str, list[str]]
    edges: list[list[str]]
    width: int
    valid: bool
    failures: list[str] = Field(default_factory=list)

    @classmethod
    def of(cls, structure: TreeStructure) -> TreeStructureModel:
        """Describe and validate ``structure``."""
        report = structure.validate()
        return cls(
            root=structure.root,
            classes={k: list(sort_labels(v)) for k, v in sorted(structure.classes.items())},
            edges=[[u, v] for u, v in structure.edges],
            width=structure.width,
            valid=report.valid,
            failures=[f"{f.kind}: {f.detail}" for f in report.failures],
        )


class TreeStructureReport(ReportModel):
    """Outcome of ``tree-structure``."""

    graph: str
    spanning_tree: list[list[str]] = Field(..., description="Normal spanning tree edges")
    structure: TreeStructureModel


class TorsoReport(ReportModel):
    """Outcome of ``torso``."""

    class_name: str
    torso: GraphModel
    dummy_edges: list[str]
    circuits: list[list[str]]


class UndominationReport(ReportModel):
    """Outcome of ``undominate``."""

    graph: GraphModel
    t_edges: int
    g_edges: int
    lifted: list[list[str]] | None = Field(
        default=None, description="The lift of --walk as (vertex, node) pairs"
    )
    projected: list[str] | None = None


class GeneratedReport(ReportModel):
    """Outcome of ``gen``: the generated documents."""

    family: str
    depth: int
    document: str
    structure: str | None = None


# ---------------------------------------------------------------------------
# Selftest
# ---------------------------------------------------------------------------


class CheckResult(ReportModel):
    """One acceptance check."""

    name: str
    passed: bool
    detail: str

    def render(self) -> str:
        """``PASS name: detail`` or ``FAIL name: detail``."""
        return f"{'PASS' if self.passed else 'FAIL'} {self.name}: {self.detail}"


class SelftestReport(ReportModel):
    """Outcome of ``selftest``."""

    seed: int
    quick: bool
    checks: list[CheckResult]

    @property
    def passed(self) -> bool:
        """Every check passed."""
        return all(c.passed for c in self.checks)
