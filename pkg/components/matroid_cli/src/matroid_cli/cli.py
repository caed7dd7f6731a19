"""``matroid-toolkit``: one verb per toolkit operation.

Every verb reads its documents (``-`` is standard input), runs a single
operation and returns an :class:`Outcome`: a pydantic report, the text
rendering of it and an exit status. Library errors map to their class-level
exit codes: 1 negative verdict, 2 bad input, 3 resource cap, 4 internal.
"""

from __future__ import annotations

import argparse
import itertools
import logging
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import TYPE_CHECKING

from circuit_games import duality_check, induced_matroid, psi_circuit_exists
from graph_structures import (
    degree_ray_tree,
    dummy_edges,
    gen_t2_k3,
    gen_t_k2,
    gen_tgame,
    normal_spanning_tree,
    parse_graph,
    parse_structure,
    render_graph,
    render_structure,
    t_k2_structure,
    torso,
    tree_structure_from_nst,
    undomination_graph,
    walk_g,
    walk_u,
)
from matroid_common import InputError, MatroidToolkitError, ToolkitLimits, format_set, sort_labels
from matroid_common.telemetry import write_metrics
from matroid_kernel import Matroid
from matroid_trees import delta_glue
from orthogonality_axioms import base_extend, check_axioms, reconstruct

from matroid_cli.formats import (
    parse_matroid,
    parse_presentation,
    parse_system,
    render_matroid,
    render_presentation,
)
from matroid_cli.reports import (
    AxiomCheckReport,
    BaseExtendReport,
    BaseStepModel,
    CircuitGameReport,
    DualityCaseModel,
    DualityReport,
    GeneratedReport,
    GlueReport,
    GraphModel,
    InducedReport,
    MatroidInfoReport,
    MatroidModel,
    MinorModel,
    ReconstructReport,
    TorsoReport,
    TreeStructureModel,
    TreeStructureReport,
    UndominationReport,
)
from matroid_cli.selftest import CHECKS, run_selftest

if TYPE_CHECKING:
    from collections.abc import Callable, Iterable, Sequence

    from gf_linalg import Subspace

    from matroid_cli.reports import ReportModel

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Outcome:
    """What a verb produced.

    Attributes:
        report: The structured report printed with ``--json``.
        text: The plain rendering printed otherwise.
        exit_code: 0, or 1 for a negative verdict.
    """

    report: ReportModel
    text: str
    exit_code: int = 0


# ============================================================================
# Input helpers
# ============================================================================


def _read(path: str) -> tuple[str, str]:
    """Text of ``path`` and its display name; ``-`` reads standard input."""
    if path == "-":
        return sys.stdin.read(), "-"
    try:
        return Path(path).read_text(encoding="utf-8"), path
    except OSError as exc:
        msg = f"Cannot read {path}: {exc.strerror}"
        raise InputError(msg) from exc


def _write(path: str, text: str) -> None:
    try:
        Path(path).write_text(text, encoding="utf-8")
    except OSError as exc:
        msg = f"Cannot write {path}: {exc.strerror}"
        raise InputError(msg) from exc


def _set(labels: Iterable[str] | None) -> list[str]:
    return list(sort_labels(labels or ()))


def _describe(matroid: Matroid) -> list[str]:
    """``rank``, ``circuits`` and ``cocircuits`` lines."""
    return [
        f"rank: {matroid.rank}",
        "circuits: " + " ".join(format_set(c) for c in matroid.circuits),
        "cocircuits: " + " ".join(format_set(d) for d in matroid.cocircuits),
    ]


# ============================================================================
# Matroid verbs
# ============================================================================


def _check_axioms(args: argparse.Namespace, limits: ToolkitLimits) -> Outcome:
    text, source = _read(args.system)
    system = parse_system(text, source=source)
    report = check_axioms(system, limits=limits)
    lines = [report.summary(), *(v.describe() for v in report.failures)]
    return Outcome(
        AxiomCheckReport.of(system.name, system.ground, report),
        "\n".join(lines),
        0 if report.passed else 1,
    )


def _reconstruct(args: argparse.Namespace, limits: ToolkitLimits) -> Outcome:
    text, source = _read(args.system)
    system = parse_system(text, source=source)
    matroid = reconstruct(system, limits=limits)
    return Outcome(
        ReconstructReport(system=system.name, matroid=MatroidModel.of(matroid, name=system.name)),
        render_matroid(matroid, name=system.name).rstrip("\n"),
    )


def _base_extend(args: argparse.Namespace, _limits: ToolkitLimits) -> Outcome:
    text, source = _read(args.system)
    system = parse_system(text, source=source)
    within = args.within if args.within is not None else list(system.ground)
    order = args.order or None
    found = base_extend(system, args.independent or (), within, order)
    report = BaseExtendReport(
        system=system.name,
        start=_set(args.independent),
        within=_set(within),
        order=list(order) if order is not None else _set(within),
        independent=_set(found.independent),
        rest=_set(found.rest),
        steps=[BaseStepModel(element=e, rule=rule) for e, rule in found.steps],
    )
    lines = [
        "independent: " + " ".join(report.independent),
        "rest: " + " ".join(report.rest),
        *(f"step {s.element}: {s.rule}" for s in report.steps),
    ]
    return Outcome(report, "\n".join(lines))


def _matroid_info(args: argparse.Namespace, limits: ToolkitLimits) -> Outcome:
    text, source = _read(args.matroid)
    document = parse_matroid(text, source=source, limits=limits)
    matroid = document.matroid
    loops = [e for e in matroid.ground if matroid.is_loop(e)]
    coloops = [e for e in matroid.ground if matroid.is_coloop(e)]
    lines = [f"matroid {document.name}", *_describe(matroid)]
    lines += ["loops: " + " ".join(loops), "coloops: " + " ".join(coloops), "dual"]
    lines += _describe(matroid.dual())
    minor = None
    if args.contract or args.delete:
        taken = matroid.minor(args.contract or (), args.delete or ())
        minor = MinorModel(
            contract=_set(args.contract), delete=_set(args.delete), matroid=MatroidModel.of(taken)
        )
        lines += [f"minor contract {format_set(minor.contract)} delete {format_set(minor.delete)}"]
        lines += _describe(taken)
    report = MatroidInfoReport(
        matroid=MatroidModel.of(matroid, document.space, name=document.name),
        dual=MatroidModel.of(matroid.dual(), name=f"{document.name}*"),
        loops=loops,
        coloops=coloops,
        minor=minor,
    )
    return Outcome(report, "\n".join(lines))


def _represented(path: str, limits: ToolkitLimits) -> tuple[str, Subspace]:
    text, source = _read(path)
    document = parse_matroid(text, source=source, limits=limits)
    if document.space is None:
        msg = f"{source}: glue needs a matroid given by a representation"
        raise InputError(msg)
    return document.name, document.space


def _glue(args: argparse.Namespace, limits: ToolkitLimits) -> Outcome:
    first_name, first = _represented(args.first, limits)
    second_name, second = _represented(args.second, limits)
    glued = delta_glue(first, second)
    name = f"{first_name}+{second_name}"
    matroid = Matroid.from_representation(glued, name=name, limits=limits)
    report = GlueReport(
        first=first_name,
        second=second_name,
        shared=_set(set(first.ambient) & set(second.ambient)),
        matroid=MatroidModel.of(matroid, glued, name=name),
    )
    return Outcome(report, render_matroid(matroid, glued, name=name).rstrip("\n"))


# ============================================================================
# Game verbs
# ============================================================================


def _solve(args: argparse.Namespace, limits: ToolkitLimits) -> Outcome:
    text, source = _read(args.presentation)
    document = parse_presentation(text, source=source, limits=limits)
    if args.representable and document.representation is None:
        msg = f"{source}: --representable needs every matroid given by a representation"
        raise InputError(msg)
    representation = document.representation if args.representable else None
    presentation = document.presentation
    verdict = psi_circuit_exists(
        presentation,
        args.edge,
        args.pco or (),
        args.pde,
        representation=representation,
        depth=args.depth,
        limits=limits,
    )
    support = verdict.materialization.support
    summary = verdict.describe()
    if support == {args.edge}:
        summary += " (loop)" if verdict.sarah_wins else " (coloop)"
    strategy = verdict.automaton.render()
    if args.witness:
        _write(args.witness, render_presentation(presentation, representation, strategy=strategy))
    pco = _set(args.pco)
    pde = (
        _set(args.pde)
        if args.pde is not None
        else _set([e for e in presentation.real_edges if e != args.edge and e not in pco])
    )
    report = CircuitGameReport(
        presentation=presentation.name,
        element=args.edge,
        pco=pco,
        pde=pde,
        representable=representation is not None,
        winner="Sarah" if verdict.sarah_wins else "Colin",
        kind="circuit" if verdict.sarah_wins else "cocircuit",
        support=_set(support),
        depth=verdict.materialization.depth,
        summary=summary,
        strategy=strategy.splitlines(),
    )
    return Outcome(report, f"{summary}\n{strategy}")


def _partitions(
    edges: Sequence[str], args: argparse.Namespace
) -> list[tuple[str, list[str], list[str]]]:
    """The cases to check: the one given, or every ``e, P_C`` of every edge."""
    if args.edge is not None:
        pco = _set(args.pco)
        pde = (
            _set(args.pde)
            if args.pde is not None
            else [x for x in edges if x != args.edge and x not in pco]
        )
        return [(args.edge, pco, pde)]
    cases = []
    for e in edges:
        rest = [x for x in edges if x != e]
        for size in range(len(rest) + 1):
            for chosen in itertools.combinations(rest, size):
                cases.append((e, list(chosen), [x for x in rest if x not in chosen]))
    return cases


def _duality_check(args: argparse.Namespace, limits: ToolkitLimits) -> Outcome:
    text, source = _read(args.presentation)
    document = parse_presentation(text, source=source, limits=limits)
    presentation = document.presentation
    representation = document.representation if args.representable else None
    cases = []
    lines = []
    for e, pco, pde in _partitions(sort_labels(presentation.real_edges), args):
        verdict = duality_check(
            presentation, e, pco, pde, representation=representation, limits=limits
        )
        cases.append(
            DualityCaseModel(
                element=e,
                pco=pco,
                pde=pde,
                sarah_wins=verdict.sarah_wins,
                colin_wins_cocircuit_game=verdict.colin_wins_cocircuit_game,
                positions=list(verdict.positions),
            )
        )
        winner = "Sarah" if verdict.sarah_wins else "Colin"
        lines.append(
            f"{e} P_C={format_set(pco)} P_D={format_set(pde)}: {winner} wins; "
            f"cocircuit game agrees ({verdict.positions[0]}/{verdict.positions[1]} positions)"
        )
    lines.append(f"{len(cases)} cases agree")
    return Outcome(DualityReport(presentation=presentation.name, cases=cases), "\n".join(lines))


def _induced(args: argparse.Namespace, limits: ToolkitLimits) -> Outcome:
    text, source = _read(args.presentation)
    document = parse_presentation(text, source=source, limits=limits)
    presentation = document.presentation
    representation = document.representation if args.representable else None
    induced = induced_matroid(presentation, representation=representation, limits=limits)
    name = presentation.name or "induced"
    summary = f"{induced.report.summary()} after {induced.queries} queries"
    report = InducedReport(
        presentation=presentation.name,
        summary=summary,
        queries=induced.queries,
        matroid=MatroidModel.of(induced.matroid, name=name),
    )
    return Outcome(report, f"{summary}\n{render_matroid(induced.matroid, name=name)}".rstrip())


# ============================================================================
# Graph verbs
# ============================================================================


def _tree_structure(args: argparse.Namespace, _limits: ToolkitLimits) -> Outcome:
    text, source = _read(args.graph)
    document = parse_graph(text, source=source)
    graph = document.graph
    if not graph.vertices:
        msg = "tree-structure needs a nonempty graph"
        raise InputError(msg)
    root = args.root if args.root is not None else graph.vertices[0]
    order = normal_spanning_tree(graph, root)
    structure = tree_structure_from_nst(graph, order)
    report = TreeStructureReport(
        graph=document.name,
        spanning_tree=[[p, v] for p, v in order.tree_edges],
        structure=TreeStructureModel.of(structure),
    )
    return Outcome(report, render_structure(structure).rstrip("\n"))


def _torso(args: argparse.Namespace, _limits: ToolkitLimits) -> Outcome:
    text, source = _read(args.graph)
    graph = parse_graph(text, source=source).graph
    text, source = _read(args.structure)
    structure = parse_structure(text, graph, source=source)
    piece = torso(graph, structure, args.class_name)
    dummies = sorted(dummy_edges(graph, structure, args.class_name))
    circuits = Matroid.from_graph(piece).circuits
    report = TorsoReport(
        class_name=args.class_name,
        torso=GraphModel.of(piece, f"torso-{args.class_name}"),
        dummy_edges=dummies,
        circuits=[list(sort_labels(c)) for c in circuits],
    )
    lines = [render_graph(piece, f"torso-{args.class_name}").rstrip("\n")]
    lines.append("# dummy edges: " + " ".join(dummies))
    return Outcome(report, "\n".join(lines))


def _undominate(args: argparse.Namespace, _limits: ToolkitLimits) -> Outcome:
    text, source = _read(args.graph)
    document = parse_graph(text, source=source)
    text, source = _read(args.tree)
    tree = parse_graph(text, source=source).graph
    undomination = undomination_graph(document.graph, tree)
    name = f"U({document.name})"
    lines = [render_graph(undomination.undominated, name).rstrip("\n")]
    lifted = projected = None
    if args.walk:
        start = args.start if args.start is not None else args.walk[0]
        end = args.end if args.end is not None else args.walk[-1]
        pairs = walk_u(undomination, args.walk, start, end)
        lifted = [list(pair) for pair in pairs]
        projected = walk_g(undomination, pairs)
        lines.append("# lift: " + " ".join(f"{v}@{t}" for v, t in pairs))
        lines.append("# projected: " + " ".join(projected))
    report = UndominationReport(
        graph=GraphModel.of(undomination.undominated, name),
        t_edges=undomination.t_edge_count,
        g_edges=undomination.g_edge_count,
        lifted=lifted,
        projected=projected,
    )
    return Outcome(report, "\n".join(lines))


def _gen(args: argparse.Namespace, _limits: ToolkitLimits) -> Outcome:
    structure_text = None
    if args.family == "tgame":
        document = render_presentation(gen_tgame())
    elif args.family == "tk2":
        rays = degree_ray_tree(args.depth)
        document = render_graph(gen_t_k2(rays, args.depth, root="v2"), f"tk2-{args.depth}")
        structure_text = render_structure(t_k2_structure(rays, args.depth, root="v2"))
    else:
        graph, structure = gen_t2_k3(args.depth)
        document = render_graph(graph, f"t2k3-{args.depth}")
        structure_text = render_structure(structure)
    if args.structure and structure_text is not None:
        _write(args.structure, structure_text)
    report = GeneratedReport(
        family=args.family, depth=args.depth, document=document, structure=structure_text
    )
    return Outcome(report, document.rstrip("\n"))


def _selftest(args: argparse.Namespace, limits: ToolkitLimits) -> Outcome:
    report = run_selftest(seed=args.seed, quick=args.quick, only=args.check, limits=limits)
    lines = [check.render() for check in report.checks]
    return Outcome(report, "\n".join(lines), 0 if report.passed else 1)


VERBS: dict[str, Callable[[argparse.Namespace, ToolkitLimits], Outcome]] = {
    "check-axioms": _check_axioms,
    "reconstruct": _reconstruct,
    "base-extend": _base_extend,
    "matroid-info": _matroid_info,
    "glue": _glue,
    "solve": _solve,
    "duality-check": _duality_check,
    "induced": _induced,
    "tree-structure": _tree_structure,
    "torso": _torso,
    "undominate": _undominate,
    "gen": _gen,
    "selftest": _selftest,
}


# ============================================================================
# Argument parsing
# ============================================================================


def _partition_options(parser: argparse.ArgumentParser, *, edge_required: bool) -> None:
    parser.add_argument("presentation", help="Presentation document, or - for stdin")
    parser.add_argument("--edge", required=edge_required, help="The real edge e")
    parser.add_argument("--pco", nargs="*", help="P_C: edges a circuit may use (default none)")
    parser.add_argument("--pde", nargs="*", help="P_D: edges a cocircuit may use (default rest)")
    parser.add_argument(
        "--representable", action="store_true", help="Play the game on the representation"
    )


def build_parser() -> argparse.ArgumentParser:  # noqa: PLR0915
    """The ``matroid-toolkit`` argument parser."""
    parser = argparse.ArgumentParser(
        prog="matroid-toolkit",
        description="Orthogonality axioms, trees of matroids and circuit games.",
    )
    parser.add_argument("--json", action="store_true", help="Print the report as JSON")
    parser.add_argument("--verbose", action="store_true", help="Log debug events to stderr")
    parser.add_argument("--metrics", help="Write Prometheus metrics to this file on exit")
    parser.add_argument("-o", "--output", help="Write the report here instead of stdout")
    parser.add_argument("--workers", type=int, help="Threads for independent game queries")
    verbs = parser.add_subparsers(dest="verb", required=True)

    for name, helptext in (
        ("check-axioms", "Check the eight orthogonality axioms"),
        ("reconstruct", "Turn a circuit/cocircuit pair into a matroid"),
    ):
        verbs.add_parser(name, help=helptext).add_argument("system", help="Set system document")

    extend = verbs.add_parser("base-extend", help="Extend I to a maximal independent subset")
    extend.add_argument("system", help="Set system document")
    extend.add_argument("--independent", nargs="*", help="The independent set I")
    extend.add_argument("--within", nargs="*", help="The set X (default: the ground set)")
    extend.add_argument("--order", nargs="*", help="Enumeration of X (default: label order)")

    info = verbs.add_parser("matroid-info", help="Circuits, cocircuits, dual and a minor")
    info.add_argument("matroid", help="Matroid document")
    info.add_argument("--contract", nargs="*", help="Elements to contract")
    info.add_argument("--delete", nargs="*", help="Elements to delete")

    glue = verbs.add_parser("glue", help="Glue two represented matroids")
    glue.add_argument("first", help="Represented matroid document")
    glue.add_argument("second", help="Represented matroid document")

    solve = verbs.add_parser("solve", help="Is there a Ψ-circuit through e inside {e} + P_C?")
    _partition_options(solve, edge_required=True)
    solve.add_argument("--depth", type=int, help="Depth to materialise the witness at")
    solve.add_argument("--witness", help="Write the presentation with the strategy section here")

    duality = verbs.add_parser("duality-check", help="Compare circuit and cocircuit games")
    _partition_options(duality, edge_required=False)

    induced = verbs.add_parser("induced", help="The matroid induced by a presentation")
    induced.add_argument("presentation", help="Presentation document")
    induced.add_argument(
        "--representable", action="store_true", help="Play the games on the representation"
    )

    structure = verbs.add_parser(
        "tree-structure", help="Tree structure from a normal spanning tree"
    )
    structure.add_argument("graph", help="Graph document")
    structure.add_argument("--root", help="Root vertex (default: the least vertex)")

    torso_parser = verbs.add_parser("torso", help="The torso of one class")
    torso_parser.add_argument("graph", help="Graph document")
    torso_parser.add_argument("structure", help="Tree structure document")
    torso_parser.add_argument("--class", dest="class_name", required=True, help="Class name")

    undominate = verbs.add_parser("undominate", help="The undomination graph U(G, T)")
    undominate.add_argument("graph", help="Graph document")
    undominate.add_argument("tree", help="Spanning tree as a graph document")
    undominate.add_argument("--walk", nargs="*", help="A walk of G to lift")
    undominate.add_argument("--start", help="Tree vertex the lift starts at")
    undominate.add_argument("--end", help="Tree vertex the lift ends at")

    gen = verbs.add_parser("gen", help="Generate an example family")
    gen.add_argument("family", choices=["tgame", "tk2", "t2k3"])
    gen.add_argument("--depth", type=int, default=2, help="Truncation depth (ignored by tgame)")
    gen.add_argument("--structure", help="Write the tree structure here")

    selftest = verbs.add_parser("selftest", help="Run the acceptance checks")
    selftest.add_argument("--seed", type=int, default=0, help="Seed for the random instances")
    selftest.add_argument("--quick", action="store_true", help="Draw fewer instances")
    selftest.add_argument(
        "--check", action="append", choices=list(CHECKS), help="Run only this check"
    )
    return parser


# ============================================================================
# Entry point
# ============================================================================


def main(argv: Sequence[str] | None = None) -> int:
    """Run one verb and return its exit status."""
    args = build_parser().parse_args(argv)
    if args.verbose:
        logging.basicConfig(level=logging.DEBUG, format="%(levelname)s %(name)s %(message)s")
    try:
        limits = ToolkitLimits.from_env(workers=args.workers)
        outcome = VERBS[args.verb](args, limits)
        rendered = outcome.report.model_dump_json(indent=2) if args.json else outcome.text
        if args.output:
            _write(args.output, rendered + "\n")
        else:
            sys.stdout.write(rendered + "\n")
        return outcome.exit_code
    except MatroidToolkitError as exc:
        logger.debug("cli.failed", extra={"verb": args.verb, "error": type(exc).__name__})
        sys.stderr.write(f"matroid-toolkit {args.verb}: {exc}\n")
        return exc.exit_code
    finally:
        if args.metrics:
            write_metrics(Path(args.metrics))


if __name__ == "__main__":
    sys.exit(main())
