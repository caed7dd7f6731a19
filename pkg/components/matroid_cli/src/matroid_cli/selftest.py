"""The acceptance selftest: twelve checks over fixed corpora and random instances.

Each check draws from its own generator seeded by ``(seed, index)``, so a
single check rerun with ``--check`` sees the same instances as in a full run.
A check returns a one-line detail on success and raises
:class:`CheckFailedError` with the first counterexample otherwise.
"""

from __future__ import annotations

import itertools
import logging
import time
from dataclasses import dataclass
from typing import TYPE_CHECKING, ClassVar

import networkx as nx
import numpy as np

from circuit_games import duality_check, induced_matroid, psi_circuit_exists
from gf_linalg import Subspace, complement
from graph_structures import (
    binary_representation,
    degree_ray_tree,
    four_circuit_counts,
    gen_t2_k3,
    gen_t_k2,
    gen_tgame,
    ladder,
    separates_in_undomination,
    subdivide_interfaces,
    t_k2_structure,
    tree_of_matroids,
    undomination_graph,
    walk_g,
    walk_u,
)
from matroid_common import (
    InputError,
    MatroidToolkitError,
    ToolkitLimits,
    format_set,
    sort_labels,
)
from matroid_kernel import Graph, Matroid, cycle_space
from matroid_trees import (
    Transition,
    TreePresentation,
    delta_glue,
    enumerate_circuits,
    enumerate_precircuits,
    hat_pairing,
    psi_vectors,
)
from orthogonality_axioms import SetSystemPair, base_extend, check_axioms, reconstruct
from parity_game_api import ParityArena, Player, Position
from parity_solver_impl import BruteForceSolver, ZielonkaSolver

from matroid_cli.reports import CheckResult, SelftestReport

if TYPE_CHECKING:
    from collections.abc import Callable, Collection, Iterable

    from graph_structures import TreeStructure

logger = logging.getLogger(__name__)


class CheckFailedError(MatroidToolkitError):
    """A selftest check found a counterexample."""

    exit_code: ClassVar[int] = 1


def _require(condition: bool, detail: str) -> None:  # noqa: FBT001
    if not condition:
        raise CheckFailedError(detail)


# ============================================================================
# Scale
# ============================================================================


@dataclass(frozen=True)
class Scale:
    """How many instances each check draws.

    Attributes:
        random_systems: Random set systems for the finite (O3) check.
        base_extend_size: Largest ``X`` enumerated by the base extension check.
        arenas: Random arenas compared against the exhaustive solver.
        arena_size: Positions in the largest random arena.
        tgame_depth: Deepest materialisation of the alternating tree.
        glue_pairs: Random represented pairs for the glue duality law.
        pairing_samples: Dual Ψ-vectors paired with each Ψ-vector.
        fingerprint_depth: Truncation depth of the degree-ray ladder.
        walks: Random trails lifted to ``U`` and projected back.
        separation_vertices: Largest atlas graph in the separator check.
        width_two: Width-2 instances compared with their subdivisions.
    """

    random_systems: int
    base_extend_size: int
    arenas: int
    arena_size: int
    tgame_depth: int
    glue_pairs: int
    pairing_samples: int
    fingerprint_depth: int
    walks: int
    separation_vertices: int
    width_two: int


FULL = Scale(1000, 5, 1000, 10, 8, 200, 64, 8, 500, 6, 5)
QUICK = Scale(100, 3, 100, 6, 3, 30, 8, 4, 50, 4, 3)


# ============================================================================
# Corpora
# ============================================================================


def corpus() -> list[Matroid]:
    """Uniform, graphic and represented matroids on at most six elements."""
    uniform = [Matroid.uniform(r, "abcdef"[:n]) for n in range(1, 6) for r in range(n + 1)]
    graphs = [
        Graph.build("1234", itertools.combinations("1234", 2)),
        Graph.build("1234", [("1", "2"), ("2", "3"), ("3", "4"), ("4", "1")]),
        Graph.build(
            "12345", [("1", "2"), ("2", "3"), ("3", "1"), ("3", "4"), ("4", "5"), ("5", "3")]
        ),
        Graph.build("1234", [("1", "2"), ("2", "3"), ("3", "1"), ("3", "4")]),
    ]
    represented = [
        Subspace.from_rows("abcde", 2, [(1, 1, 0, 1, 0), (0, 1, 1, 0, 1)]),
        Subspace.from_rows("abcd", 3, [(1, 1, 1, 0), (0, 1, 2, 1)]),
        Subspace.from_rows("abcdef", 3, [(1, 0, 1, 2, 0, 1), (0, 1, 1, 1, 2, 0)]),
        Subspace.from_rows("abc", 2, [(1, 0, 0)]),
    ]
    return (
        uniform
        + [Matroid.from_graph(g) for g in graphs]
        + [Matroid.from_representation(s) for s in represented]
    )


_EVEN = Matroid.uniform(1, ["up", "c0", "c1"])
_ODD = Matroid.uniform(2, ["up", "c0", "c1"])


def _core() -> list[Transition]:
    return [
        Transition.build(source, child, target, {f"c{child}": "up"})
        for source, target in (("even", "odd"), ("odd", "even"))
        for child in "01"
    ]


def presentations() -> list[TreePresentation]:
    """The alternating tree, a triangle feeding it, and two glued triangles."""
    k3 = TreePresentation.build(
        {"k": Matroid.uniform(2, ["x", "y", "d"])},
        {"even": _EVEN, "odd": _ODD},
        [Transition.build("k", "0", "even", {"d": "up"}), *_core()],
        name="k3",
    )
    triangles = TreePresentation.build(
        {"left": Matroid.uniform(2, ["a", "b", "x"]), "right": Matroid.uniform(2, ["c", "d", "x"])},
        {},
        [],
        root="left",
        name="triangles",
    )
    return [gen_tgame(), k3, triangles]


def variants(presentation: TreePresentation) -> dict[str, TreePresentation]:
    """Ψ = all ends, no ends, Büchi and co-Büchi, by priorities on the transitions.

    The Büchi variant favours 0-transitions into odd states; the co-Büchi
    variant penalises 0-transitions into even states.
    """
    buchi = {
        t.key: 2 if t.name == "0" and t.target == "odd" else 1 for t in presentation.transitions
    }
    co_buchi = {
        t.key: 1 if t.name == "0" and t.target == "even" else 0 for t in presentation.transitions
    }
    return {
        "all": presentation,
        "none": presentation.shifted(1),
        "buchi": presentation.reprioritized(buchi),
        "co-buchi": presentation.reprioritized(co_buchi),
    }


def _width_two() -> list[tuple[str, Graph, TreeStructure]]:
    rays = degree_ray_tree(2)
    instances = [(f"ladder({n})", *ladder(n)) for n in (2, 3, 4)]
    instances.append(
        ("T x K2", gen_t_k2(rays, 2, root="v2"), t_k2_structure(rays, 2, root="v2"))
    )
    instances.append(("T2 x K3", *gen_t2_k3(1)))
    return instances


def _atlas(max_vertices: int) -> list[Graph]:
    """Connected graphs of the networkx atlas with 2 to ``max_vertices`` vertices."""
    graphs = []
    for network in nx.graph_atlas_g():
        size = network.number_of_nodes()
        if 1 < size <= max_vertices and nx.is_connected(network):
            graphs.append(
                Graph.build([str(v) for v in network], [(str(u), str(v)) for u, v in network.edges])
            )
    return graphs


def _subset(ground: str, mask: int) -> frozenset[str]:
    return frozenset(x for i, x in enumerate(ground) if mask >> i & 1)


def _random_subspace(rng: np.random.Generator, ambient: list[str], p: int) -> Subspace:
    rows = rng.integers(0, p, size=(int(rng.integers(0, len(ambient) + 1)), len(ambient)))
    return Subspace.from_rows(ambient, p, rows.tolist())


# ============================================================================
# Checks
# ============================================================================


def check_axiom_round_trip(_rng: np.random.Generator, _scale: Scale, limits: ToolkitLimits) -> str:
    """Every corpus matroid passes 8/8 and reconstructs exactly."""
    matroids = corpus()
    for matroid in matroids:
        system = SetSystemPair.from_matroid(matroid)
        report = check_axioms(system, limits=limits)
        _require(report.passed, f"{format_set(matroid.ground)}: {report.summary()}")
        _require(
            reconstruct(system, limits=limits) == matroid,
            f"matroid on {format_set(matroid.ground)} does not reconstruct",
        )
    return f"{len(matroids)} matroids pass 8/8 and reconstruct"


def check_finite_o3(rng: np.random.Generator, scale: Scale, limits: ToolkitLimits) -> str:
    """(O1) and (O2) imply (O3) and (O3*) on random systems."""
    relevant = 0
    for _ in range(scale.random_systems):
        n = int(rng.integers(1, 7))
        ground = "abcdef"[:n]
        families = [
            [_subset(ground, int(m)) for m in rng.integers(1, 2**n, size=int(rng.integers(0, 7)))]
            for _ in range(2)
        ]
        system = SetSystemPair.build(ground, families[0], families[1], name="random")
        report = check_axioms(system, limits=limits)
        if not (report.verdict("(O1)").passed and report.verdict("(O2)").passed):
            continue
        relevant += 1
        for axiom in ("(O3)", "(O3*)"):
            _require(
                report.verdict(axiom).passed,
                f"{axiom} fails with (O1) and (O2) holding: C={families[0]} D={families[1]}",
            )
    return f"{relevant} of {scale.random_systems} systems satisfy (O1) and (O2), all satisfy (O3)"


def _maximum_independent(matroid: Matroid, within: Collection[str]) -> int:
    for size in range(len(within), 0, -1):
        if any(matroid.is_independent(s) for s in itertools.combinations(within, size)):
            return size
    return 0


def check_base_extend(_rng: np.random.Generator, scale: Scale, _limits: ToolkitLimits) -> str:
    """``base_extend`` finds a maximum independent subset from every start and order."""
    cases = 0
    for matroid in corpus():
        system = SetSystemPair.from_matroid(matroid)
        for size in range(min(scale.base_extend_size, len(matroid.ground)) + 1):
            for within in itertools.combinations(matroid.ground, size):
                maximum = _maximum_independent(matroid, within)
                starts = [
                    set(s)
                    for k in range(size + 1)
                    for s in itertools.combinations(within, k)
                    if matroid.is_independent(s)
                ]
                for start, order in itertools.product(starts, itertools.permutations(within)):
                    found = base_extend(system, start, within, order)
                    where = f"{matroid.name} I={format_set(start)} X={format_set(within)} {order}"
                    _require(
                        start <= found.independent <= set(within), f"{where}: not between I and X"
                    )
                    _require(
                        matroid.is_independent(found.independent), f"{where}: dependent result"
                    )
                    _require(
                        len(found.independent) == maximum,
                        f"{where}: {format_set(found.independent)} is not maximum",
                    )
                    cases += 1
    return f"{cases} extensions are maximum independent subsets"


def check_game_duality(_rng: np.random.Generator, _scale: Scale, limits: ToolkitLimits) -> str:
    """Circuit and cocircuit games agree on every partition of every presentation."""
    cases = 0
    for presentation in presentations():
        edges = sort_labels(presentation.real_edges)
        for name, variant in variants(presentation).items():
            for e in edges:
                rest = [x for x in edges if x != e]
                for size in range(len(rest) + 1):
                    for pco in itertools.combinations(rest, size):
                        try:
                            duality_check(variant, e, pco, limits=limits)
                        except MatroidToolkitError as exc:
                            msg = f"{presentation.name}/{name} at {e}, P_C={set(pco)}: {exc}"
                            raise CheckFailedError(msg) from exc
                        cases += 1
    return f"{cases} partitions agree between the circuit and cocircuit games"


def _random_arena(rng: np.random.Generator, size: int, limits: ToolkitLimits) -> ParityArena:
    positions = [
        Position(
            Player.SARAH if rng.random() < 0.5 else Player.COLIN,  # noqa: PLR2004
            int(rng.integers(0, 5)),
            index,
        )
        for index in range(size)
    ]
    moves = [
        (v, int(u))
        for v in range(size)
        for u in rng.choice(size, size=min(int(rng.integers(0, 3)), size), replace=False)
    ]
    return ParityArena.build(positions, moves, limits=limits)


def check_solver_oracle(rng: np.random.Generator, scale: Scale, limits: ToolkitLimits) -> str:
    """Zielonka's recursion matches exhaustive search position by position."""
    zielonka, oracle = ZielonkaSolver(), BruteForceSolver(limits=limits)
    for index in range(scale.arenas):
        arena = _random_arena(rng, int(rng.integers(1, scale.arena_size + 1)), limits)
        expected = oracle.solve(arena).winners
        found = zielonka.solve(arena).winners
        _require(found == expected, f"arena {index} of {len(arena)} positions: {found}")
    return f"{scale.arenas} random arenas solved identically"


def check_tgame_facts(_rng: np.random.Generator, scale: Scale, limits: ToolkitLimits) -> str:
    """On the alternating tree, d0 is a loop iff Ψ holds all ends; Büchi wins, co-Büchi loses."""
    expected = {"all": True, "none": False, "buchi": True, "co-buchi": False}
    for name, variant in variants(gen_tgame()).items():
        for depth in range(1, scale.tgame_depth + 1):
            verdict = psi_circuit_exists(variant, "d0", depth=depth, limits=limits)
            where = f"{name} at depth {depth}"
            _require(verdict.sarah_wins == expected[name], f"{where}: {verdict.describe()}")
            _require(verdict.materialization.support == {"d0"}, f"{where}: wrong support")
            _require(verdict.materialization.precircuit is not None, f"{where}: no witness")
    return f"four Ψ variants decided as expected at depths 1 to {scale.tgame_depth}"


def check_width_two(_rng: np.random.Generator, scale: Scale, limits: ToolkitLimits) -> str:
    """Width-2 trees of torsos have the cycles and bonds of the subdivided graph."""
    instances = _width_two()[: scale.width_two]
    for name, graph, structure in instances:
        tree = tree_of_matroids(graph, structure, limits=limits)
        subdivided = Matroid.from_graph(subdivide_interfaces(graph, structure))
        _require(
            set(enumerate_circuits(tree).circuits) == set(subdivided.circuits),
            f"{name}: circuits differ",
        )
        _require(
            set(enumerate_circuits(tree.dual()).circuits) == set(subdivided.cocircuits),
            f"{name}: bonds differ",
        )
    return f"{len(instances)} width-2 instances match their subdivisions"


def check_delta_glue(rng: np.random.Generator, scale: Scale, _limits: ToolkitLimits) -> str:
    """Two triangles glue to a square, and gluing commutes with complements."""
    first = cycle_space(Graph.build([], [("1", "2", "a"), ("2", "3", "b"), ("1", "3", "x")]))
    second = cycle_space(Graph.build([], [("4", "5", "c"), ("5", "6", "d"), ("4", "6", "x")]))
    square = Graph.build([], [("1", "2", "a"), ("2", "3", "b"), ("3", "4", "c"), ("1", "4", "d")])
    _require(
        Matroid.from_representation(delta_glue(first, second)) == Matroid.from_graph(square),
        "M(K3) glued with M(K3) is not M(C4)",
    )
    for index in range(scale.glue_pairs):
        p = int(rng.choice([2, 3]))
        shared = ["x", "y"][: int(rng.integers(0, 3))]
        left = _random_subspace(rng, ["a", "b", "c"][: int(rng.integers(1, 4))] + shared, p)
        right = _random_subspace(rng, ["d", "e", "f"][: int(rng.integers(1, 4))] + shared, p)
        glued_duals = Matroid.from_representation(delta_glue(complement(left), complement(right)))
        dual_glued = Matroid.from_representation(complement(delta_glue(left, right)))
        _require(glued_duals == dual_glued, f"pair {index} over GF({p}) breaks the duality law")
    return f"M(C4) recovered; {scale.glue_pairs} random pairs obey the duality law"


def check_pairings(rng: np.random.Generator, scale: Scale, limits: ToolkitLimits) -> str:
    """Ψ-vectors pair to zero with dual ones; pre-circuits never meet dual ones once."""
    pairs = 0
    for name, graph, structure in _width_two():
        if name == "T x K2":
            continue
        tree = tree_of_matroids(graph, structure, limits=limits)
        rep = binary_representation(graph, structure)
        duals = psi_vectors(tree, rep.dual(), limits=limits)
        for v in psi_vectors(tree, rep, limits=limits):
            for i in rng.choice(len(duals), size=min(scale.pairing_samples, len(duals))):
                _require(
                    hat_pairing(tree, rep, v, duals[int(i)]) == 0,
                    f"{name}: nonzero pairing",
                )
                pairs += 1
        for circuit, cocircuit in itertools.product(
            enumerate_precircuits(tree, limits=limits),
            enumerate_precircuits(tree.dual(), limits=limits),
        ):
            meet = circuit.underlying(tree) & cocircuit.underlying(tree)
            _require(len(meet) != 1, f"{name}: pre-circuits meet in {format_set(meet)}")
    return f"{pairs} pairings vanish; no pre-circuit meets a dual pre-circuit once"


def check_fingerprint(_rng: np.random.Generator, scale: Scale, _limits: ToolkitLimits) -> str:
    """In T x K2 over the degree-ray tree, the rung at v_n lies on n four-cycles."""
    depth = scale.fingerprint_depth
    graph = gen_t_k2(degree_ray_tree(depth), depth, root="v2")
    counts = four_circuit_counts(graph)
    for n in range(2, depth + 2):
        rung = f"v{n}v{n}'"
        _require(counts[rung] == n, f"{rung} lies on {counts[rung]} four-cycles")
    for e in graph.edges:
        if e.v != f"{e.u}'":
            _require(counts[e.label] == 1, f"{e.label} lies on {counts[e.label]} four-cycles")
    return f"rungs v2 to v{depth + 1} lie on 2 to {depth + 1} four-cycles"


def _random_trail(rng: np.random.Generator, graph: Graph) -> list[str]:
    trail = [graph.vertices[int(rng.integers(len(graph.vertices)))]]
    used: set[frozenset[str]] = set()
    while rng.random() < 0.8:  # noqa: PLR2004
        options = [w for w in graph.neighbours(trail[-1]) if frozenset((trail[-1], w)) not in used]
        if not options:
            break
        nxt = options[int(rng.integers(len(options)))]
        used.add(frozenset((trail[-1], nxt)))
        trail.append(nxt)
    return trail


def _separations_hold(graph: Graph, tree: Graph) -> int:
    """Check every separator of ``graph`` against ``U(G, T)``; return the pairs checked."""
    undomination = undomination_graph(graph, tree)
    network = graph.to_networkx()
    checked = 0
    for size in range(1, len(graph.vertices) - 1):
        for separator in itertools.combinations(graph.vertices, size):
            parts = list(nx.connected_components(network.subgraph(set(network) - set(separator))))
            if len(parts) < 2:  # noqa: PLR2004
                continue
            removed = set(itertools.product(separator, repeat=2))
            rest = undomination.network.subgraph(set(undomination.network) - removed)
            component = {n: i for i, part in enumerate(nx.connected_components(rest)) for n in part}
            for left, right in itertools.combinations(parts, 2):
                v, w = min(left), min(right)
                _require(
                    separates_in_undomination(undomination, separator, (v, v), (w, w)),
                    f"{format_set(separator)} fails to separate the fibres of {v} and {w}",
                )
                reached = {component[(v, t)] for v in left for t in tree.vertices}
                shared = reached & {component[(w, s)] for w in right for s in tree.vertices}
                _require(
                    not shared,
                    f"{format_set(separator)} fails to separate {format_set(left)} "
                    f"from {format_set(right)} in U",
                )
                checked += 1
    return checked


def check_undomination(rng: np.random.Generator, scale: Scale, _limits: ToolkitLimits) -> str:
    """Walks lift and project back; vertex separators lift to ``X × X`` separators."""
    graphs = _atlas(scale.separation_vertices)
    walkable = [g for g in graphs if g.edges]
    for _ in range(scale.walks):
        graph = walkable[int(rng.integers(len(walkable)))]
        tree = Graph.build(graph.vertices, nx.dfs_edges(graph.to_networkx(), graph.vertices[0]))
        undomination = undomination_graph(graph, tree)
        walk = _random_trail(rng, graph)
        start, end = (graph.vertices[int(i)] for i in rng.integers(len(graph.vertices), size=2))
        _require(
            walk_g(undomination, walk_u(undomination, walk, start, end)) == walk,
            f"g(u(P)) differs from P={walk}",
        )
    separations = trees = 0
    for graph in graphs:
        for spanning in nx.SpanningTreeIterator(graph.to_networkx()):
            tree = Graph.build(graph.vertices, spanning.edges)
            separations += _separations_hold(graph, tree)
            trees += 1
    return (
        f"{scale.walks} walks invert; {separations} separations hold over {trees} spanning trees"
    )


def check_induced(_rng: np.random.Generator, _scale: Scale, limits: ToolkitLimits) -> str:
    """Every induced matroid passes the orthogonality axioms."""
    checked = 0
    for presentation in presentations():
        for name, variant in variants(presentation).items():
            induced = induced_matroid(variant, limits=limits)
            summary = induced.report.summary()
            _require(induced.report.passed, f"{presentation.name}/{name}: {summary}")
            checked += 1
    return f"{checked} induced matroids pass 8/8"


CHECKS: dict[str, Callable[[np.random.Generator, Scale, ToolkitLimits], str]] = {
    "axiom-round-trip": check_axiom_round_trip,
    "finite-o3": check_finite_o3,
    "base-extend": check_base_extend,
    "game-duality": check_game_duality,
    "solver-oracle": check_solver_oracle,
    "tgame-facts": check_tgame_facts,
    "width-two": check_width_two,
    "delta-glue": check_delta_glue,
    "pairings": check_pairings,
    "fingerprint": check_fingerprint,
    "undomination": check_undomination,
    "induced": check_induced,
}


# ============================================================================
# Runner
# ============================================================================


def run_check(
    name: str, seed: int, *, quick: bool = False, limits: ToolkitLimits | None = None
) -> CheckResult:
    """Run one check and turn its outcome or error into a result line."""
    index = list(CHECKS).index(name)
    rng = np.random.default_rng([seed, index])
    start = time.perf_counter()
    try:
        detail = CHECKS[name](rng, QUICK if quick else FULL, limits or ToolkitLimits.from_env())
        passed = True
    except MatroidToolkitError as exc:
        detail, passed = str(exc), False
    logger.info(
        "selftest.check",
        extra={"check": name, "passed": passed, "seconds": time.perf_counter() - start},
    )
    return CheckResult(name=name, passed=passed, detail=detail)


def run_selftest(
    *,
    seed: int = 0,
    quick: bool = False,
    only: Iterable[str] | None = None,
    limits: ToolkitLimits | None = None,
) -> SelftestReport:
    """Run the named checks (all by default) in their fixed order.

    Raises:
        InputError: If ``only`` names an unknown check.
    """
    chosen = list(CHECKS) if only is None else list(only)
    unknown = [name for name in chosen if name not in CHECKS]
    if unknown:
        msg = f"Unknown check {unknown[0]!r}; choose from {', '.join(CHECKS)}"
        raise InputError(msg)
    results = [
        run_check(name, seed, quick=quick, limits=limits)
        for name in CHECKS
        if name in chosen
    ]
    return SelftestReport(seed=seed, quick=quick, checks=results)
