"""Main entry point for a quick toolkit sanity check.

Imports every component and runs one small operation from each area:
the axioms on M(K4), the circuit game on the alternating tree, and a tree
structure grown on a ladder. Useful as a smoke check after a fresh uv sync.
"""

from __future__ import annotations

import itertools
import logging
import sys
from pathlib import Path
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from collections.abc import Callable

logger = logging.getLogger(__name__)

_COMPONENTS = (
    "matroid_common",
    "gf_linalg",
    "matroid_kernel",
    "orthogonality_axioms",
    "matroid_trees",
    "parity_game_api",
    "parity_solver_impl",
    "circuit_games",
    "graph_structures",
    "matroid_cli",
)


# ---------------------------------------------------------------------------
# Workspace bootstrap
# ---------------------------------------------------------------------------


def _bootstrap_workspace_paths() -> None:
    """Ensure component packages are importable when running this file directly."""
    repo_root = Path(__file__).resolve().parent
    for component in _COMPONENTS:
        path = repo_root / "components" / component / "src"
        path_str = str(path)
        if path.exists() and path_str not in sys.path:
            sys.path.insert(0, path_str)


# ---------------------------------------------------------------------------
# Smoke check
# ---------------------------------------------------------------------------


def _axioms() -> str:
    from matroid_kernel import Graph, Matroid  # noqa: PLC0415
    from orthogonality_axioms import SetSystemPair, check_axioms  # noqa: PLC0415

    k4 = Matroid.from_graph(Graph.build([], itertools.combinations("abcd", 2)))
    return check_axioms(SetSystemPair.from_matroid(k4)).summary()


def _game() -> str:
    from circuit_games import psi_circuit_exists  # noqa: PLC0415
    from graph_structures import gen_tgame  # noqa: PLC0415

    return psi_circuit_exists(gen_tgame(), "d0").describe()


def _structure() -> str:
    from graph_structures import ladder, normal_spanning_tree, tree_structure_from_nst  # noqa: PLC0415

    graph, _ = ladder(3)
    structure = tree_structure_from_nst(graph, normal_spanning_tree(graph, "p1"))
    return f"{len(structure.classes)} classes, valid={structure.validate().valid}"


def _smoke_check() -> int:
    """Run each check and report its result.

    Returns:
        0 if every check ran; 1 if any raised.
    """
    checks: list[tuple[str, Callable[[], str]]] = [
        ("axioms", _axioms),
        ("game", _game),
        ("structure", _structure),
    ]

    failures = 0
    for name, check in checks:
        try:
            detail = check()
        except Exception:
            logger.exception("%s: unexpected failure", name)
            failures += 1
            continue
        sys.stdout.write(f"{name}: {detail}\n")

    return 0 if failures == 0 else 1


# ---------------------------------------------------------------------------
# Main
# ---------------------------------------------------------------------------


def main() -> None:
    """Run a lightweight import and computation sanity check."""
    _bootstrap_workspace_paths()
    sys.exit(_smoke_check())


if __name__ == "__main__":
    main()
