"""Documents shared by the CLI tests, written to ``tmp_path`` on demand."""

from __future__ import annotations

import itertools
from typing import TYPE_CHECKING

import pytest

from graph_structures import gen_tgame
from matroid_kernel import Graph, Matroid
from orthogonality_axioms import SetSystemPair

from matroid_cli import main, render_presentation, render_system

if TYPE_CHECKING:
    from collections.abc import Callable
    from pathlib import Path

TRIANGLES = """\
presentation triangles
root left
prefix
matroid left
ground: a b x
rep GF(2)
1 1 1
matroid right
ground: c d x
rep GF(2)
1 1 1
core
transitions
real-edges: a b c d
"""

SQUARE = """\
graph square
edge a b
edge b c
edge c d
edge a d
"""

SQUARE_PATH = """\
graph path
edge a b
edge b c
edge c d
"""

Run = tuple[int, str, str]


@pytest.fixture
def k4_system() -> str:
    """Circuits and cocircuits of M(K4) as a set-system document."""
    graph = Graph.build([], itertools.combinations("abcd", 2))
    matroid = Matroid.from_graph(graph, name="k4")
    return render_system(SetSystemPair.from_matroid(matroid))


@pytest.fixture
def tgame_text() -> str:
    """The alternating tree with every priority 0."""
    return render_presentation(gen_tgame())


@pytest.fixture
def write(tmp_path: Path) -> Callable[[str, str], str]:
    """Write a document under ``tmp_path`` and return its path as a string."""

    def _write(name: str, text: str) -> str:
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)

    return _write


@pytest.fixture
def run(capsys: pytest.CaptureFixture[str]) -> Callable[..., Run]:
    """Call ``main`` and return its exit status, stdout and stderr."""

    def _run(*argv: str) -> Run:
        status = main(list(argv))
        captured = capsys.readouterr()
        return status, captured.out, captured.err

    return _run


@pytest.fixture
def triangles_text() -> str:
    """Two GF(2) triangles glued along ``x``, with no core."""
    return TRIANGLES


@pytest.fixture
def square_text() -> str:
    """The 4-cycle ``a b c d``."""
    return SQUARE


@pytest.fixture
def square_path_text() -> str:
    """The spanning path ``a b c d`` of the square."""
    return SQUARE_PATH
