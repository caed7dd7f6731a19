"""Shared presentations for the circuit game tests.

``tgame`` is the binary tree whose even levels carry U(1,3) and odd levels
U(2,3): its root holds the single real edge ``d0`` and two dummy edges
``c0``/``c1``, each handed to an odd-level state by a transition named after
the child it creates.
"""

from __future__ import annotations

import pytest

from gf_linalg import Subspace, Vector
from matroid_kernel import Matroid
from matroid_trees import Transition, TreePresentation, TreeRepresentation

EVEN = Matroid.uniform(1, ["up", "c0", "c1"])
ODD = Matroid.uniform(2, ["up", "c0", "c1"])


def _core() -> list[Transition]:
    return [
        Transition.build("even", "0", "odd", {"c0": "up"}),
        Transition.build("even", "1", "odd", {"c1": "up"}),
        Transition.build("odd", "0", "even", {"c0": "up"}),
        Transition.build("odd", "1", "even", {"c1": "up"}),
    ]


def _tgame() -> TreePresentation:
    """The alternating binary tree with every priority 0."""
    return TreePresentation.build(
        {"root": Matroid.uniform(1, ["d0", "c0", "c1"])},
        {"even": EVEN, "odd": ODD},
        [
            Transition.build("root", "0", "odd", {"c0": "up"}),
            Transition.build("root", "1", "odd", {"c1": "up"}),
            *_core(),
        ],
        name="tgame",
    )


@pytest.fixture
def k3() -> TreePresentation:
    """A triangle on ``x``, ``y``, ``d`` whose dummy ``d`` feeds the alternating core."""
    return TreePresentation.build(
        {"k": Matroid.uniform(2, ["x", "y", "d"])},
        {"even": EVEN, "odd": ODD},
        [Transition.build("k", "0", "even", {"d": "up"}), *_core()],
        name="k3",
    )


def _span(ambient: list[str], *supports: str) -> Subspace:
    rows = [Vector.from_mapping(ambient, 2, dict.fromkeys(s.split(), 1)) for s in supports]
    return Subspace.span(ambient, 2, rows)


@pytest.fixture
def tgame_rep(tgame: TreePresentation) -> TreeRepresentation:
    """GF(2) cycle spaces: pairs for U(1,3), the all-ones vector for U(2,3)."""
    local = ["up", "c0", "c1"]
    return TreeRepresentation.build(
        tgame.matroids,
        {
            "root": _span(["d0", "c0", "c1"], "d0 c0", "c0 c1"),
            "even": _span(local, "up c0", "c0 c1"),
            "odd": _span(local, "up c0 c1"),
        },
    )


@pytest.fixture
def tgame() -> TreePresentation:
    """The alternating tree with Ψ = all ends."""
    return _tgame()


@pytest.fixture
def buchi(tgame: TreePresentation) -> TreePresentation:
    """0-transitions leaving even-level nodes have priority 2, all others 1."""
    favoured = {("root", "0"), ("even", "0")}
    return tgame.reprioritized({t.key: 2 if t.key in favoured else 1 for t in tgame.transitions})


@pytest.fixture
def co_buchi(tgame: TreePresentation) -> TreePresentation:
    """0-transitions entering even-level nodes have priority 1, all others 0."""
    return tgame.reprioritized({("odd", "0"): 1})


@pytest.fixture
def triangles() -> TreePresentation:
    """Two triangles glued along ``x``; no core."""
    return TreePresentation.build(
        {
            "left": Matroid.uniform(2, ["a", "b", "x"]),
            "right": Matroid.uniform(2, ["c", "d", "x"]),
        },
        {},
        [],
        root="left",
        name="triangles",
    )
