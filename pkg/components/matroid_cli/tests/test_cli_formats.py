"""Tests for the set-system, matroid and presentation text formats."""

from __future__ import annotations

import pytest

from gf_linalg import Subspace
from graph_structures import gen_tgame
from matroid_common import AxiomViolationError, FormatError
from matroid_kernel import Matroid

from matroid_cli import (
    parse_matroid,
    parse_presentation,
    parse_system,
    render_matroid,
    render_presentation,
    render_system,
)

# ============================================================================
# Set systems
# ============================================================================


@pytest.mark.unit
def test_system_reads_back(k4_system: str) -> None:
    """Rendering a parsed system gives the same document."""
    system = parse_system(k4_system)

    assert system.name == "k4"
    assert len(system.circuits) == 7
    assert len(system.cocircuits) == 7
    assert render_system(system) == k4_system


@pytest.mark.unit
def test_system_with_comments_and_an_empty_member() -> None:
    """Comments are skipped; a bare ``C:`` is the empty set."""
    text = "# a broken system\nsystem s\nground: a b\n\nC:\nD: a b\n"

    system = parse_system(text)

    assert system.circuits == (frozenset(),)
    assert system.cocircuits == (frozenset({"a", "b"}),)


@pytest.mark.unit
@pytest.mark.parametrize(
    ("text", "line", "column", "reason"),
    [
        ("ground: a\n", 1, 1, "expected 'system <name>' first"),
        ("system s\nC: a\n", 2, 1, "expected 'ground: ...' after the header"),
        ("system s\nground: a a\n", 2, 9, "label 'a' is repeated"),
        ("system s\nground: a b\nC: a\nX: b\n", 4, 1, "cannot read 'X: b'"),
        ("system s\nground: a b\nC: a\nD: z\n", 4, 1, "outside the ground set"),
        ("system s\n", 1, 1, "found the end of the document"),
    ],
)
def test_system_errors_carry_positions(text: str, line: int, column: int, reason: str) -> None:
    """Every error names its line and column."""
    with pytest.raises(FormatError) as caught:
        parse_system(text, source="s.system")

    assert (caught.value.line, caught.value.column) == (line, column)
    assert reason in caught.value.reason
    assert str(caught.value).startswith(f"s.system:{line}:{column}:")


# ============================================================================
# Matroids
# ============================================================================


@pytest.mark.unit
def test_matroid_by_circuits_reads_back() -> None:
    """A circuit block parses to the matroid it lists."""
    matroid = Matroid.uniform(2, "abcd", name="u24")

    document = parse_matroid(render_matroid(matroid))

    assert document.name == "u24"
    assert document.matroid == matroid
    assert document.space is None


@pytest.mark.unit
def test_matroid_by_representation_reads_back() -> None:
    """A ``rep`` block keeps its subspace and yields the represented matroid."""
    space = Subspace.from_rows("abcd", 3, [(1, 1, 1, 0), (0, 1, 2, 1)])
    text = render_matroid(Matroid.from_representation(space), space, name="m")

    document = parse_matroid(text)

    assert text.splitlines()[2] == "rep GF(3)"
    assert document.space is not None
    assert document.space.matrix().tolist() == space.matrix().tolist()
    assert document.matroid == Matroid.from_representation(space)


@pytest.mark.unit
@pytest.mark.parametrize(
    ("text", "line", "reason"),
    [
        ("matroid m\nground: a b\nrep GF(2)\n1 0 1\n", 4, "row has 3 entries for 2 labels"),
        ("matroid m\nground: a b\ncircuit: a\nrep GF(2)\n", 4, "not both"),
        ("matroid m\nground: a b\nrep GF(4)\n1 1\n", 1, "prime"),
        ("matroid m\nground: a b\nrep GF2\n", 3, "expected 'rep GF(p)'"),
        ("matroid m\nground: a b\ncircuit: a\nedge a b\n", 4, "cannot read 'edge a b'"),
    ],
)
def test_matroid_errors_carry_positions(text: str, line: int, reason: str) -> None:
    """Malformed blocks are reported at the offending line."""
    with pytest.raises(FormatError) as caught:
        parse_matroid(text)

    assert caught.value.line == line
    assert reason in caught.value.reason


@pytest.mark.unit
def test_circuits_that_are_not_a_matroid_fail_the_axioms() -> None:
    """Listed circuits must satisfy the circuit axioms."""
    with pytest.raises(AxiomViolationError):
        parse_matroid("matroid m\nground: a b c\ncircuit: a b\ncircuit: b c\n")


# ============================================================================
# Presentations
# ============================================================================


@pytest.mark.unit
def test_presentation_reads_back(tgame_text: str) -> None:
    """The alternating tree survives a render and parse."""
    document = parse_presentation(tgame_text)

    assert document.presentation == gen_tgame()
    assert document.representation is None
    assert document.strategy == ()
    assert "real-edges: d0" in tgame_text.splitlines()


@pytest.mark.unit
def test_priorities_and_strategy_sections_are_kept() -> None:
    """Nonzero priorities are written and the strategy section is carried along."""
    presentation = gen_tgame().shifted(1)
    text = render_presentation(presentation, strategy="strategy\n  q0 at root plays {d0, c0}")

    document = parse_presentation(text)

    assert "root 0 odd c0->up priority: 1" in text.splitlines()
    assert document.presentation == presentation
    assert document.strategy == ("q0 at root plays {d0, c0}",)


@pytest.mark.unit
def test_representation_is_built_from_rep_blocks(triangles_text: str) -> None:
    """When every block is a ``rep`` block the presentation is representable."""
    document = parse_presentation(triangles_text)

    assert document.presentation.real_edges == frozenset("abcd")
    assert document.representation is not None
    assert document.representation.p == 2


@pytest.mark.unit
@pytest.mark.parametrize(
    ("edit", "line", "reason"),
    [
        (("real-edges: a b c d", "real-edges: a b c"), 14, "real-edges does not match"),
        (("transitions", "transitions\nleft 0 right a->"), 14, "cannot read interface pair"),
        (("matroid right", "matroid left"), 8, "node 'left' is defined twice"),
        (("core", "cord"), 12, "cannot read 'cord'"),
    ],
)
def test_presentation_errors_carry_positions(
    triangles_text: str, edit: tuple[str, str], line: int, reason: str
) -> None:
    """Section, transition and consistency errors point at their line."""
    with pytest.raises(FormatError) as caught:
        parse_presentation(triangles_text.replace(*edit), source="p.txt")

    assert caught.value.line == line
    assert reason in caught.value.reason

