"""Line-oriented text formats for set systems, matroids and presentations.

Set systems::

    system <name>
    ground: e1 e2 ...
    C: e1 e2
    D: e2 e3

Matroids list their circuits or a representation, rows in ground order::

    matroid <name>
    ground: a b c
    circuit: a b
    rep GF(3)
    1 2 0

Presentations hold matroid blocks in a ``prefix`` and a ``core`` section,
one ``source name target a->x [priority: n]`` line per transition, an
optional ``real-edges:`` line that must match the computed real edges, and an
optional ``strategy`` section that is carried along verbatim. Blank lines and
lines starting with ``#`` are ignored everywhere.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import TYPE_CHECKING, NoReturn

from gf_linalg import Subspace
from matroid_common import FormatError, InputError
from matroid_kernel import Matroid
from matroid_trees import Transition, TreePresentation, TreeRepresentation
from orthogonality_axioms import SetSystemPair

if TYPE_CHECKING:
    from collections.abc import Iterable

    from matroid_common import ToolkitLimits

_FIELD = re.compile(r"GF\((\d+)\)")
_INTEGER = re.compile(r"-?\d+")
_PRIORITY = "priority:"


# ============================================================================
# Reading lines
# ============================================================================


@dataclass(frozen=True)
class _Line:
    number: int
    raw: str
    tokens: tuple[str, ...]

    @property
    def keyword(self) -> str:
        return self.tokens[0]

    def column(self, token: str) -> int:
        return self.raw.find(token) + 1


class _Reader:
    """A cursor over the meaningful lines of one document."""

    def __init__(self, text: str, source: str) -> None:
        self.source = source
        self._lines: list[_Line] = []
        for number, raw in enumerate(text.splitlines(), start=1):
            tokens = tuple(raw.split())
            if tokens and not tokens[0].startswith("#"):
                self._lines.append(_Line(number, raw, tokens))
        self._end = max(len(text.splitlines()), 1)
        self._at = 0

    def peek(self) -> _Line | None:
        return self._lines[self._at] if self._at < len(self._lines) else None

    def next(self, expected: str) -> _Line:
        line = self.peek()
        if line is None:
            self.fail(f"expected {expected}, found the end of the document")
        self._at += 1
        return line

    def fail(self, message: str, line: _Line | None = None, token: str | None = None) -> NoReturn:
        number = self._end if line is None else line.number
        column = 1 if line is None or token is None else line.column(token)
        raise FormatError(message, source=self.source, line=number, column=column)

    def wrap(self, exc: InputError, line: _Line) -> NoReturn:
        raise FormatError(str(exc), source=self.source, line=line.number) from exc


def _header(reader: _Reader, keyword: str) -> _Line:
    line = reader.next(f"'{keyword} <name>'")
    if line.keyword != keyword or len(line.tokens) != 2:  # noqa: PLR2004
        reader.fail(f"expected '{keyword} <name>' first", line, line.keyword)
    return line


def _labels(reader: _Reader, line: _Line) -> list[str]:
    """The labels after ``key:``, checked for repeats."""
    labels = list(line.tokens[1:])
    for position, label in enumerate(labels):
        if label in labels[:position]:
            reader.fail(f"label '{label}' is repeated", line, label)
    return labels


def _ground(reader: _Reader) -> list[str]:
    line = reader.next("'ground: ...'")
    if line.keyword != "ground:":
        reader.fail("expected 'ground: ...' after the header", line, line.keyword)
    return _labels(reader, line)


# ============================================================================
# Set systems
# ============================================================================


def parse_system(text: str, *, source: str = "-") -> SetSystemPair:
    """Read a set-system document.

    An empty ``C:`` or ``D:`` line stands for the empty member.

    Raises:
        FormatError: On a missing header or ground line, an unknown keyword,
            or members with labels outside the ground set.
    """
    reader = _Reader(text, source)
    name = _header(reader, "system").tokens[1]
    ground = _ground(reader)
    families: dict[str, list[list[str]]] = {"C:": [], "D:": []}
    while (line := reader.peek()) is not None:
        reader.next("a member")
        if line.keyword not in families:
            reader.fail(f"cannot read '{line.raw.strip()}'", line, line.keyword)
        families[line.keyword].append(_labels(reader, line))
        try:
            SetSystemPair.build(ground, families["C:"], families["D:"])
        except InputError as exc:
            reader.wrap(exc, line)
    return SetSystemPair.build(ground, families["C:"], families["D:"], name=name)


def render_system(system: SetSystemPair) -> str:
    """Write ``system`` with both families in canonical order."""
    lines = [f"system {system.name or 'S'}", _join("ground:", system.ground)]
    lines.extend(_join("C:", sorted(c)) for c in system.circuits)
    lines.extend(_join("D:", sorted(d)) for d in system.cocircuits)
    return "\n".join(lines) + "\n"


def _join(key: str, labels: Iterable[str]) -> str:
    return " ".join([key, *labels])


# ============================================================================
# Matroids
# ============================================================================


@dataclass(frozen=True)
class MatroidDocument:
    """A named matroid, with the subspace it was given by if any."""

    name: str
    matroid: Matroid
    space: Subspace | None = None


def _field(reader: _Reader, line: _Line) -> int:
    match = _FIELD.fullmatch(line.tokens[1]) if len(line.tokens) == 2 else None  # noqa: PLR2004
    if match is None:
        reader.fail("expected 'rep GF(p)'", line, line.keyword)
    return int(match.group(1))


def _read_matroid(reader: _Reader, limits: ToolkitLimits | None) -> MatroidDocument:
    """Read one ``matroid`` block, stopping at the first line it cannot use."""
    start = _header(reader, "matroid")
    name = start.tokens[1]
    ground = _ground(reader)
    circuits: list[list[str]] = []
    rows: list[list[int]] = []
    p: int | None = None
    while (line := reader.peek()) is not None:
        if line.keyword == "circuit:":
            if p is not None:
                reader.fail("a matroid takes circuits or a representation, not both", line)
            circuits.append(_labels(reader, line))
        elif line.keyword == "rep":
            if p is not None or circuits:
                reader.fail("a matroid takes circuits or a representation, not both", line)
            p = _field(reader, line)
        elif p is not None and all(_INTEGER.fullmatch(t) for t in line.tokens):
            if len(line.tokens) != len(ground):
                reader.fail(f"row has {len(line.tokens)} entries for {len(ground)} labels", line)
            rows.append([int(t) for t in line.tokens])
        else:
            break
        reader.next("a matroid line")
    try:
        if p is None:
            return MatroidDocument(
                name, Matroid.from_circuits(ground, circuits, name=name, limits=limits)
            )
        space = Subspace.from_rows(ground, p, rows)
        return MatroidDocument(
            name, Matroid.from_representation(space, name=name, limits=limits), space
        )
    except InputError as exc:
        reader.wrap(exc, start)


def parse_matroid(
    text: str, *, source: str = "-", limits: ToolkitLimits | None = None
) -> MatroidDocument:
    """Read a matroid document.

    Raises:
        FormatError: On a malformed block or trailing lines.
        AxiomViolationError: If listed circuits are not the circuits of a
            matroid.
    """
    reader = _Reader(text, source)
    document = _read_matroid(reader, limits)
    if (line := reader.peek()) is not None:
        reader.fail(f"cannot read '{line.raw.strip()}'", line, line.keyword)
    return document


def render_matroid(matroid: Matroid, space: Subspace | None = None, *, name: str = "") -> str:
    """Write ``matroid`` by its circuits, or by ``space`` when given."""
    lines = [f"matroid {name or matroid.name or 'M'}", _join("ground:", matroid.ground)]
    if space is None:
        lines.extend(_join("circuit:", sorted(c)) for c in matroid.circuits)
    else:
        lines.append(f"rep GF({space.p})")
        lines.extend(" ".join(str(x) for x in row) for row in space.matrix().tolist())
    return "\n".join(lines) + "\n"


# ============================================================================
# Presentations
# ============================================================================


@dataclass(frozen=True)
class PresentationDocument:
    """A presentation with its representation and carried strategy section.

    Attributes:
        presentation: The validated presentation.
        representation: Present when every matroid block was a ``rep`` block.
        strategy: Lines of the ``strategy`` section, without the header.
    """

    presentation: TreePresentation
    representation: TreeRepresentation | None = None
    strategy: tuple[str, ...] = ()


def _read_transition(reader: _Reader, line: _Line) -> Transition:
    tokens = list(line.tokens)
    priority = 0
    if _PRIORITY in tokens:
        at = tokens.index(_PRIORITY)
        if at != len(tokens) - 2 or not tokens[-1].isdigit():  # noqa: PLR2004
            reader.fail("expected 'priority: n' at the end of the line", line, _PRIORITY)
        priority = int(tokens[-1])
        tokens = tokens[:at]
    if len(tokens) < 4:  # noqa: PLR2004
        reader.fail("expected 'source name target a->x ...'", line, line.keyword)
    mapping: dict[str, str] = {}
    for pair in tokens[3:]:
        here, arrow, there = pair.partition("->")
        if not arrow or not here or not there or here in mapping:
            reader.fail(f"cannot read interface pair '{pair}'", line, pair)
        mapping[here] = there
    try:
        return Transition.build(tokens[0], tokens[1], tokens[2], mapping, priority)
    except InputError as exc:
        reader.wrap(exc, line)


def _read_blocks(
    reader: _Reader, limits: ToolkitLimits | None, into: dict[str, MatroidDocument]
) -> None:
    while (line := reader.peek()) is not None and line.keyword == "matroid":
        document = _read_matroid(reader, limits)
        if document.name in into:
            reader.fail(f"node '{document.name}' is defined twice", line, document.name)
        into[document.name] = document


def parse_presentation(  # noqa: C901
    text: str, *, source: str = "-", limits: ToolkitLimits | None = None
) -> PresentationDocument:
    """Read a presentation document.

    Raises:
        FormatError: On malformed sections, a structurally invalid
            presentation, or a ``real-edges`` line that does not match.
    """
    reader = _Reader(text, source)
    header = _header(reader, "presentation")
    name = header.tokens[1]
    root: str | None = None
    if (line := reader.peek()) is not None and line.keyword == "root":
        reader.next("'root <node>'")
        if len(line.tokens) != 2:  # noqa: PLR2004
            reader.fail("expected 'root <node>'", line)
        root = line.tokens[1]
    prefix: dict[str, MatroidDocument] = {}
    states: dict[str, MatroidDocument] = {}
    transitions: list[Transition] = []
    declared: tuple[_Line, list[str]] | None = None
    strategy: list[str] = []
    while (line := reader.peek()) is not None:
        reader.next("a section")
        if line.tokens == ("prefix",):
            _read_blocks(reader, limits, prefix)
        elif line.tokens == ("core",):
            _read_blocks(reader, limits, states)
        elif line.tokens == ("transitions",):
            while (entry := reader.peek()) is not None and "->" in entry.raw:
                transitions.append(_read_transition(reader, reader.next("a transition")))
        elif line.keyword == "real-edges:":
            declared = (line, _labels(reader, line))
        elif line.tokens == ("strategy",):
            while reader.peek() is not None:
                strategy.append(reader.next("a strategy line").raw.strip())
        else:
            reader.fail(f"cannot read '{line.raw.strip()}'", line, line.keyword)

    try:
        presentation = TreePresentation.build(
            {k: d.matroid for k, d in prefix.items()},
            {k: d.matroid for k, d in states.items()},
            transitions,
            root=root,
            name=name,
            limits=limits,
        )
    except InputError as exc:
        reader.wrap(exc, header)
    if declared is not None and frozenset(declared[1]) != presentation.real_edges:
        reader.fail("real-edges does not match the edges of the prefix", declared[0])

    documents = {**prefix, **states}
    representation = None
    if documents and all(d.space is not None for d in documents.values()):
        spaces = {k: d.space for k, d in documents.items() if d.space is not None}
        try:
            representation = TreeRepresentation.build(
                presentation.matroids, spaces, limits=limits
            )
        except InputError as exc:
            reader.wrap(exc, header)
    return PresentationDocument(presentation, representation, tuple(strategy))


def render_presentation(
    presentation: TreePresentation,
    representation: TreeRepresentation | None = None,
    *,
    strategy: str = "",
) -> str:
    """Write ``presentation`` with matroids inline.

    Matroid blocks use ``rep`` rows when ``representation`` is given;
    ``strategy`` is appended as rendered by a strategy automaton.
    """

    def block(key: str, matroid: Matroid) -> str:
        space = None if representation is None else representation.space(key)
        return render_matroid(matroid, space, name=key).rstrip("\n")

    lines = [f"presentation {presentation.name or 'P'}", f"root {presentation.root}", "prefix"]
    lines.extend(block(k, presentation.prefix.matroids[k]) for k in presentation.prefix.nodes)
    lines.append("core")
    lines.extend(block(k, presentation.states[k]) for k in sorted(presentation.states))
    lines.append("transitions")
    for t in presentation.transitions:
        pairs = " ".join(f"{a}->{b}" for a, b in t.mapping)
        suffix = f" {_PRIORITY} {t.priority}" if t.priority else ""
        lines.append(f"{t.source} {t.name} {t.target} {pairs}{suffix}")
    lines.append(_join("real-edges:", sorted(presentation.real_edges)))
    if strategy:
        lines.append(strategy)
    return "\n".join(lines) + "\n"
