"""Exception hierarchy shared by every toolkit component.

Each class carries the process exit status the CLI reports for it, so library
code raises domain errors and only the CLI translates them.
"""

from __future__ import annotations

from typing import TYPE_CHECKING, ClassVar

if TYPE_CHECKING:
    from collections.abc import Mapping


class MatroidToolkitError(Exception):
    """Base class for all toolkit errors."""

    exit_code: ClassVar[int] = 4


class InputError(MatroidToolkitError):
    """Malformed input or a violated operation precondition."""

    exit_code: ClassVar[int] = 2


class FormatError(InputError):
    """A text document could not be parsed.

    Attributes:
        source: Name of the document (file path or ``-`` for stdin).
        line: 1-based line number of the offending token.
        column: 1-based column of the offending token.
    """

    def __init__(self, message: str, *, source: str, line: int, column: int = 1) -> None:
        """Store the location and render it in front of the message."""
        self.source = source
        self.line = line
        self.column = column
        self.reason = message
        super().__init__(f"{source}:{line}:{column}: {message}")


class AxiomViolationError(MatroidToolkitError):
    """A set system failed an axiom; the verdict is negative, not a crash.

    Attributes:
        axiom: Name of the failed axiom, e.g. ``"(C2)"``.
        witness: Sets and elements that reproduce the failure.
        report: Full axiom report when one was computed.
    """

    exit_code: ClassVar[int] = 1

    def __init__(
        self,
        message: str,
        *,
        axiom: str,
        witness: tuple[object, ...] = (),
        report: object | None = None,
    ) -> None:
        """Record the failed axiom and its witness."""
        self.axiom = axiom
        self.witness = witness
        self.report = report
        super().__init__(message)


class ResourceCapError(MatroidToolkitError):
    """An exhaustive enumeration would exceed its configured cap."""

    exit_code: ClassVar[int] = 3

    def __init__(self, *, cap_name: str, limit: int, requested: int) -> None:
        """Describe which cap was hit and by how much."""
        self.cap_name = cap_name
        self.limit = limit
        self.requested = requested
        super().__init__(f"{cap_name} exceeded: requested {requested}, limit {limit}")


class InvariantViolationError(MatroidToolkitError):
    """An internal consistency check failed.

    These indicate a bug: the violated property is a theorem about the inputs.
    """

    exit_code: ClassVar[int] = 4

    def __init__(self, message: str, *, detail: Mapping[str, object] | None = None) -> None:
        """Keep the structured detail next to the message."""
        self.detail = dict(detail or {})
        super().__init__(message)


def check_cap(cap_name: str, limit: int, requested: int) -> None:
    """Raise ``ResourceCapError`` when ``requested`` exceeds ``limit``."""
    if requested > limit:
        raise ResourceCapError(cap_name=cap_name, limit=limit, requested=requested)
