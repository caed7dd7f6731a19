"""Command-line driver for the matroid toolkit: text formats, reports and the selftest."""

from __future__ import annotations

from matroid_cli.cli import Outcome, build_parser, main
from matroid_cli.formats import (
    MatroidDocument,
    PresentationDocument,
    parse_matroid,
    parse_presentation,
    parse_system,
    render_matroid,
    render_presentation,
    render_system,
)
from matroid_cli.selftest import CHECKS, FULL, QUICK, CheckFailedError, Scale, run_selftest

__all__ = [
    "CHECKS",
    "FULL",
    "QUICK",
    "CheckFailedError",
    "MatroidDocument",
    "Outcome",
    "PresentationDocument",
    "Scale",
    "build_parser",
    "main",
    "parse_matroid",
    "parse_presentation",
    "parse_system",
    "render_matroid",
    "render_presentation",
    "render_system",
    "run_selftest",
]
