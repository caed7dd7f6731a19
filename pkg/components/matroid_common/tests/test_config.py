"""Unit tests for ToolkitLimits resolution order."""

from __future__ import annotations

import pytest

from matroid_common import InputError, ToolkitLimits
from matroid_common.config import resolve_limits

pytestmark = pytest.mark.unit


def test_defaults_apply_when_environment_is_empty(monkeypatch: pytest.MonkeyPatch) -> None:
    """Without env vars or overrides the documented defaults are used."""
    for var in ("MATROID_REP_CAP", "MATROID_AXIOM_CAP", "MATROID_WORKERS"):
        monkeypatch.delenv(var, raising=False)

    limits = ToolkitLimits.from_env()

    assert limits.representation_cap == 16
    assert limits.axiom_cap == 12
    assert limits.workers == 1


def test_environment_overrides_defaults(monkeypatch: pytest.MonkeyPatch) -> None:
    """MATROID_* variables replace the defaults."""
    monkeypatch.setenv("MATROID_REP_CAP", "9")
    monkeypatch.setenv("MATROID_WORKERS", "4")

    limits = ToolkitLimits.from_env()

    assert limits.representation_cap == 9
    assert limits.workers == 4


def test_keyword_overrides_take_precedence_over_environment(
    monkeypatch: pytest.MonkeyPatch,
) -> None:
    """Explicit keyword values win over the environment."""
    monkeypatch.setenv("MATROID_AXIOM_CAP", "5")

    limits = ToolkitLimits.from_env(axiom_cap=7, induced_cap=None)

    assert limits.axiom_cap == 7
    assert limits.induced_cap == 10


def test_non_integer_environment_value_is_rejected(monkeypatch: pytest.MonkeyPatch) -> None:
    """A malformed env value names the variable and keeps the parse error as cause."""
    monkeypatch.setenv("MATROID_ARENA_CAP", "lots")

    with pytest.raises(InputError, match="MATROID_ARENA_CAP") as exc_info:
        ToolkitLimits.from_env()

    assert isinstance(exc_info.value.__cause__, ValueError)


def test_non_positive_values_are_rejected(monkeypatch: pytest.MonkeyPatch) -> None:
    """Zero and negative caps make no sense and are refused."""
    monkeypatch.setenv("MATROID_ORACLE_CAP", "0")

    with pytest.raises(InputError, match="positive"):
        ToolkitLimits.from_env()
    with pytest.raises(InputError, match="positive"):
        ToolkitLimits.from_env(workers=-1)


def test_unknown_override_is_rejected() -> None:
    """Typos in override names are reported instead of ignored."""
    with pytest.raises(InputError, match="Unknown limit"):
        ToolkitLimits.from_env(axiom_capp=3)


def test_resolve_limits_prefers_explicit_instance() -> None:
    """An explicit instance is returned untouched."""
    limits = ToolkitLimits(axiom_cap=3)

    assert resolve_limits(limits) is limits
