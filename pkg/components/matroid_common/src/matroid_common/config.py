"""Enumeration limits, loaded from the environment with keyword overrides."""

from __future__ import annotations

import os
from dataclasses import dataclass, fields

from matroid_common.exceptions import InputError

# ============================================================================
# Environment variable names
# ============================================================================

_ENV_VARS: dict[str, str] = {
    "representation_cap": "MATROID_REP_CAP",
    "vector_cap": "MATROID_VECTOR_CAP",
    "axiom_cap": "MATROID_AXIOM_CAP",
    "induced_cap": "MATROID_INDUCED_CAP",
    "tree_node_cap": "MATROID_TREE_NODE_CAP",
    "arena_cap": "MATROID_ARENA_CAP",
    "oracle_cap": "MATROID_ORACLE_CAP",
    "workers": "MATROID_WORKERS",
}


# ============================================================================
# Limits
# ============================================================================


@dataclass(frozen=True)
class ToolkitLimits:
    """Caps for every exponential enumeration in the toolkit.

    Exceeding a cap raises ``ResourceCapError``; nothing is ever truncated
    silently.
    """

    representation_cap: int = 16
    vector_cap: int = 1 << 20
    axiom_cap: int = 12
    induced_cap: int = 10
    tree_node_cap: int = 512
    arena_cap: int = 200_000
    oracle_cap: int = 65_536
    workers: int = 1

    @classmethod
    def from_env(cls, **overrides: int | None) -> ToolkitLimits:
        """Build limits from ``MATROID_*`` environment variables.

        Args:
            **overrides: Field values that take precedence over the
                environment. ``None`` values are ignored.

        Returns:
            The resolved limits.

        Raises:
            InputError: If an override names no field, or an environment
                value is not a positive integer.
        """
        known = {f.name for f in fields(cls)}
        unknown = sorted(set(overrides) - known)
        if unknown:
            msg = f"Unknown limit(s): {', '.join(unknown)}"
            raise InputError(msg)

        values: dict[str, int] = {}
        for name, env_var in _ENV_VARS.items():
            override = overrides.get(name)
            if override is not None:
                values[name] = _positive(override, name)
                continue
            raw = os.getenv(env_var)
            if raw is None or not raw.strip():
                continue
            try:
                parsed = int(raw)
            except ValueError as exc:
                msg = f"{env_var} must be an integer, got {raw!r}"
                raise InputError(msg) from exc
            values[name] = _positive(parsed, env_var)
        return cls(**values)


def _positive(value: int, name: str) -> int:
    if value <= 0:
        msg = f"{name} must be positive, got {value}"
        raise InputError(msg)
    return value


def resolve_limits(limits: ToolkitLimits | None) -> ToolkitLimits:
    """Return ``limits`` or, when absent, the environment-derived defaults."""
    return limits if limits is not None else ToolkitLimits.from_env()
