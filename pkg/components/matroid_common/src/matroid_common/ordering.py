"""Canonical ordering of element labels and element sets.

Labels are compared as plain strings. Families of sets are listed by size
first and then lexicographically, which keeps every report byte-stable.
"""

from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from collections.abc import Iterable


def sort_labels(labels: Iterable[str]) -> tuple[str, ...]:
    """Return the distinct labels in canonical order."""
    return tuple(sorted(set(labels)))


def lex_key(elements: Iterable[str]) -> tuple[str, ...]:
    """Lexicographic key of a set: its sorted label tuple."""
    return tuple(sorted(elements))


def canonical_key(elements: frozenset[str]) -> tuple[int, tuple[str, ...]]:
    """Size-then-lexicographic key used for listing families of sets."""
    return (len(elements), lex_key(elements))


def canonical_sets(sets: Iterable[Iterable[str]]) -> tuple[frozenset[str], ...]:
    """Deduplicate ``sets`` and list them in canonical order."""
    unique = {frozenset(s) for s in sets}
    return tuple(sorted(unique, key=canonical_key))


def format_set(elements: Iterable[str]) -> str:
    """Render a set as ``{a, b, c}`` in canonical order."""
    return "{" + ", ".join(lex_key(elements)) + "}"
