"""Sparse vectors of k^E keyed by element label."""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

from matroid_common import InputError, sort_labels

from gf_linalg.field import FieldElement, check_characteristic

if TYPE_CHECKING:
    from collections.abc import Iterable, Mapping, Sequence


@dataclass(frozen=True)
class Vector:
    """A vector of GF(p)^ambient.

    Only nonzero coordinates are stored, in ambient order; the ambient set is
    explicit and canonically sorted, so equal vectors compare equal.
    """

    ambient: tuple[str, ...]
    p: int
    entries: tuple[tuple[str, int], ...]

    # ========================================================================
    # Construction
    # ========================================================================

    @classmethod
    def from_mapping(cls, ambient: Iterable[str], p: int, coords: Mapping[str, int]) -> Vector:
        """Build a vector from a label -> residue mapping.

        Raises:
            InputError: If a coordinate names a label outside ``ambient``.
        """
        check_characteristic(p)
        labels = sort_labels(ambient)
        outside = sorted(set(coords) - set(labels))
        if outside:
            msg = f"Coordinates {outside} are not in the ambient set"
            raise InputError(msg)
        entries = tuple(
            (label, coords[label] % p) for label in labels if coords.get(label, 0) % p
        )
        return cls(labels, p, entries)

    @classmethod
    def from_dense(cls, ambient: Sequence[str], p: int, values: Sequence[int]) -> Vector:
        """Build a vector from values listed in the order of ``ambient``.

        Raises:
            InputError: On a length mismatch or repeated labels.
        """
        if len(ambient) != len(values):
            msg = f"Expected {len(ambient)} coordinates, got {len(values)}"
            raise InputError(msg)
        if len(set(ambient)) != len(ambient):
            msg = "Ambient labels must be distinct"
            raise InputError(msg)
        return cls.from_mapping(ambient, p, dict(zip(ambient, values, strict=True)))

    @classmethod
    def zero(cls, ambient: Iterable[str], p: int) -> Vector:
        """The zero vector."""
        return cls.from_mapping(ambient, p, {})

    # ========================================================================
    # Access
    # ========================================================================

    def __getitem__(self, label: str) -> int:
        if label not in self.ambient:
            msg = f"'{label}' is not in the ambient set"
            raise InputError(msg)
        return dict(self.entries).get(label, 0)

    def element(self, label: str) -> FieldElement:
        """Coordinate ``label`` as a field element."""
        return FieldElement(self[label], self.p)

    @property
    def support(self) -> frozenset[str]:
        """Labels with a nonzero coordinate."""
        return frozenset(label for label, _ in self.entries)

    @property
    def is_zero(self) -> bool:
        """True for the zero vector."""
        return not self.entries

    def as_mapping(self) -> dict[str, int]:
        """Nonzero coordinates as a plain dict."""
        return dict(self.entries)

    def dense(self) -> tuple[int, ...]:
        """All coordinates in ambient order."""
        coords = dict(self.entries)
        return tuple(coords.get(label, 0) for label in self.ambient)

    # ========================================================================
    # Arithmetic
    # ========================================================================

    def _check_compatible(self, other: Vector) -> None:
        if self.p != other.p:
            msg = f"Field mismatch: GF({self.p}) vs GF({other.p})"
            raise InputError(msg)
        if self.ambient != other.ambient:
            msg = "Ambient mismatch between vectors"
            raise InputError(msg)

    def __add__(self, other: Vector) -> Vector:
        self._check_compatible(other)
        coords = self.as_mapping()
        for label, value in other.entries:
            coords[label] = (coords.get(label, 0) + value) % self.p
        return Vector.from_mapping(self.ambient, self.p, coords)

    def __neg__(self) -> Vector:
        return self.scale(-1)

    def __sub__(self, other: Vector) -> Vector:
        return self + (-other)

    def scale(self, factor: int) -> Vector:
        """Multiply every coordinate by ``factor``."""
        coords = {label: value * factor for label, value in self.entries}
        return Vector.from_mapping(self.ambient, self.p, coords)

    def dot(self, other: Vector) -> int:
        """Standard bilinear form, reduced mod p."""
        self._check_compatible(other)
        mine = dict(self.entries)
        return sum(mine.get(label, 0) * value for label, value in other.entries) % self.p

    # ========================================================================
    # Changing the ambient set
    # ========================================================================

    def restrict(self, labels: Iterable[str]) -> Vector:
        """Coordinate projection onto ``labels`` (a subset of the ambient set)."""
        target = sort_labels(labels)
        outside = sorted(set(target) - set(self.ambient))
        if outside:
            msg = f"Cannot restrict to labels outside the ambient set: {outside}"
            raise InputError(msg)
        keep = set(target)
        coords = {label: value for label, value in self.entries if label in keep}
        return Vector.from_mapping(target, self.p, coords)

    def embed(self, ambient: Iterable[str]) -> Vector:
        """Extend by zeros into a larger ambient set."""
        target = sort_labels(ambient)
        missing = sorted(set(self.ambient) - set(target))
        if missing:
            msg = f"Cannot embed: target ambient lacks {missing}"
            raise InputError(msg)
        return Vector.from_mapping(target, self.p, self.as_mapping())

    def relabel(self, mapping: Mapping[str, str]) -> Vector:
        """Rename ambient labels; labels absent from ``mapping`` keep their name."""
        renamed = [mapping.get(label, label) for label in self.ambient]
        if len(set(renamed)) != len(renamed):
            msg = "Relabelling must be injective on the ambient set"
            raise InputError(msg)
        coords = {mapping.get(label, label): value for label, value in self.entries}
        return Vector.from_mapping(renamed, self.p, coords)

    def __str__(self) -> str:
        body = ", ".join(f"{label}:{value}" for label, value in self.entries)
        return f"({body})"
