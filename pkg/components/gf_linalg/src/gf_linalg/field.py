"""Prime fields GF(p) and their elements."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache

from matroid_common import InputError

MAX_CHARACTERISTIC = 251


@cache
def is_prime(n: int) -> bool:
    """Trial-division primality test; ``n`` is at most a few hundred here."""
    if n < 2:  # noqa: PLR2004
        return False
    divisor = 2
    while divisor * divisor <= n:
        if n % divisor == 0:
            return False
        divisor += 1
    return True


def check_characteristic(p: int) -> int:
    """Validate that ``p`` is a supported prime characteristic.

    Raises:
        InputError: If ``p`` is not a prime in ``[2, 251]``.
    """
    if not is_prime(p) or p > MAX_CHARACTERISTIC:
        msg = f"GF({p}) is not supported: characteristic must be a prime <= {MAX_CHARACTERISTIC}"
        raise InputError(msg)
    return p


@dataclass(frozen=True, order=True)
class FieldElement:
    """A residue modulo the prime ``p``."""

    value: int
    p: int

    def __post_init__(self) -> None:
        """Reduce the value into ``[0, p)``."""
        check_characteristic(self.p)
        object.__setattr__(self, "value", self.value % self.p)

    def _coerce(self, other: FieldElement | int) -> int:
        if isinstance(other, FieldElement):
            if other.p != self.p:
                msg = f"Cannot combine GF({self.p}) and GF({other.p}) elements"
                raise InputError(msg)
            return other.value
        return other % self.p

    def __add__(self, other: FieldElement | int) -> FieldElement:
        return FieldElement(self.value + self._coerce(other), self.p)

    def __sub__(self, other: FieldElement | int) -> FieldElement:
        return FieldElement(self.value - self._coerce(other), self.p)

    def __mul__(self, other: FieldElement | int) -> FieldElement:
        return FieldElement(self.value * self._coerce(other), self.p)

    def __truediv__(self, other: FieldElement | int) -> FieldElement:
        return self * FieldElement(self._coerce(other), self.p).inverse()

    def __neg__(self) -> FieldElement:
        return FieldElement(-self.value, self.p)

    def __bool__(self) -> bool:
        return self.value != 0

    def inverse(self) -> FieldElement:
        """Multiplicative inverse.

        Raises:
            InputError: For the zero element.
        """
        if self.value == 0:
            msg = "Zero has no multiplicative inverse"
            raise InputError(msg)
        return FieldElement(pow(self.value, -1, self.p), self.p)

    def __str__(self) -> str:
        return str(self.value)
