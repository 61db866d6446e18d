"""Exact dyadic-rational probabilities.

Every probability in an N-step +-1 walk is an integer number of paths
divided by 2**N, so the natural value class is the dyadic rationals in
[0, 1].  Keeping them exact turns every distribution identity in this
package into an integer statement that tests can assert with ``==``,
with no tolerances to tune.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import Iterable

__all__ = ["DyadicProb", "dyadic_sum"]

_LITERAL_RE = re.compile(r"^(\d+)/2\^(\d+)$")


def _canonical(mantissa: int, exponent: int) -> tuple[int, int]:
    """Strip common factors of two; (0, e) collapses to (0, 0)."""
    if mantissa == 0:
        return 0, 0
    shift = min((mantissa & -mantissa).bit_length() - 1, exponent)
    return mantissa >> shift, exponent - shift


@total_ordering
@dataclass(frozen=True, slots=True)
class DyadicProb:
    """A probability ``mantissa / 2**exponent`` in canonical form.

    Canonical means the mantissa is odd or the pair is (0, 0), so equal
    values always compare equal structurally.  Values outside [0, 1] are
    rejected: this type carries probabilities, not general dyadics.
    """

    mantissa: int
    exponent: int = 0

    def __post_init__(self) -> None:
        if self.mantissa < 0 or self.exponent < 0:
            raise ValueError(
                f"dyadic probability needs mantissa >= 0 and exponent >= 0, "
                f"got {self.mantissa}/2^{self.exponent}"
            )
        m, e = _canonical(self.mantissa, self.exponent)
        if m > (1 << e):
            raise ValueError(f"{m}/2^{e} exceeds 1, not a probability")
        object.__setattr__(self, "mantissa", m)
        object.__setattr__(self, "exponent", e)

    # -- conversions ------------------------------------------------------

    @classmethod
    def from_fraction(cls, value: Fraction) -> "DyadicProb":
        den = value.denominator
        if den & (den - 1):
            raise ValueError(f"{value} has a non-power-of-two denominator")
        return cls(value.numerator, den.bit_length() - 1)

    @classmethod
    def from_literal(cls, text: str) -> "DyadicProb":
        m = _LITERAL_RE.match(text.strip())
        if m is None:
            raise ValueError(f"not a dyadic literal: {text!r}")
        return cls(int(m.group(1)), int(m.group(2)))

    def as_fraction(self) -> Fraction:
        return Fraction(self.mantissa, 1 << self.exponent)

    def literal(self) -> str:
        """Canonical text form, e.g. ``3/2^2``; parseable by from_literal."""
        return f"{self.mantissa}/2^{self.exponent}"

    def __float__(self) -> float:
        # big-int true division rounds correctly even for huge exponents
        return self.mantissa / (1 << self.exponent)

    def __str__(self) -> str:
        return self.literal()

    def __bool__(self) -> bool:
        return self.mantissa != 0

    # -- arithmetic (closed over [0, 1]; violations raise) ----------------

    def __add__(self, other: "DyadicProb") -> "DyadicProb":
        if not isinstance(other, DyadicProb):
            return NotImplemented
        e = max(self.exponent, other.exponent)
        m = (self.mantissa << (e - self.exponent)) + (
            other.mantissa << (e - other.exponent)
        )
        return DyadicProb(m, e)

    def __sub__(self, other: "DyadicProb") -> "DyadicProb":
        if not isinstance(other, DyadicProb):
            return NotImplemented
        e = max(self.exponent, other.exponent)
        m = (self.mantissa << (e - self.exponent)) - (
            other.mantissa << (e - other.exponent)
        )
        if m < 0:
            raise ValueError(f"{self} - {other} is negative")
        return DyadicProb(m, e)

    def __mul__(self, other: "DyadicProb") -> "DyadicProb":
        if not isinstance(other, DyadicProb):
            return NotImplemented
        return DyadicProb(self.mantissa * other.mantissa, self.exponent + other.exponent)

    def halved(self) -> "DyadicProb":
        return DyadicProb(self.mantissa, self.exponent + 1)

    def __lt__(self, other: "DyadicProb") -> bool:
        if not isinstance(other, DyadicProb):
            return NotImplemented
        return (self.mantissa << other.exponent) < (other.mantissa << self.exponent)


DyadicProb.ZERO = DyadicProb(0, 0)
DyadicProb.ONE = DyadicProb(1, 0)


def dyadic_sum(values: Iterable[DyadicProb]) -> DyadicProb:
    """Exact sum; accumulates raw mantissas and canonicalizes once."""
    acc_m, acc_e = 0, 0
    for v in values:
        e = max(acc_e, v.exponent)
        acc_m = (acc_m << (e - acc_e)) + (v.mantissa << (e - v.exponent))
        acc_e = e
    return DyadicProb(acc_m, acc_e)
