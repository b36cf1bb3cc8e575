"""Exact coefficient arithmetic: rationals and Gaussian rationals.

Rationals are stdlib ``fractions.Fraction`` values, which already maintain
the canonical reduced form (positive denominator, gcd 1).  ``GaussRat``
extends them to Q(i), the coefficient field used by every polynomial in
this package.  All values are immutable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

# The canonical rational type.  Fraction already guarantees den > 0 and
# gcd(|num|, den) = 1 after every operation, so no extra normalization
# layer is needed.
Rat = Fraction

RatInput = Union[int, Fraction, str]


def as_rat(value: RatInput) -> Fraction:
    """Coerce an int, Fraction or "num/den" string to a canonical rational."""
    return Fraction(value)


def format_rat(q: Fraction) -> str:
    """Serialize as "num/den", omitting the denominator when it is 1."""
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class GaussRat:
    """A Gaussian rational re + im*i with exact components."""

    re: Fraction
    im: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "im", Fraction(self.im))

    # -- predicates ---------------------------------------------------

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def is_real(self) -> bool:
        return self.im == 0

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -- arithmetic ---------------------------------------------------

    def _coerce(self, other: object) -> "GaussRat":
        if isinstance(other, GaussRat):
            return other
        if isinstance(other, (int, Fraction)):
            return GaussRat(Fraction(other))
        return NotImplemented

    def __add__(self, other: object) -> "GaussRat":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussRat(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self) -> "GaussRat":
        return GaussRat(-self.re, -self.im)

    def __sub__(self, other: object) -> "GaussRat":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussRat(self.re - other.re, self.im - other.im)

    def __rsub__(self, other: object) -> "GaussRat":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other: object) -> "GaussRat":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussRat(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> "GaussRat":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by zero Gaussian rational")
        norm = other.re * other.re + other.im * other.im
        return GaussRat(
            (self.re * other.re + self.im * other.im) / norm,
            (self.im * other.re - self.re * other.im) / norm,
        )

    def __rtruediv__(self, other: object) -> "GaussRat":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def conjugate(self) -> "GaussRat":
        return GaussRat(self.re, -self.im)

    # -- serialization ------------------------------------------------

    def __str__(self) -> str:
        return format_gauss(self)

    def __repr__(self) -> str:
        return f"GaussRat({self.re!r}, {self.im!r})"


GaussInput = Union[int, Fraction, GaussRat]


def as_gauss(value: GaussInput) -> GaussRat:
    """Coerce an int, Fraction or GaussRat to GaussRat."""
    if isinstance(value, GaussRat):
        return value
    return GaussRat(Fraction(value))


def format_gauss(z: GaussRat) -> str:
    """Serialize as "re+im*i" with "num/den" component syntax."""
    if z.im == 0:
        return format_rat(z.re)
    sign = "+" if z.im > 0 else "-"
    return f"{format_rat(z.re)}{sign}{format_rat(abs(z.im))}*i"


ZERO = GaussRat(Fraction(0))
ONE = GaussRat(Fraction(1))
I = GaussRat(Fraction(0), Fraction(1))
