"""The ten degenerate polynomial families and their generating functions.

Each family can be built two independent ways: by extracting coefficients
of its defining generating-function product (``family``) and by the
closed-form double sums (``family_closed``).  The identity engine compares
the two routes; they must agree as exact polynomials.

The classical (l = 0) counterparts are built from scratch by the same
kernel-inversion machinery with plain exponentials, and serve as the
independent oracle for all limit checks.
"""

from __future__ import annotations

import enum
import math
from fractions import Fraction
from functools import lru_cache
from typing import List, Tuple

from .combinat import (
    StirlingKind,
    falling_factorial,
    gen_falling_factorial,
    stirling_table,
)
from .egfseries import EgfSeries
from .multipoly import MPoly, PolyInput
from .numeric import GaussRat


class FamilyKind(enum.Enum):
    """The ten families, keyed by their CLI names."""

    DEG_BERNOULLI_NUM = "deg-bernoulli-num"
    DEG_EULER_NUM = "deg-euler-num"
    DEG_BERNOULLI = "deg-bernoulli"
    DEG_EULER = "deg-euler"
    DEG_COSINE = "deg-cosine"
    DEG_SINE = "deg-sine"
    DEG_COS_EULER = "deg-cos-euler"
    DEG_SIN_EULER = "deg-sin-euler"
    DEG_COS_BERNOULLI = "deg-cos-bernoulli"
    DEG_SIN_BERNOULLI = "deg-sin-bernoulli"


# (kernel, uses exp_l^x factor, trig factor) for each defining product.
_STRUCTURE = {
    FamilyKind.DEG_BERNOULLI_NUM: ("bernoulli", False, None),
    FamilyKind.DEG_EULER_NUM: ("euler", False, None),
    FamilyKind.DEG_BERNOULLI: ("bernoulli", True, None),
    FamilyKind.DEG_EULER: ("euler", True, None),
    FamilyKind.DEG_COSINE: (None, True, "cos"),
    FamilyKind.DEG_SINE: (None, True, "sin"),
    FamilyKind.DEG_COS_EULER: ("euler", True, "cos"),
    FamilyKind.DEG_SIN_EULER: ("euler", True, "sin"),
    FamilyKind.DEG_COS_BERNOULLI: ("bernoulli", True, "cos"),
    FamilyKind.DEG_SIN_BERNOULLI: ("bernoulli", True, "sin"),
}

SINE_KINDS = (FamilyKind.DEG_SINE, FamilyKind.DEG_SIN_EULER, FamilyKind.DEG_SIN_BERNOULLI)


class FamilySequence:
    """Polynomials polys[0..order] of one family."""

    __slots__ = ("kind", "order", "polys")

    def __init__(self, kind: FamilyKind, order: int, polys: Tuple[MPoly, ...]):
        self.kind = kind
        self.order = order
        self.polys = polys

    def __getitem__(self, n: int) -> MPoly:
        return self.polys[n]

    def __len__(self) -> int:
        return len(self.polys)


def deg_exp_series(exponent: PolyInput, order: int) -> EgfSeries:
    """Series of the degenerate exponential with the given exponent.

    Coefficient n is the generalized falling factorial (exponent)_{n,l}.
    """
    exponent = MPoly.coerce(exponent)
    coeffs = [MPoly.one()]
    lam = MPoly.variable("l")
    for n in range(1, order + 1):
        coeffs.append(coeffs[-1] * (exponent - lam.scale(n - 1)))
    return EgfSeries(order, coeffs)


@lru_cache(maxsize=None)
def deg_cos_sin_series(order: int) -> Tuple[EgfSeries, EgfSeries]:
    """Degenerate cosine and sine series, via (E(iy) +/- E(-iy)) / 2, /2i."""
    iy = MPoly.variable("y").scale(GaussRat(Fraction(0), Fraction(1)))
    plus = deg_exp_series(iy, order)
    minus = deg_exp_series(-iy, order)
    cos = (plus + minus).scale(Fraction(1, 2))
    # 1/(2i) = -i/2
    sin = (plus - minus).scale(GaussRat(Fraction(0), Fraction(-1, 2)))
    return cos, sin


def deg_cos_sin_closed(order: int) -> Tuple[EgfSeries, EgfSeries]:
    """Same two series by the first-kind-Stirling closed forms."""
    s1 = stirling_table(StirlingKind.FIRST, order)
    lam = MPoly.variable("l")
    yv = MPoly.variable("y")
    cos_coeffs: List[MPoly] = []
    sin_coeffs: List[MPoly] = []
    for n in range(order + 1):
        c = MPoly.zero()
        for k in range(n // 2 + 1):
            c = c + (lam ** (n - 2 * k) * yv ** (2 * k) * s1.entry(n, 2 * k)).scale(
                (-1) ** k
            )
        cos_coeffs.append(c)
        s = MPoly.zero()
        for k in range((n - 1) // 2 + 1) if n >= 1 else []:
            s = s + (
                lam ** (n - 2 * k - 1) * yv ** (2 * k + 1) * s1.entry(n, 2 * k + 1)
            ).scale((-1) ** k)
        sin_coeffs.append(s)
    return EgfSeries(order, cos_coeffs), EgfSeries(order, sin_coeffs)


@lru_cache(maxsize=None)
def kernel_series(which: str, order: int) -> EgfSeries:
    """The Bernoulli or Euler kernel as a series; coefficient n is the
    degenerate Bernoulli/Euler number.

    bernoulli: invert h with h_n = (1)_{n+1,l} / (n+1), which is the
    e_l(t)-1 series shifted down by one power of t so that h_0 = 1.
    euler: invert g with g_0 = 1 and g_n = (1)_{n,l} / 2 for n >= 1.
    """
    if which == "bernoulli":
        h = EgfSeries.from_function(
            order,
            lambda n: gen_falling_factorial(1, n + 1).scale(Fraction(1, n + 1)),
        )
        return h.invert()
    if which == "euler":
        g = EgfSeries.from_function(
            order,
            lambda n: MPoly.one()
            if n == 0
            else gen_falling_factorial(1, n).scale(Fraction(1, 2)),
        )
        return g.invert()
    raise ValueError(f"unknown kernel {which!r}; expected 'bernoulli' or 'euler'")


@lru_cache(maxsize=None)
def _family_series(kind: FamilyKind, order: int) -> EgfSeries:
    kernel, uses_x, trig = _STRUCTURE[kind]
    series = None
    if kernel is not None:
        series = kernel_series(kernel, order)
    if uses_x:
        expx = deg_exp_series(MPoly.variable("x"), order)
        series = expx if series is None else series * expx
    if trig is not None:
        cos, sin = deg_cos_sin_series(order)
        factor = cos if trig == "cos" else sin
        series = factor if series is None else series * factor
    return series


@lru_cache(maxsize=None)
def family(kind: FamilyKind, order: int) -> FamilySequence:
    """Generating-function route: coefficients of the defining product."""
    series = _family_series(kind, order)
    return FamilySequence(kind, order, tuple(series.coeffs))


@lru_cache(maxsize=None)
def family_closed(kind: FamilyKind, order: int) -> FamilySequence:
    """Closed-form route: the theorem double sums, term by term."""
    if kind in (FamilyKind.DEG_BERNOULLI_NUM, FamilyKind.DEG_EULER_NUM):
        raise ValueError(f"{kind.value} has no closed-form route")
    if kind in (FamilyKind.DEG_BERNOULLI, FamilyKind.DEG_EULER):
        # Binomial expansion over the corresponding numbers.
        nums = family(
            FamilyKind.DEG_BERNOULLI_NUM
            if kind is FamilyKind.DEG_BERNOULLI
            else FamilyKind.DEG_EULER_NUM,
            order,
        )
        xv = MPoly.variable("x")
        polys = []
        for n in range(order + 1):
            acc = MPoly.zero()
            for l in range(n + 1):
                acc = acc + (
                    nums[l] * gen_falling_factorial(xv, n - l)
                ).scale(math.comb(n, l))
            polys.append(acc)
        return FamilySequence(kind, order, tuple(polys))

    _, _, trig = _STRUCTURE[kind]
    if kind in (FamilyKind.DEG_COSINE, FamilyKind.DEG_SINE):
        inner = {
            n: gen_falling_factorial(MPoly.variable("x"), n) for n in range(order + 1)
        }
    elif kind in (FamilyKind.DEG_COS_EULER, FamilyKind.DEG_SIN_EULER):
        inner = dict(enumerate(family(FamilyKind.DEG_EULER, order).polys))
    else:
        inner = dict(enumerate(family(FamilyKind.DEG_BERNOULLI, order).polys))

    s1 = stirling_table(StirlingKind.FIRST, order)
    lam = MPoly.variable("l")
    yv = MPoly.variable("y")
    polys = []
    for n in range(order + 1):
        acc = MPoly.zero()
        if trig == "cos":
            for k in range(n // 2 + 1):
                for m in range(2 * k, n + 1):
                    acc = acc + (
                        lam ** (m - 2 * k)
                        * yv ** (2 * k)
                        * s1.entry(m, 2 * k)
                        * inner[n - m]
                    ).scale((-1) ** k * math.comb(n, m))
        else:
            for k in range((n - 1) // 2 + 1) if n >= 1 else []:
                for m in range(2 * k + 1, n + 1):
                    acc = acc + (
                        lam ** (m - 2 * k - 1)
                        * yv ** (2 * k + 1)
                        * s1.entry(m, 2 * k + 1)
                        * inner[n - m]
                    ).scale((-1) ** k * math.comb(n, m))
        polys.append(acc)
    return FamilySequence(kind, order, tuple(polys))


@lru_cache(maxsize=None)
def complex_euler_series(order: int) -> EgfSeries:
    """Euler kernel times the degenerate exponential at x + iy."""
    arg = MPoly.variable("x") + MPoly.variable("y").scale(
        GaussRat(Fraction(0), Fraction(1))
    )
    return kernel_series("euler", order) * deg_exp_series(arg, order)


@lru_cache(maxsize=None)
def complex_bernoulli_series(order: int) -> EgfSeries:
    arg = MPoly.variable("x") + MPoly.variable("y").scale(
        GaussRat(Fraction(0), Fraction(1))
    )
    return kernel_series("bernoulli", order) * deg_exp_series(arg, order)


def complex_euler(n: int, order: int) -> MPoly:
    """The degenerate Euler polynomial at complex argument x + iy."""
    return complex_euler_series(order).coefficient(n)


def complex_bernoulli(n: int, order: int) -> MPoly:
    return complex_bernoulli_series(order).coefficient(n)


# -- classical (l = 0) oracle -----------------------------------------------


@lru_cache(maxsize=None)
def classical_kernel_series(which: str, order: int) -> EgfSeries:
    """Plain Bernoulli/Euler kernel built by the same inversion scheme.

    Independent of the degenerate machinery: coefficients are the constants
    1/(n+1) (Bernoulli) and 1/2 (Euler), no l anywhere.
    """
    if which == "bernoulli":
        h = EgfSeries.from_function(
            order, lambda n: MPoly.constant(Fraction(1, n + 1))
        )
        return h.invert()
    if which == "euler":
        g = EgfSeries.from_function(
            order,
            lambda n: MPoly.one() if n == 0 else MPoly.constant(Fraction(1, 2)),
        )
        return g.invert()
    raise ValueError(f"unknown kernel {which!r}")


def classical_exp_series(exponent: PolyInput, order: int) -> EgfSeries:
    """e^{ut} in the exponential basis: coefficient n is u^n."""
    exponent = MPoly.coerce(exponent)
    return EgfSeries.from_function(order, lambda n: exponent ** n)


def classical_cos_sin_series(order: int) -> Tuple[EgfSeries, EgfSeries]:
    """cos(yt) and sin(yt): coefficients (-1)^k y^{2k} resp. (-1)^k y^{2k+1}."""
    yv = MPoly.variable("y")
    cos = EgfSeries.from_function(
        order,
        lambda n: (yv ** n).scale((-1) ** (n // 2)) if n % 2 == 0 else MPoly.zero(),
    )
    sin = EgfSeries.from_function(
        order,
        lambda n: (yv ** n).scale((-1) ** (n // 2)) if n % 2 == 1 else MPoly.zero(),
    )
    return cos, sin


@lru_cache(maxsize=None)
def classical_family(kind: FamilyKind, order: int) -> FamilySequence:
    """The l = 0 counterpart of a family, built with plain exponentials."""
    kernel, uses_x, trig = _STRUCTURE[kind]
    series = None
    if kernel is not None:
        series = classical_kernel_series(kernel, order)
    if uses_x:
        expx = classical_exp_series(MPoly.variable("x"), order)
        series = expx if series is None else series * expx
    if trig is not None:
        cos, sin = classical_cos_sin_series(order)
        factor = cos if trig == "cos" else sin
        series = factor if series is None else series * factor
    return FamilySequence(kind, order, tuple(series.coeffs))
