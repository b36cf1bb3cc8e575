"""Sparse multivariate polynomials over the Gaussian rationals.

The variable set is fixed: (l, x, y, r), where "l" is the deformation
parameter.  A polynomial is a map from exponent vectors to nonzero GaussRat
coefficients; the zero polynomial is the empty map.  The imaginary unit
lives only in coefficients, never as a variable, so conjugation and
real/imaginary splitting are well-defined ring operations.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Mapping, Tuple, Union

from .numeric import GaussRat, as_gauss, format_gauss, format_rat

VARIABLES = ("l", "x", "y", "r")
_VAR_INDEX = {name: i for i, name in enumerate(VARIABLES)}

Exponents = Tuple[int, int, int, int]
PolyInput = Union["MPoly", GaussRat, Fraction, int]


def _term_order_key(exps: Exponents):
    # Graded order, ties broken x-major so text output reads naturally
    # ("x^2 - 1/2*l*x - y^2").
    el, ex, ey, er = exps
    return (el + ex + ey + er, ex, el, ey, er)


class MPoly:
    """Immutable sparse polynomial in Q(i)[l, x, y, r]."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exponents, GaussRat] | None = None):
        clean: Dict[Exponents, GaussRat] = {}
        if terms:
            for exps, coeff in terms.items():
                coeff = as_gauss(coeff)
                if not coeff.is_zero():
                    clean[tuple(exps)] = coeff
        self._terms = clean
        self._hash = None

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "MPoly":
        return _ZERO

    @classmethod
    def one(cls) -> "MPoly":
        return _ONE

    @classmethod
    def constant(cls, value: Union[GaussRat, Fraction, int]) -> "MPoly":
        return cls({(0, 0, 0, 0): as_gauss(value)})

    @classmethod
    def variable(cls, name: str) -> "MPoly":
        if name not in _VAR_INDEX:
            raise ValueError(f"unknown variable {name!r}; expected one of {VARIABLES}")
        exps = [0, 0, 0, 0]
        exps[_VAR_INDEX[name]] = 1
        return cls({tuple(exps): as_gauss(1)})

    @staticmethod
    def coerce(value: PolyInput) -> "MPoly":
        if isinstance(value, MPoly):
            return value
        return MPoly.constant(value)

    # -- inspection ---------------------------------------------------

    @property
    def terms(self) -> Mapping[Exponents, GaussRat]:
        """The term map; treat as read-only."""
        return self._terms

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def total_degree(self) -> int | None:
        """Max summed exponent vector, or None for the zero polynomial."""
        if not self._terms:
            return None
        return max(sum(e) for e in self._terms)

    def coefficient(self, exps: Exponents) -> GaussRat:
        return self._terms.get(tuple(exps), as_gauss(0))

    def is_constant(self) -> bool:
        return all(e == (0, 0, 0, 0) for e in self._terms)

    def constant_value(self) -> GaussRat:
        if not self.is_constant():
            raise ValueError(f"polynomial is not constant: {self}")
        return self._terms.get((0, 0, 0, 0), as_gauss(0))

    # -- ring arithmetic ----------------------------------------------

    def __add__(self, other: PolyInput) -> "MPoly":
        other = MPoly.coerce(other)
        merged = dict(self._terms)
        for exps, coeff in other._terms.items():
            merged[exps] = merged.get(exps, as_gauss(0)) + coeff
        return MPoly(merged)

    __radd__ = __add__

    def __neg__(self) -> "MPoly":
        return MPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: PolyInput) -> "MPoly":
        return self + (-MPoly.coerce(other))

    def __rsub__(self, other: PolyInput) -> "MPoly":
        return MPoly.coerce(other) - self

    def __mul__(self, other: PolyInput) -> "MPoly":
        other = MPoly.coerce(other)
        product: Dict[Exponents, GaussRat] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                exps = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3])
                acc = product.get(exps)
                product[exps] = c1 * c2 if acc is None else acc + c1 * c2
        return MPoly(product)

    __rmul__ = __mul__

    def scale(self, value: Union[GaussRat, Fraction, int]) -> "MPoly":
        c = as_gauss(value)
        return MPoly({e: coeff * c for e, coeff in self._terms.items()})

    def __pow__(self, n: int) -> "MPoly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = _ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base_needed = n > 1
            if base_needed:
                base = base * base
            n >>= 1
        return result

    # -- structure operations -----------------------------------------

    def substitute(self, var: str, replacement: PolyInput) -> "MPoly":
        """Image under the ring map sending ``var`` to ``replacement``."""
        if var not in _VAR_INDEX:
            raise ValueError(f"unknown variable {var!r}; expected one of {VARIABLES}")
        idx = _VAR_INDEX[var]
        replacement = MPoly.coerce(replacement)
        powers: Dict[int, MPoly] = {0: _ONE}
        result = _ZERO
        for exps, coeff in self._terms.items():
            n = exps[idx]
            if n not in powers:
                prev = max(k for k in powers if k <= n)
                acc = powers[prev]
                for k in range(prev + 1, n + 1):
                    acc = acc * replacement
                    powers[k] = acc
            rest = list(exps)
            rest[idx] = 0
            result = result + powers[n] * MPoly({tuple(rest): coeff})
        return result

    def conjugate_coeffs(self) -> "MPoly":
        """Conjugate every coefficient (i -> -i), fixing the variables."""
        return MPoly({e: c.conjugate() for e, c in self._terms.items()})

    def split_real_imag(self) -> Tuple["MPoly", "MPoly"]:
        """Return (p_re, p_im) with p = p_re + i*p_im, both real-coefficient."""
        re_terms: Dict[Exponents, GaussRat] = {}
        im_terms: Dict[Exponents, GaussRat] = {}
        for exps, coeff in self._terms.items():
            if coeff.re:
                re_terms[exps] = GaussRat(coeff.re)
            if coeff.im:
                im_terms[exps] = GaussRat(coeff.im)
        return MPoly(re_terms), MPoly(im_terms)

    def evaluate(self, bindings: Mapping[str, Union[GaussRat, Fraction, int]]) -> GaussRat:
        """Exact evaluation; every variable occurring in self must be bound."""
        values = {}
        for name, value in bindings.items():
            if name not in _VAR_INDEX:
                raise ValueError(f"unknown variable {name!r}; expected one of {VARIABLES}")
            values[_VAR_INDEX[name]] = as_gauss(value)
        total = as_gauss(0)
        for exps, coeff in self._terms.items():
            term = coeff
            for idx, power in enumerate(exps):
                if power == 0:
                    continue
                if idx not in values:
                    raise ValueError(f"unbound variable {VARIABLES[idx]!r} in evaluation")
                v = values[idx]
                for _ in range(power):
                    term = term * v
            total = total + term
        return total

    # -- comparison / hashing -----------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction, GaussRat)):
            other = MPoly.constant(other)
        if not isinstance(other, MPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- serialization ------------------------------------------------

    def sorted_terms(self) -> Iterable[Tuple[Exponents, GaussRat]]:
        for exps in sorted(self._terms, key=_term_order_key, reverse=True):
            yield exps, self._terms[exps]

    def to_text(self) -> str:
        """Canonical text form, e.g. "x^2 - 1/2*l*x - y^2"."""
        if not self._terms:
            return "0"
        pieces = []
        for exps, coeff in self.sorted_terms():
            mono = "*".join(
                name if power == 1 else f"{name}^{power}"
                for name, power in zip(VARIABLES, exps)
                if power
            )
            if coeff.is_real():
                negative = coeff.re < 0
                mag = abs(coeff.re)
                if mono and mag == 1:
                    body = mono
                elif mono:
                    body = f"{format_rat(mag)}*{mono}"
                else:
                    body = format_rat(mag)
                sign = "-" if negative else "+"
            else:
                sign = "+"
                body = f"({format_gauss(coeff)})*{mono}" if mono else f"({format_gauss(coeff)})"
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"MPoly({self.to_text()!r})"


_ZERO = MPoly()
_ONE = MPoly({(0, 0, 0, 0): as_gauss(1)})

L = MPoly.variable("l")
X = MPoly.variable("x")
Y = MPoly.variable("y")
R = MPoly.variable("r")
