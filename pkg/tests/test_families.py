from fractions import Fraction

import pytest

from degenpoly.families import (
    FamilyKind,
    SINE_KINDS,
    classical_family,
    classical_kernel_series,
    complex_bernoulli,
    complex_euler,
    deg_cos_sin_closed,
    deg_cos_sin_series,
    deg_exp_series,
    family,
    family_closed,
    kernel_series,
)
from degenpoly.multipoly import MPoly
from degenpoly.numeric import GaussRat

L = MPoly.variable("l")
X = MPoly.variable("x")
Y = MPoly.variable("y")

N = 8


def test_deg_exp_series_of_one():
    s = deg_exp_series(MPoly.one(), 4)
    assert s.coefficient(0) == MPoly.one()
    assert s.coefficient(1) == MPoly.one()
    assert s.coefficient(2) == MPoly.one() - L
    assert s.coefficient(3) == (MPoly.one() - L) * (MPoly.one() - L.scale(2))


def test_deg_exp_series_of_zero_is_unit():
    s = deg_exp_series(MPoly.zero(), 4)
    assert s.coefficient(0) == MPoly.one()
    for n in range(1, 5):
        assert s.coefficient(n).is_zero()


def test_deg_exp_series_classical_limit():
    s = deg_exp_series(X, 5)
    for n in range(6):
        assert s.coefficient(n).substitute("l", 0) == X ** n


def test_deg_cos_sin_low_coefficients():
    cos, sin = deg_cos_sin_series(4)
    assert cos.coefficient(0) == MPoly.one()
    assert cos.coefficient(2) == -(Y * Y)
    assert cos.coefficient(3) == (L * Y * Y).scale(3)
    assert sin.coefficient(0).is_zero()
    assert sin.coefficient(1) == Y


def test_deg_cos_sin_series_are_real():
    cos, sin = deg_cos_sin_series(N)
    for c in list(cos.coeffs) + list(sin.coeffs):
        _, im = c.split_real_imag()
        assert im.is_zero()


def test_deg_cos_sin_closed_matches_series():
    assert deg_cos_sin_closed(N) == deg_cos_sin_series(N)


def test_euler_kernel_coefficients():
    k = kernel_series("euler", 4)
    assert k.coefficient(0) == MPoly.one()
    assert k.coefficient(1) == MPoly.constant(Fraction(-1, 2))
    assert k.coefficient(2) == L.scale(Fraction(1, 2))


def test_bernoulli_kernel_coefficients():
    k = kernel_series("bernoulli", 4)
    assert k.coefficient(0) == MPoly.one()
    assert k.coefficient(1) == (L - 1).scale(Fraction(1, 2))


def test_unknown_kernel_rejected():
    with pytest.raises(ValueError):
        kernel_series("gamma", 4)


def test_classical_bernoulli_numbers_from_oracle():
    b = classical_kernel_series("bernoulli", 12)
    assert b.coefficient(2) == MPoly.constant(Fraction(1, 6))
    assert b.coefficient(12) == MPoly.constant(Fraction(-691, 2730))


def test_family_examples():
    assert family(FamilyKind.DEG_COSINE, N)[2] == X * X - L * X - Y * Y
    assert family(FamilyKind.DEG_COSINE, N)[0] == MPoly.one()
    assert family(FamilyKind.DEG_SINE, N)[0].is_zero()
    assert family(FamilyKind.DEG_EULER, N)[1] == X - MPoly.constant(Fraction(1, 2))


def test_sine_families_start_at_zero():
    for kind in SINE_KINDS:
        assert family(kind, N)[0].is_zero()


def test_all_families_are_real():
    for kind in FamilyKind:
        for p in family(kind, N).polys:
            _, im = p.split_real_imag()
            assert im.is_zero()


def test_family_closed_matches_family():
    for kind in (
        FamilyKind.DEG_COSINE,
        FamilyKind.DEG_SINE,
        FamilyKind.DEG_COS_EULER,
        FamilyKind.DEG_SIN_EULER,
        FamilyKind.DEG_COS_BERNOULLI,
        FamilyKind.DEG_SIN_BERNOULLI,
    ):
        direct = family(kind, N)
        closed = family_closed(kind, N)
        for n in range(N + 1):
            assert direct[n] == closed[n], (kind, n)


def test_family_closed_rejects_number_kinds():
    with pytest.raises(ValueError):
        family_closed(FamilyKind.DEG_EULER_NUM, 4)
    with pytest.raises(ValueError):
        family_closed(FamilyKind.DEG_BERNOULLI_NUM, 4)


def test_numbers_equal_polynomials_at_x_zero():
    for num_kind, poly_kind in (
        (FamilyKind.DEG_EULER_NUM, FamilyKind.DEG_EULER),
        (FamilyKind.DEG_BERNOULLI_NUM, FamilyKind.DEG_BERNOULLI),
    ):
        nums = family(num_kind, N)
        polys = family(poly_kind, N)
        for n in range(N + 1):
            assert nums[n] == polys[n].substitute("x", 0)


def test_y_zero_collapse():
    cos_euler = family(FamilyKind.DEG_COS_EULER, N)
    sin_euler = family(FamilyKind.DEG_SIN_EULER, N)
    euler = family(FamilyKind.DEG_EULER, N)
    for n in range(N + 1):
        assert cos_euler[n].substitute("y", 0) == euler[n]
        assert sin_euler[n].substitute("y", 0).is_zero()


def test_complex_euler_low_degrees():
    i = GaussRat(0, 1)
    assert complex_euler(0, 4) == MPoly.one()
    e1 = complex_euler(1, 4)
    assert e1 == X + Y.scale(i) - MPoly.constant(Fraction(1, 2))
    re, im = e1.split_real_imag()
    assert re == X - MPoly.constant(Fraction(1, 2))
    assert im == Y


def test_complex_bernoulli_low_degrees():
    i = GaussRat(0, 1)
    assert complex_bernoulli(0, 4) == MPoly.one()
    b1 = complex_bernoulli(1, 4)
    assert b1 == X + Y.scale(i) + (L - 1).scale(Fraction(1, 2))
    _, im = b1.split_real_imag()
    assert im == Y


def test_classical_family_limits():
    for kind in FamilyKind:
        deg = family(kind, 6)
        cls = classical_family(kind, 6)
        for n in range(7):
            assert deg[n].substitute("l", 0) == cls[n], (kind, n)
