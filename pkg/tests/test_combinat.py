import pytest

from degenpoly.combinat import (
    StirlingKind,
    falling_factorial,
    gen_falling_factorial,
    gen_rising_factorial,
    stirling_first,
    stirling_second,
    stirling_second_degenerate,
    stirling_table,
)
from degenpoly.multipoly import MPoly

L = MPoly.variable("l")
X = MPoly.variable("x")


def test_falling_factorial_expansion():
    # x(x-1)(x-2) expanded by hand.
    assert falling_factorial(X, 3) == X ** 3 - (X * X).scale(3) + X.scale(2)
    assert falling_factorial(X, 0) == MPoly.one()
    assert falling_factorial(X, 1) == X


def test_gen_falling_factorial():
    assert gen_falling_factorial(X, 2) == X * X - L * X
    # (1)(1-l)(1-2l) = 1 - 3l + 2l^2 by hand.
    assert gen_falling_factorial(1, 3) == MPoly.one() - L.scale(3) + (L * L).scale(2)
    # l = 0 limit collapses to a plain power.
    assert gen_falling_factorial(X, 5).substitute("l", 0) == X ** 5


def test_rising_vs_falling_sign_relation():
    for n in range(7):
        assert gen_rising_factorial(X, n) == gen_falling_factorial(-X, n).scale((-1) ** n)


def test_stirling_first_values():
    assert stirling_first(3, 2) == MPoly.constant(-3)
    assert stirling_first(3, 1) == MPoly.constant(2)
    for n in range(6):
        assert stirling_first(n, n) == MPoly.one()


def test_stirling_first_reconstruction():
    # Row n recombines to the falling factorial exactly.
    table = stirling_table(StirlingKind.FIRST, 8)
    for n in range(9):
        total = MPoly.zero()
        for k in range(n + 1):
            total = total + table.entry(n, k) * X ** k
        assert total == falling_factorial(X, n)


def test_stirling_second_reconstruction():
    # x^n recombines over falling factorials exactly.
    table = stirling_table(StirlingKind.SECOND, 8)
    for n in range(9):
        total = MPoly.zero()
        for k in range(n + 1):
            total = total + table.entry(n, k) * falling_factorial(X, k)
        assert total == X ** n


def test_stirling_second_degenerate_values():
    assert stirling_second_degenerate(2, 1) == MPoly.one() - L
    for n in range(6):
        assert stirling_second_degenerate(n, n) == MPoly.one()
    # Classical value at l = 0: x^3 = x + 3x(x-1) + x(x-1)(x-2).
    assert stirling_second_degenerate(3, 2).substitute("l", 0) == MPoly.constant(3)


def test_degenerate_second_limit_is_classical():
    deg = stirling_table(StirlingKind.DEGENERATE_SECOND, 8)
    cls = stirling_table(StirlingKind.SECOND, 8)
    for n in range(9):
        for k in range(n + 1):
            assert deg.entry(n, k).substitute("l", 0) == cls.entry(n, k)


def test_table_range_checks():
    table = stirling_table(StirlingKind.FIRST, 4)
    with pytest.raises(IndexError):
        table.entry(5, 0)
    with pytest.raises(IndexError):
        table.entry(3, 4)


def test_negative_n_rejected():
    with pytest.raises(ValueError):
        falling_factorial(X, -1)
    with pytest.raises(ValueError):
        gen_falling_factorial(X, -2)
    with pytest.raises(ValueError):
        gen_falling_factorial(X, 2, step=2)
