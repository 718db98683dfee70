from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from arrangecount.exactmath import (
    IntPolynomial,
    NonIntegerCoefficients,
    QPolynomial,
    binomial,
    factorial,
    falling_factorial,
    falling_factorial_poly,
    poly_eval,
)

coeff_lists = st.lists(st.integers(-50, 50), min_size=1, max_size=6)


def test_zero_and_trailing_zeros():
    assert IntPolynomial(()).coeffs == (0,)
    assert IntPolynomial((1, 2, 0, 0)).coeffs == (1, 2)
    assert IntPolynomial((0, 0)).is_zero()


@pytest.mark.parametrize(
    "coeffs, t, expected",
    [
        ((6, -7, 1), 1, 0),
        ((6, -7, 1), 6, 0),
        ((5, -4, 1), -1, 10),
        ((1,), 10**30, 1),
        ((0, 1), 10**30, 10**30),
    ],
)
def test_poly_eval(coeffs, t, expected):
    assert poly_eval(IntPolynomial(coeffs), t) == expected


@pytest.mark.parametrize(
    "shift, length, expected",
    [
        (1, 0, (1,)),
        (4, 1, (-4, 1)),
        (4, 2, (20, -9, 1)),
        (0, 3, (0, 2, -3, 1)),
    ],
)
def test_falling_factorial_poly(shift, length, expected):
    assert falling_factorial_poly(shift, length) == IntPolynomial(expected)


def test_falling_factorial_poly_rejects_negative_length():
    with pytest.raises(ValueError):
        falling_factorial_poly(1, -1)


def test_integral_results_are_int_polynomials():
    half = QPolynomial((Fraction(1, 2), 1))
    assert not isinstance(half, IntPolynomial)
    doubled = half * 2
    assert isinstance(doubled, IntPolynomial)
    assert doubled == IntPolynomial((1, 2))


def test_to_int_rejects_fractions():
    with pytest.raises(NonIntegerCoefficients):
        QPolynomial((Fraction(1, 3),)).to_int()
    with pytest.raises(NonIntegerCoefficients):
        IntPolynomial((Fraction(1, 2),))


def test_shift():
    p = IntPolynomial((0, -3, 1))  # t^2 - 3t
    assert p.shift(-1) == IntPolynomial((4, -5, 1))


def test_str():
    assert str(IntPolynomial((5, -4, 1))) == "t^2 - 4*t + 5"
    assert str(IntPolynomial((0, 1))) == "t"
    assert str(IntPolynomial((-1,))) == "-1"
    assert str(IntPolynomial(())) == "0"


def test_degree_leading_monic():
    p = IntPolynomial((6, -7, 1))
    assert p.degree == 2
    assert p.leading == 1
    assert p.is_monic()
    assert not IntPolynomial((1, 2)).is_monic()


@given(coeff_lists, coeff_lists, st.integers(-20, 20))
def test_arithmetic_matches_evaluation(a, b, t):
    p, q = IntPolynomial(a), IntPolynomial(b)
    assert (p + q)(t) == p(t) + q(t)
    assert (p - q)(t) == p(t) - q(t)
    assert (p * q)(t) == p(t) * q(t)


@given(coeff_lists, st.integers(-5, 5), st.integers(-20, 20))
def test_shift_matches_evaluation(a, c, t):
    p = IntPolynomial(a)
    assert p.shift(c)(t) == p(t + c)


@pytest.mark.parametrize(
    "n, k, expected",
    [(5, 2, 10), (5, 0, 1), (5, 5, 1), (5, 6, 0), (5, -1, 0), (-1, 0, 0), (0, 0, 1)],
)
def test_binomial(n, k, expected):
    assert binomial(n, k) == expected


def test_factorials():
    assert factorial(0) == 1
    assert factorial(6) == 720
    assert falling_factorial(5, 0) == 1
    assert falling_factorial(5, 3) == 60
    assert falling_factorial(2, 4) == 0
    assert falling_factorial(-1, 2) == 2
