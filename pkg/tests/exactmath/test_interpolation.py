from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from arrangecount.exactmath import (
    IntPolynomial,
    NonIntegerCoefficients,
    QPolynomial,
    lagrange_interpolate,
    lagrange_interpolate_rational,
)


def test_recovers_known_polynomial():
    chi = IntPolynomial((6, -7, 1))
    samples = [(q, chi(q)) for q in (101, 103, 107)]
    assert lagrange_interpolate(samples) == chi


def test_single_sample_is_constant():
    assert lagrange_interpolate([(7, 1)]) == IntPolynomial((1,))


def test_huge_values_stay_exact():
    cofactor = IntPolynomial((-1675440, 431004, -46840, 2675, -80, 1))
    chi = cofactor * IntPolynomial((-1, 1))
    primes = [10**12 + 39, 10**12 + 61, 10**12 + 63, 10**12 + 91, 10**12 + 121]
    primes += [10**12 + 163, 10**12 + 169]
    samples = [(q, chi(q)) for q in primes]
    assert lagrange_interpolate(samples) == chi


def test_rational_result():
    poly = lagrange_interpolate_rational([(0, 0), (2, 1)])
    assert poly == QPolynomial((0, Fraction(1, 2)))


def test_non_integer_coefficients():
    with pytest.raises(NonIntegerCoefficients):
        lagrange_interpolate([(0, 0), (2, 1)])


@pytest.mark.parametrize("samples", [[], [(1, 1), (1, 2)]])
def test_invalid_samples(samples):
    with pytest.raises(ValueError):
        lagrange_interpolate_rational(samples)


@given(
    st.lists(st.integers(-30, 30), min_size=1, max_size=6),
    st.integers(-100, 100),
)
def test_interpolation_inverts_evaluation(coeffs, start):
    poly = IntPolynomial(coeffs)
    nodes = range(start, start + len(coeffs))
    assert lagrange_interpolate([(x, poly(x)) for x in nodes]) == poly
