import unittest
from fractions import Fraction

import pytest

from arrangecount.exactmath import (
    EgfSeries,
    IntPolynomial,
    PolynomialEgfSeries,
    WrongConstantTerm,
    egf_add,
    egf_exp,
    egf_log,
    egf_mul,
    egf_pow,
    factorial,
    polyegf_exp,
    polyegf_log,
    polyegf_pow,
)

T = IntPolynomial((0, 1))


class TestEgfSeries(unittest.TestCase):
    def test_exp_of_x_is_all_ones(self):
        x = EgfSeries.from_values([0, 1, 0, 0, 0])
        assert egf_exp(x) == EgfSeries.from_values([1, 1, 1, 1, 1])

    def test_log_inverts_exp(self):
        f = EgfSeries.from_values([0, 3, -1, Fraction(2, 5), 7])
        assert egf_log(egf_exp(f)) == f

    def test_exp_inverts_log(self):
        f = EgfSeries.from_values([1, 2, 10, -3, 4])
        assert egf_exp(egf_log(f)) == f

    def test_exponential_formula_for_permutations(self):
        # sum n! x^n/n! = 1/(1-x) = exp(sum (n-1)! x^n/n!)
        perms = EgfSeries.from_values([factorial(n) for n in range(6)])
        cycles = EgfSeries.from_values([0] + [factorial(n - 1) for n in range(1, 6)])
        assert egf_log(perms) == cycles

    def test_mul_is_binomial_convolution(self):
        f = EgfSeries.from_values([1, 1, 1])
        assert egf_mul(f, f) == EgfSeries.from_values([1, 2, 4])

    def test_pow_matches_repeated_product(self):
        f = EgfSeries.from_values([1, 2, 3, 5])
        assert egf_pow(f, 3) == f * f * f
        half = egf_pow(f, Fraction(1, 2))
        assert half * half == f

    def test_add(self):
        f = EgfSeries.from_values([1, 2])
        assert egf_add(f, f) == EgfSeries.from_values([2, 4])

    def test_ordinary_round_trip(self):
        f = EgfSeries.from_ordinary([1, 1, Fraction(1, 2)])
        assert f.coeffs == (1, 1, 1)
        assert f.to_ordinary() == (1, 1, Fraction(1, 2))

    def test_wrong_constant_terms(self):
        with pytest.raises(WrongConstantTerm):
            egf_exp(EgfSeries.from_values([1, 1]))
        with pytest.raises(WrongConstantTerm):
            egf_log(EgfSeries.from_values([2, 1]))

    def test_order_mismatch(self):
        with pytest.raises(ValueError):
            egf_mul(EgfSeries.from_values([1]), EgfSeries.from_values([1, 1]))


class TestPolynomialEgfSeries(unittest.TestCase):
    def test_exp_of_t_x(self):
        # exp(t x) has coefficients t^n
        f = PolynomialEgfSeries((IntPolynomial((0,)), T, IntPolynomial((0,))))
        assert polyegf_exp(f).coeffs == (IntPolynomial((1,)), T, T * T)

    def test_log_inverts_exp(self):
        f = PolynomialEgfSeries((IntPolynomial((0,)), T - 1, T * 2 + 3, T))
        assert polyegf_log(polyegf_exp(f)) == f

    def test_polynomial_power_specialises(self):
        base = EgfSeries.from_values([1, -3, 11, -45])
        powered = polyegf_pow(PolynomialEgfSeries.from_series(base), T)
        for t in range(-2, 4):
            assert powered.evaluate(t) == egf_pow(base, t)
