import unittest
from fractions import Fraction
from math import factorial

import pytest

from arrangecount.arrangement import ArrangementFamily
from arrangecount.charpoly import (
    NotMultIndependent,
    connected_parts,
    deletion_restriction_report,
    egf_power_check,
    extract_egf_coefficients,
    four_lines_check,
    invariance_check,
    polynomiality_check,
    regions_invariance,
    shift_identity_check,
    spot_check_reference,
)
from arrangecount.errors import InvalidParams
from arrangecount.exactmath import IntPolynomial

t = IntPolynomial.variable()

A_SETS = ((2, 3), (2, 5), (3, 5), (5, 7), (2, 4))


@pytest.mark.parametrize("n", [1, 2, 3])
@pytest.mark.parametrize("a", [(2,), (2, 3)])
def test_shift_identity(a, n):
    report = shift_identity_check(a, n)
    assert report.passed, f"{report.chi} != {report.shifted}"
    if n <= 2:
        assert report.generic_agrees


def test_shift_identity_needs_independent_multipliers():
    with pytest.raises(NotMultIndependent):
        shift_identity_check((2, 4), 2)


class TestInvariance(unittest.TestCase):
    def test_dependent_pair_differs_in_dimension_three(self):
        report = invariance_check(A_SETS, 3)
        assert report.passed
        assert report.regions_shared
        independent = [e for e in report.entries if e.independent]
        assert len(independent) == 4
        assert all(e.poly == (t - 1) * (t**2 - 17 * t + 78) for e in independent)

    def test_dimension_two_cannot_separate(self):
        # seven distinct lines through the origin either way
        assert not invariance_check(A_SETS, 2).passed

    def test_regions(self):
        regions = regions_invariance([(2, 3), (3, 5)], 2)
        assert regions == {(2, 3): 14, (3, 5): 14}


class TestEgf(unittest.TestCase):
    def test_connected_parts(self):
        polys = [IntPolynomial((1,)), t - 1, (t - 1) * (t - 4)]
        assert connected_parts(polys) == [t - 1, 3 - 3 * t]

    def test_coefficients_of_eq1(self):
        coeffs = extract_egf_coefficients(ArrangementFamily.eq1((2,)), 2)
        assert coeffs.b == (1, -3)
        assert coeffs.c == (-1, 3)
        assert coeffs.d == coeffs.b

    def test_central_parts_at_one(self):
        coeffs = extract_egf_coefficients(ArrangementFamily.eq1((2,)), 3)
        expected = tuple(
            Fraction((-1) ** (n - 1) * factorial(n - 1)) for n in (1, 2, 3)
        )
        assert coeffs.f_at_one == expected

    def test_power_identity(self):
        report = egf_power_check((2,), 3)
        assert report.regions == (1, 2, 10, 84)
        assert report.passed

    def test_power_identity_two_multipliers(self):
        assert egf_power_check((2, 3), 3).passed

    def test_no_central_parts_outside_eq1(self):
        assert extract_egf_coefficients(ArrangementFamily.catalan(), 2).f_at_one is None


@pytest.mark.slow
def test_power_identity_order_four():
    assert egf_power_check((2,), 4).passed


@pytest.mark.parametrize("method", ["whitney", "interpolate"])
def test_deletion_restriction_report(method):
    report = deletion_restriction_report((2,), 2, method)
    assert report.passed
    assert report.polys["eq1_minus_zero/2"] == (t - 1) * (t - 2)
    assert report.polys["eq1/1"] == t - 1


def test_deletion_restriction_unknown_method():
    with pytest.raises(ValueError):
        deletion_restriction_report((2,), 2, "guess")


def test_four_lines():
    report = four_lines_check()
    assert report.passed
    assert (report.regions, report.bounded) == (10, 2)


@pytest.mark.parametrize("a, n", [((1,), 2), ((1, 3), 2), ((1, 3), 3), ((2,), 3)])
def test_polynomiality(a, n):
    report = polynomiality_check(a, n, extra=3)
    assert report.poly.degree == n
    assert report.passed


def test_polynomiality_of_cycles():
    report = polynomiality_check((1,), 2, start=5)
    # k (k - 3) / 2 two-sets avoid the k edges of C_k
    assert report.poly(10) == 35


@pytest.mark.parametrize("n", [2, 3, 4])
def test_spot_check_reference(n):
    check = spot_check_reference(n, 101)
    assert check.passed
    assert check.counted == check.expected


def test_spot_check_rejects_unknown_inputs():
    with pytest.raises(InvalidParams):
        spot_check_reference(8, 101)
    with pytest.raises(InvalidParams):
        spot_check_reference(3, 100)


if __name__ == "__main__":
    unittest.main()
