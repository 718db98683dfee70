import pytest

from arrangecount.charpoly import (
    REFERENCE_CHARPOLYS,
    ClosedForm,
    closed_catalan,
    closed_extended_catalan,
    closed_form_check,
    closed_ordered_family,
    closed_power_family,
    closed_shi,
    cycle_formula,
    cycle_formula_check,
)
from arrangecount.exactmath import IntPolynomial

t = IntPolynomial.variable()


@pytest.mark.parametrize(
    "poly, expected",
    [
        (closed_catalan(1), t),
        (closed_catalan(3), t * (t - 4) * (t - 5)),
        (closed_extended_catalan(3, 2), t * (t - 7) * (t - 8)),
        (closed_shi(3), t * (t - 3) ** 2),
        (closed_power_family(2, 2), (t - 1) * (t - 6)),
        (closed_power_family(3, 2), (t - 1) * (t - 8) * (t - 9)),
        (closed_ordered_family(2), (t - 1) * (t - 3)),
        (closed_ordered_family(3), (t - 1) * (t - 4) ** 2),
    ],
)
def test_closed_forms(poly, expected):
    assert poly == expected


def test_closed_forms_reject_small_parameters():
    with pytest.raises(ValueError):
        closed_catalan(0)
    with pytest.raises(ValueError):
        closed_extended_catalan(2, 0)


@pytest.mark.parametrize("k, n, expected", [(5, 2, 5), (6, 3, 2), (7, 1, 7), (8, 4, 2)])
def test_cycle_formula(k, n, expected):
    assert cycle_formula(k, n) == expected


def test_cycle_formula_check():
    report = cycle_formula_check(3, 16)
    assert report.passed
    assert len(report.rows) == sum(k // 2 for k in range(3, 17))


@pytest.mark.parametrize("n", sorted(REFERENCE_CHARPOLYS))
def test_reference_polynomials_have_unit_root(n):
    poly = REFERENCE_CHARPOLYS[n]
    assert poly.degree == n
    assert poly.is_monic()
    assert poly(1) == 0
    # minus the hyperplane count: coordinates, braid and two multipliers per pair
    assert poly.coeffs[n - 1] == -(n + n * (n - 1) // 2 + 2 * n * (n - 1))


@pytest.mark.parametrize("n", [1, 2, 3])
@pytest.mark.parametrize(
    "form, m",
    [
        (ClosedForm.CATALAN, 1),
        (ClosedForm.EXTENDED_CATALAN, 1),
        (ClosedForm.EXTENDED_CATALAN, 2),
        (ClosedForm.SHI, 1),
        (ClosedForm.POWER, 1),
        (ClosedForm.POWER, 2),
        (ClosedForm.ORDERED, 1),
    ],
)
def test_closed_form_check(form, m, n):
    report = closed_form_check(form, n, m)
    assert report.passed, f"{report.computed} != {report.closed}"
