import unittest

import pytest

from arrangecount.arrangement import ArrangementFamily
from arrangecount.charpoly import (
    REFERENCE_CHARPOLYS,
    ThresholdNotFound,
    charpoly_sequence,
    eval_chi_at_prime,
    exact_charpoly,
    induced_graph,
    interpolate_charpoly,
)
from arrangecount.errors import InvalidParams
from arrangecount.exactmath import IntPolynomial
from arrangecount.finitefield import PrimeSampler
from arrangecount.run.config import PipelineConfig, RunConfig

t = IntPolynomial.variable()


class TestInterpolation(unittest.TestCase):
    def test_eq1_two_multipliers(self):
        result = interpolate_charpoly(ArrangementFamily.eq1((2, 3)), 2)
        assert result.poly == (t - 1) * (t - 6)
        assert [q for q, _ in result.samples] == [101, 103, 107]
        assert result.validation_prime == 109
        assert result.validation_count == 108 * 103

    def test_catalan(self):
        result = interpolate_charpoly(ArrangementFamily.catalan(), 3)
        assert result.poly == t * (t - 4) * (t - 5)

    def test_dimension_zero(self):
        result = interpolate_charpoly(ArrangementFamily.braid(), 0)
        assert result.poly == IntPolynomial((1,))
        assert exact_charpoly(ArrangementFamily.eq1((2,)), 0) == IntPolynomial((1,))

    def test_explicit_sampler(self):
        result = interpolate_charpoly(
            ArrangementFamily.braid(), 2, sampler=PrimeSampler(1000)
        )
        assert result.poly == t * (t - 1)
        assert result.samples[0][0] == 1009

    def test_threads_do_not_change_the_result(self):
        family = ArrangementFamily.eq1((2, 3))
        single = interpolate_charpoly(family, 3)
        threaded = interpolate_charpoly(family, 3, config=RunConfig(threads=2))
        assert single == threaded


def test_degenerate_primes_escalate():
    # the offset 101 vanishes modulo the first sampled prime
    family = ArrangementFamily.difference((101,))
    config = RunConfig(pipeline=PipelineConfig(max_retries=0))
    with pytest.raises(ThresholdNotFound):
        interpolate_charpoly(family, 2, config=config)
    result = interpolate_charpoly(family, 2)
    assert result.poly == t * (t - 3)
    assert min(q for q, _ in result.samples) > 200


@pytest.mark.parametrize(
    "family, n, q, expected",
    [
        (ArrangementFamily.eq1((2, 3)), 3, 199, 7_186_608),
        (ArrangementFamily.eq1((2, 3)), 3, 23, 22 * 216),
        (ArrangementFamily.braid(), 3, 7, 7 * 6 * 5),
        (ArrangementFamily.eq1_ordered((2,)), 2, 101, 100 * 98),
        (ArrangementFamily.shi(), 2, 101, 101 * 99),
        (ArrangementFamily.eq1((2,)), 0, 101, 1),
    ],
)
def test_eval_chi_at_prime(family, n, q, expected):
    assert eval_chi_at_prime(family, n, q) == expected


def test_formal_offsets_have_no_finite_field_count():
    with pytest.raises(InvalidParams):
        eval_chi_at_prime(ArrangementFamily.log_catalan((2, 3)), 2, 101)
    with pytest.raises(InvalidParams):
        induced_graph(ArrangementFamily.log_catalan((2, 3)), 101)
    assert exact_charpoly(ArrangementFamily.log_catalan((2,)), 2) == t * (t - 3)


def test_induced_graphs():
    assert induced_graph(ArrangementFamily.braid(), 11).edge_count == 0
    assert induced_graph(ArrangementFamily.eq1((2,)), 11).vcount == 10
    assert induced_graph(ArrangementFamily.eq1_minus_zero((2,)), 11).vcount == 11
    assert induced_graph(ArrangementFamily.catalan(), 11).edge_count == 11


def test_charpoly_sequence():
    polys = charpoly_sequence(ArrangementFamily.catalan(), 2)
    assert polys == [IntPolynomial((1,)), t, t * (t - 3)]


@pytest.mark.parametrize("n", [2, 3])
def test_reference_polynomials(n):
    assert exact_charpoly(ArrangementFamily.eq1((2, 3)), n) == REFERENCE_CHARPOLYS[n]


@pytest.mark.slow
def test_reference_polynomial_in_dimension_four():
    assert exact_charpoly(ArrangementFamily.eq1((2, 3)), 4) == REFERENCE_CHARPOLYS[4]


if __name__ == "__main__":
    unittest.main()
