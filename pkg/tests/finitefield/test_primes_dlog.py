import unittest

import pytest

from arrangecount.errors import InvalidParams
from arrangecount.finitefield import (
    ExponentMatrix,
    NotPrimitiveRoot,
    PrimeSampler,
    discrete_logs,
    dlog_steps,
    is_prime,
    mult_independent,
    next_prime,
    primitive_root,
)


class TestPrimes(unittest.TestCase):
    def test_next_prime(self):
        assert next_prime(0) == 2
        assert next_prime(2) == 3
        assert next_prime(100) == 101
        with pytest.raises(ValueError):
            next_prime(-1)

    def test_is_prime(self):
        assert is_prime(97)
        assert not is_prime(91)
        assert not is_prime(1)

    def test_sampler(self):
        sampler = PrimeSampler(100)
        assert sampler.take(3) == [101, 103, 107]
        assert sampler.take(0) == []
        assert sampler.escalated() == PrimeSampler(200)
        assert PrimeSampler(0).escalated().lower_bound == 2


class TestDiscreteLog(unittest.TestCase):
    def test_small_table(self):
        assert discrete_logs(5, 2) == {1: 0, 2: 1, 4: 2, 3: 3}

    def test_primitive_root(self):
        assert primitive_root(23) == 5
        assert primitive_root(5) == 2
        with pytest.raises(ValueError):
            primitive_root(21)

    def test_not_primitive(self):
        with pytest.raises(NotPrimitiveRoot):
            discrete_logs(5, 4)
        with pytest.raises(NotPrimitiveRoot):
            discrete_logs(23, 2)

    def test_steps(self):
        assert dlog_steps((2, 3), 23, 5) == (2, 16)
        assert dlog_steps((4,), 5, 2) == (2,)
        with pytest.raises(InvalidParams):
            dlog_steps((23,), 23, 5)


@pytest.mark.parametrize("q", [5, 11, 23, 29])
def test_discrete_logs_permute_the_exponents(q):
    table = discrete_logs(q, primitive_root(q))
    assert sorted(table) == list(range(1, q))
    assert sorted(table.values()) == list(range(q - 1))


@pytest.mark.parametrize(
    "a, expected",
    [
        ((2,), True),
        ((2, 3), True),
        ((6, 10), True),
        ((2, 4), False),
        ((6, 2, 3), False),
        ((12, 18, 2), False),
        ((2, 3, 5, 7), True),
    ],
)
def test_mult_independent(a, expected):
    assert mult_independent(a) == expected


def test_exponent_matrix():
    matrix = ExponentMatrix.of([12, 18])
    assert matrix.primes == (2, 3)
    assert matrix.rows == ((2, 1), (1, 2))
    assert matrix.reconstruct() == [12, 18]
    assert matrix.rank == 2
    with pytest.raises(InvalidParams):
        ExponentMatrix.of([1, 2])


if __name__ == "__main__":
    unittest.main()
