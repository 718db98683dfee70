from fractions import Fraction

import pytest

from arrangecount.arrangement import (
    Arrangement,
    FlatSystem,
    Hyperplane,
    is_central,
    is_essential,
    rank,
)
from arrangecount.errors import InvalidParams


@pytest.mark.parametrize(
    "normal, offset, expected_normal, expected_offset",
    [
        ((2, -1), 0, (2, -1), 0),
        ((-2, 1), 0, (2, -1), 0),
        ((4, -2), 2, (2, -1), 1),
        ((0, -3), 3, (0, 1), -1),
        ((Fraction(1, 2), Fraction(1, 3)), 1, (3, 2), 6),
        ((2, 2), 1, (1, 1), Fraction(1, 2)),
    ],
)
def test_canonical_form(normal, offset, expected_normal, expected_offset):
    h = Hyperplane.make(normal, offset)
    assert h.normal == expected_normal
    assert h.offset == expected_offset


def test_orientations_deduplicate():
    # x2 = 2 x1 and 2 x1 - x2 = 0
    arr = Arrangement.of(2, [Hyperplane.make((-2, 1)), Hyperplane.make((2, -1))])
    assert len(arr) == 1


def test_zero_normal_rejected():
    with pytest.raises(InvalidParams):
        Hyperplane.make((0, 0))


def test_dimension_mismatch_rejected():
    with pytest.raises(InvalidParams):
        Arrangement.of(3, [Hyperplane.make((1, 0))])


def test_generic_offsets_are_scaled_and_stripped():
    h = Hyperplane.make((-1, 1), 0, (2, 0))
    assert h.normal == (1, -1)
    assert h.generic == (-2,)
    assert not h.is_rational
    assert Hyperplane.make((1, -1), 0, (0, 0)).is_rational


def test_str():
    assert str(Hyperplane.make((1, 1), 1)) == "x1 + x2 = 1"
    assert str(Hyperplane.make((1, -2))) == "x1 - 2*x2 = 0"


class TestFlats:
    def test_rank_of_normals(self):
        x, y = Hyperplane.make((1, 0)), Hyperplane.make((0, 1))
        diag = Hyperplane.make((1, -1))
        assert rank([]) == 0
        assert rank([x]) == 1
        assert rank([x, y, diag]) == 2
        assert rank([x, Hyperplane.make((1, 0), 5)]) == 1

    def test_is_central(self):
        assert is_central([])
        assert is_central([Hyperplane.make((1, 0)), Hyperplane.make((0, 1))])
        assert not is_central([Hyperplane.make((1, 0)), Hyperplane.make((1, 0), 1)])

    def test_formal_offsets_are_independent_of_rationals(self):
        # x - y = 1 and x - y = w never meet; x - y = w and y - z = w meet
        one = Hyperplane.make((1, -1, 0), 1)
        formal = Hyperplane.make((1, -1, 0), 0, (1,))
        other = Hyperplane.make((0, 1, -1), 0, (1,))
        assert not is_central([one, formal])
        assert is_central([formal, other])

    def test_flat_keys_identify_flats(self):
        x, y = Hyperplane.make((1, 0)), Hyperplane.make((0, 1))
        diag = Hyperplane.make((1, -1))
        ambient = FlatSystem.ambient(2)
        first = ambient.add(x).add(y)
        second = ambient.add(diag).add(x)
        assert first == second
        assert first.flat_dim == 0
        assert first.contains(diag)
        assert ambient.add(x).add(x) == ambient.add(x)

    def test_is_essential(self):
        assert not is_essential(Arrangement.of(2, [Hyperplane.make((1, -1))]))
        assert is_essential(
            Arrangement.of(2, [Hyperplane.make((1, -1)), Hyperplane.make((1, 1), 1)])
        )
        assert not is_essential(Arrangement.of(1, []))
