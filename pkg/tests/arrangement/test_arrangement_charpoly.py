import unittest

import pytest

from arrangecount.arrangement import (
    ArrangementFamily,
    FamilyKind,
    deletion_restriction_check,
    extended_catalan_forms,
    four_line_arrangement,
    generic_charpoly,
    instantiate,
    intersection_poset,
    mobius_charpoly,
    whitney_charpoly,
    zaslavsky_bounded,
    zaslavsky_regions,
)
from arrangecount.errors import BudgetExceeded, InvalidParams
from arrangecount.exactmath import IntPolynomial

t = IntPolynomial.variable()


@pytest.mark.parametrize(
    "family, n, size",
    [
        (ArrangementFamily.braid(), 4, 6),
        (ArrangementFamily.eq1((2,)), 3, 12),
        (ArrangementFamily.eq1((2, 3)), 3, 18),
        (ArrangementFamily.eq1_minus_zero((2,)), 3, 9),
        (ArrangementFamily.eq1_ordered((2,)), 3, 9),
        (ArrangementFamily.catalan(), 3, 9),
        (ArrangementFamily.extended_catalan(2), 3, 15),
        (ArrangementFamily.shi(), 3, 6),
        (ArrangementFamily.log_catalan((2, 3)), 2, 5),
        (ArrangementFamily.log_shi((2, 3)), 3, 9),
    ],
)
def test_family_sizes(family, n, size):
    assert len(instantiate(family, n)) == size


@pytest.mark.parametrize(
    "family, n, expected",
    [
        (ArrangementFamily.braid(), 3, t * (t - 1) * (t - 2)),
        (ArrangementFamily.eq1((2,)), 2, (t - 1) * (t - 4)),
        (ArrangementFamily.eq1((2, 3)), 2, (t - 1) * (t - 6)),
        (ArrangementFamily.eq1_ordered((2,)), 2, (t - 1) * (t - 3)),
        (ArrangementFamily.catalan(), 2, t * (t - 3)),
        (ArrangementFamily.catalan(), 3, t * (t - 4) * (t - 5)),
        (ArrangementFamily.shi(), 3, t * (t - 3) ** 2),
        (ArrangementFamily.extended_catalan(2), 3, t * (t - 7) * (t - 8)),
        (ArrangementFamily.log_catalan((2,)), 2, t * (t - 3)),
    ],
)
def test_whitney_examples(family, n, expected):
    assert whitney_charpoly(instantiate(family, n)) == expected


@pytest.mark.parametrize(
    "family, n",
    [
        (ArrangementFamily.braid(), 3),
        (ArrangementFamily.eq1((2,)), 3),
        (ArrangementFamily.catalan(), 3),
        (ArrangementFamily.shi(), 3),
        (ArrangementFamily.affine_mult((2,), (1,)), 2),
        (ArrangementFamily.ratio((2,), (3,)), 2),
        (ArrangementFamily.log_catalan((2, 3)), 3),
    ],
)
def test_whitney_matches_mobius(family, n):
    arr = instantiate(family, n)
    assert whitney_charpoly(arr) == mobius_charpoly(intersection_poset(arr), n)


@pytest.mark.parametrize("n", [1, 2])
@pytest.mark.parametrize("m", [1, 2])
def test_generic_offsets_match_formal_offsets(n, m):
    a = tuple(range(2, m + 2))
    arr = instantiate(ArrangementFamily.log_catalan(a), n)
    assert whitney_charpoly(arr) == generic_charpoly(extended_catalan_forms(n, m), n)


class TestFourLines(unittest.TestCase):
    def test_charpoly_and_regions(self):
        arr = four_line_arrangement()
        chi = whitney_charpoly(arr)
        assert chi == IntPolynomial((5, -4, 1))
        assert zaslavsky_regions(chi, 2) == 10
        assert zaslavsky_bounded(chi, 2) == 2

    def test_poset(self):
        poset = intersection_poset(four_line_arrangement())
        assert len(poset) == 9
        assert poset[0].mobius == 1 and poset[0].dim == 2
        points = [node for node in poset if node.dim == 0]
        assert sorted(node.mobius for node in points) == [1, 1, 1, 2]


def test_braid_regions():
    chi = whitney_charpoly(instantiate(ArrangementFamily.braid(), 3))
    assert zaslavsky_regions(chi, 3) == 6
    assert zaslavsky_bounded(chi, 2) == 0


@pytest.mark.parametrize("a, n", [((2,), 2), ((2, 3), 2), ((2,), 3)])
def test_deletion_restriction(a, n):
    assert deletion_restriction_check(a, n)


def test_budgets():
    with pytest.raises(BudgetExceeded):
        whitney_charpoly(four_line_arrangement(), budget=3)
    with pytest.raises(BudgetExceeded):
        intersection_poset(four_line_arrangement(), budget=3)


@pytest.mark.parametrize(
    "build",
    [
        lambda: ArrangementFamily.eq1(()),
        lambda: ArrangementFamily.eq1((1,)),
        lambda: ArrangementFamily.ratio((2,), (2,)),
        lambda: ArrangementFamily.affine_mult((2, 3), (1,)),
        lambda: ArrangementFamily.difference((0, 1)),
        lambda: ArrangementFamily.extended_catalan(0),
        lambda: instantiate(ArrangementFamily.braid(), 0),
    ],
)
def test_invalid_parameters(build):
    with pytest.raises(InvalidParams):
        build()


def test_describe():
    assert ArrangementFamily.braid().describe() == "braid"
    assert ArrangementFamily.eq1((2, 3)).describe() == "eq1:a=2,3"
    assert ArrangementFamily.affine_mult((2,), (1,)).describe() == "affine_mult:a=2;b=1"
    assert ArrangementFamily.extended_catalan(2).describe() == "extended_catalan:amax=2"
    assert FamilyKind("shi") == FamilyKind.SHI


if __name__ == "__main__":
    unittest.main()
