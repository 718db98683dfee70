import numpy as np
import pytest

from arrangecount.charpoly import (
    Conjecture,
    oracle_triangle_check,
    probe_conjecture,
    random_arrangement,
)
from arrangecount.graphcount import path_graph


def test_empty_probe_observes_nothing():
    report = probe_conjecture(
        Conjecture.ATTACHED_COPIES, (1,), [], 3, attached=path_graph(1)
    )
    assert report.rows == ()
    assert report.equality_observed


def test_attached_copies_probe():
    report = probe_conjecture(
        Conjecture.ATTACHED_COPIES, (1,), [(6, 8)], 3, attached=path_graph(2)
    )
    (row,) = report.rows
    assert row.partition == (6, 8)
    # every part vertex carries two more vertices
    assert row.union_counts[1] == row.single_counts[1] == 42
    assert len(row.union_counts) == 4


def test_attached_cycle_probe():
    report = probe_conjecture(
        Conjecture.ATTACHED_CYCLE, (2,), [(6, 8), (14,)], 2, b=(1,)
    )
    assert [row.partition for row in report.rows] == [(6, 8), (14,)]
    assert report.rows[1].equal
    assert report.rows[0].union_counts[1] == 28


def test_attached_copies_needs_a_graph():
    with pytest.raises(ValueError):
        probe_conjecture(Conjecture.ATTACHED_COPIES, (1,), [(6, 8)], 2)


def test_random_arrangement_bounds():
    rng = np.random.default_rng(7)
    for _ in range(20):
        arr = random_arrangement(rng)
        assert 1 <= arr.dim <= 3
        assert 1 <= len(arr) <= 10
        assert arr.is_rational


def test_oracle_triangle():
    report = oracle_triangle_check(trials=6, seed=3)
    assert len(report.rows) == 6
    assert all(len(row.counts) == 3 for row in report.rows)
    assert all(q > 150 for row in report.rows for q, _ in row.counts)
    assert report.passed


def test_oracle_is_seeded():
    first = oracle_triangle_check(trials=3, seed=11)
    again = oracle_triangle_check(trials=3, seed=11)
    assert first == again
