from itertools import combinations
from typing import List, Set, Tuple

import numpy as np
import sympy

from arrangecount.arrangement import Arrangement, Hyperplane
from arrangecount.errors import ArrangeCountError, BudgetExceeded, InvalidParams
from arrangecount.util.log import LogManager
from arrangecount.util.pool import ordered_map

OFFPOINT_BUDGET = 10**8

_logger = LogManager.get_logger("OffPoints")


class DegenerateModQ(ArrangeCountError):
    pass


def reduce_mod(h: Hyperplane, q: int) -> Tuple[Tuple[int, ...], int]:
    """Residues of the normal and offset of `h` modulo `q`.

    :raises DegenerateModQ: the offset denominator or the whole normal vanishes mod q
    """
    if not h.is_rational:
        raise InvalidParams(f"{h} has formal offsets and no reduction mod {q}")
    if h.offset.denominator % q == 0:
        raise DegenerateModQ(f"offset of {h} has a denominator divisible by {q}")
    normal = tuple(c % q for c in h.normal)
    if all(c == 0 for c in normal):
        raise DegenerateModQ(f"normal of {h} vanishes modulo {q}")
    offset = h.offset.numerator * pow(h.offset.denominator, -1, q) % q
    return normal, offset


def _count_slice(task: Tuple[int, int, int, np.ndarray, np.ndarray]) -> int:
    q, dim, first, normals, offsets = task
    base = (normals[:, 0] * first - offsets) % q
    if dim == 1:
        return int(np.all(base != 0))
    # remaining coordinates of every point whose first coordinate is `first`
    rest = np.indices((q,) * (dim - 1), dtype=np.int64).reshape(dim - 1, -1)
    alive = np.ones(rest.shape[1], dtype=bool)
    for row, start in zip(normals, base):
        alive &= (row[1:] @ rest + start) % q != 0
    return int(np.count_nonzero(alive))


def count_offpoints(
    arr: Arrangement, q: int, budget: int = OFFPOINT_BUDGET, workers: int = 1
) -> int:
    """Number of points of F_q^n on none of the hyperplanes, by exhaustive scan.

    The scan is split over the first coordinate; each slice works with int64
    residues and the slice totals are summed as Python integers.

    :raises BudgetExceeded: q^n exceeds `budget`
    :raises DegenerateModQ: some hyperplane does not reduce modulo q
    """
    n = arr.dim
    if q**n > budget:
        raise BudgetExceeded(f"scan of {q}^{n} points exceeds the budget of {budget}")
    if n == 0:
        return 1
    reduced: List[Tuple[Tuple[int, ...], int]] = [reduce_mod(h, q) for h in arr]
    normals = np.array([r[0] for r in reduced], dtype=np.int64).reshape(len(reduced), n)
    offsets = np.array([r[1] for r in reduced], dtype=np.int64)
    tasks = [(q, n, first, normals, offsets) for first in range(q)]
    total = sum(ordered_map(_count_slice, tasks, workers))
    _logger.debug(f"{total} of {q}^{n} points lie off {len(arr)} hyperplanes")
    return total


def _integer_rows(arr: Arrangement) -> List[List[int]]:
    rows = []
    for h in arr:
        if not h.is_rational:
            raise InvalidParams(f"{h} has formal offsets and no integer form")
        den = h.offset.denominator
        rows.append([c * den for c in h.normal] + [h.offset.numerator])
    return rows


def bad_primes(arr: Arrangement) -> Set[int]:
    """Primes dividing some nonzero minor of the augmented matrix of `arr`.

    Away from these primes every subset has the same rank over F_q as over Q,
    so the off-point count at q equals chi(q).
    """
    rows = _integer_rows(arr)
    width = arr.dim + 1
    minors: Set[int] = set()
    for k in range(1, min(len(rows), width) + 1):
        for picked in combinations(rows, k):
            for cols in combinations(range(width), k):
                det = sympy.Matrix([[row[c] for c in cols] for row in picked]).det()
                if det != 0:
                    minors.add(abs(int(det)))
    primes: Set[int] = set()
    for m in minors:
        primes.update(int(p) for p in sympy.primefactors(m))
    return primes
