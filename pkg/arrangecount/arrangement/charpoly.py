from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Callable, Dict, FrozenSet, List, Optional, Sequence

from arrangecount.arrangement.families import ArrangementFamily, instantiate
from arrangecount.arrangement.flats import FlatSystem
from arrangecount.arrangement.hyperplane import Arrangement, Hyperplane
from arrangecount.errors import BudgetExceeded
from arrangecount.exactmath import IntPolynomial
from arrangecount.util.log import LogManager

WHITNEY_BUDGET = 22
POSET_BUDGET = 18
GENERIC_SUBSET_BUDGET = 2**22

_logger = LogManager.get_logger("Whitney")


def whitney_charpoly(arr: Arrangement, budget: int = WHITNEY_BUDGET) -> IntPolynomial:
    """Sum of ``(-1)^|B| t^(n - rank B)`` over the central subsets B.

    Subsets are visited depth-first in index order. A subtree is skipped when
    its subset is not central, and also when a later hyperplane already
    contains the current flat: toggling that hyperplane pairs the subsets of
    the subtree with opposite signs and equal ranks, so they sum to zero.

    :raises BudgetExceeded: more than `budget` hyperplanes
    """
    if len(arr) > budget:
        raise BudgetExceeded(
            f"Whitney sum over {len(arr)} hyperplanes exceeds the budget of {budget}"
        )
    n = arr.dim
    hs = arr.hyperplanes
    coeffs = [0] * (n + 1)
    visited = 0

    def visit(start: int, system: FlatSystem, sign: int) -> None:
        nonlocal visited
        visited += 1
        for j in range(start, len(hs)):
            if system.contains(hs[j]):
                return
        coeffs[system.flat_dim] += sign
        for i in range(start, len(hs)):
            nxt = system.add(hs[i])
            if nxt is not None:
                visit(i + 1, nxt, -sign)

    visit(0, FlatSystem.ambient(n, arr.width), 1)
    _logger.debug(f"Whitney sum over {len(hs)} hyperplanes visited {visited} subsets")
    return IntPolynomial(coeffs)


@dataclass(frozen=True)
class PosetNode:
    """A flat of the intersection poset with its Möbius value."""

    subspace: FlatSystem
    dim: int
    mobius: int
    hyperplanes: FrozenSet[int]
    """Indices of the hyperplanes containing the flat."""


def intersection_poset(
    arr: Arrangement, budget: int = POSET_BUDGET
) -> List[PosetNode]:
    """All nonempty intersections, bottom element first, ranks ascending.

    A flat lies inside another exactly when its set of containing hyperplanes
    is a superset, so the Möbius recursion runs over those sets.
    """
    if len(arr) > budget:
        raise BudgetExceeded(
            f"intersection poset of {len(arr)} hyperplanes exceeds the budget "
            f"of {budget}"
        )
    hs = arr.hyperplanes
    bottom = FlatSystem.ambient(arr.dim, arr.width)
    levels: List[Dict[FlatSystem, FrozenSet[int]]] = [{bottom: frozenset()}]
    while True:
        layer: Dict[FlatSystem, FrozenSet[int]] = {}
        for flat, closure in levels[-1].items():
            for i, h in enumerate(hs):
                if i in closure:
                    continue
                nxt = flat.add(h)
                if nxt is None or nxt in layer:
                    continue
                layer[nxt] = frozenset(j for j, g in enumerate(hs) if nxt.contains(g))
        if not layer:
            break
        levels.append(layer)

    nodes: List[PosetNode] = []
    for layer in levels:
        for flat, closure in layer.items():
            below = sum(node.mobius for node in nodes if node.hyperplanes < closure)
            mobius = 1 if not closure else -below
            nodes.append(PosetNode(flat, flat.flat_dim, mobius, closure))
    return nodes


def mobius_charpoly(poset: Sequence[PosetNode], n: int) -> IntPolynomial:
    """Sum of ``mu(0, x) t^dim(x)`` over the poset."""
    coeffs = [0] * (n + 1)
    for node in poset:
        coeffs[node.dim] += node.mobius
    return IntPolynomial(coeffs)


def generic_charpoly(forms: Sequence[Sequence[int]], n: int) -> IntPolynomial:
    """Whitney sum for generic offsets: only linearly independent subsets count.

    The offsets of the hyperplanes are never inspected, so the result depends
    on the matroid of the linear forms alone.
    """
    bound = sum(comb(len(forms), k) for k in range(min(n, len(forms)) + 1))
    if bound > GENERIC_SUBSET_BUDGET:
        raise BudgetExceeded(
            f"{len(forms)} forms in dimension {n} exceed the subset budget"
        )
    hs = [Hyperplane.make(form) for form in forms]
    coeffs = [0] * (n + 1)

    def visit(start: int, system: FlatSystem, size: int) -> None:
        coeffs[n - size] += (-1) ** size
        for i in range(start, len(hs)):
            nxt = system.add(hs[i])
            if nxt is not None and nxt.rank > system.rank:
                visit(i + 1, nxt, size + 1)

    visit(0, FlatSystem.ambient(n), 0)
    return IntPolynomial(coeffs)


def zaslavsky_regions(chi: IntPolynomial, n: int) -> int:
    """Number of regions, ``(-1)^n chi(-1)``."""
    return (-1) ** n * chi(-1)


def zaslavsky_bounded(chi: IntPolynomial, rank: int) -> int:
    """Number of relatively bounded regions, ``(-1)^rank chi(1)``."""
    return (-1) ** rank * chi(1)


CharPolyFn = Callable[[ArrangementFamily, int], IntPolynomial]


def _whitney_of_family(family: ArrangementFamily, n: int) -> IntPolynomial:
    return whitney_charpoly(instantiate(family, n))


def deletion_restriction_check(
    a: Sequence[int], n: int, charpoly: Optional[CharPolyFn] = None
) -> bool:
    """Check ``chi_{A'_n} = chi_{A_n} + n chi_{A_(n-1)}`` for the eq1 family.

    A'_n is the central companion without the coordinate hyperplanes and
    chi_{A_0} = 1. The polynomials come from `charpoly`, by default the
    Whitney sum of the instantiated arrangements.
    """
    compute = charpoly or _whitney_of_family
    central = compute(ArrangementFamily.eq1_minus_zero(a), n)
    full = compute(ArrangementFamily.eq1(a), n)
    lower = compute(ArrangementFamily.eq1(a), n - 1) if n > 1 else IntPolynomial((1,))
    return central == full + n * lower
