from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Dict, Sequence, Tuple

from arrangecount.errors import BudgetExceeded
from arrangecount.exactmath import IntPolynomial, binomial
from arrangecount.graphcount.graph import Graph, iter_bits
from arrangecount.util.log import LogManager
from arrangecount.util.pool import ordered_map

DEFAULT_NODE_BUDGET = 50_000_000

_logger = LogManager.get_logger("Enumerator")


@dataclass(frozen=True)
class IndependenceCounts:
    """``counts[n]`` is the number of n-element independent sets, n <= cap."""

    counts: Tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.counts) == 0 or self.counts[0] != 1:
            raise ValueError(
                f"independence counts must start with s_0 = 1, got {self.counts}"
            )

    @property
    def cap(self) -> int:
        return len(self.counts) - 1

    def __getitem__(self, n: int) -> int:
        return self.counts[n]

    def __len__(self) -> int:
        return len(self.counts)

    @property
    def polynomial(self) -> IntPolynomial:
        """The truncated independence polynomial."""
        return IntPolynomial(self.counts)

    def truncated(self, cap: int) -> IndependenceCounts:
        return IndependenceCounts(self.counts[: cap + 1])

    def convolve(self, other: IndependenceCounts) -> IndependenceCounts:
        cap = min(self.cap, other.cap)
        return IndependenceCounts(_convolve(self.counts, other.counts, cap))


def _convolve(a: Sequence[int], b: Sequence[int], cap: int) -> Tuple[int, ...]:
    return tuple(
        sum(a[i] * b[n - i] for i in range(n + 1) if i < len(a) and n - i < len(b))
        for n in range(cap + 1)
    )


class IndependentSetCounter:
    """Counts independent sets by size with lexicographic extension.

    A set is grown only by vertices above its largest element that are not
    adjacent to any chosen vertex, so every set is produced once. The
    candidates left after a choice form a bitmask, and equal candidate masks
    at equal remaining size share one memoised result. The lowest candidates
    with no neighbour among the other candidates are peeled off first and
    contribute a binomial factor.
    """

    def __init__(self, masks: Sequence[int], budget_nodes: int = DEFAULT_NODE_BUDGET):
        self._masks = tuple(masks)
        # neighbours above each vertex
        self._later = tuple(m >> (v + 1) << (v + 1) for v, m in enumerate(self._masks))
        self._budget = budget_nodes
        self._memo: Dict[Tuple[int, int], Tuple[int, ...]] = {}
        self.nodes = 0

    def count(self, candidates: int, cap: int) -> Tuple[int, ...]:
        """Counts of independent j-subsets of `candidates`, for j = 0..cap."""
        if cap == 0:
            return (1,)
        if cap == 1 or candidates == 0:
            return (1, candidates.bit_count()) + (0,) * (cap - 1)
        key = (candidates, cap)
        hit = self._memo.get(key)
        if hit is not None:
            return hit

        self.nodes += 1
        if self.nodes > self._budget:
            raise BudgetExceeded(
                f"enumeration exceeded the budget of {self._budget} nodes"
            )

        rest = candidates
        free = 0
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            if self._later[v] & rest:
                break
            rest ^= low
            free += 1

        counts = [1] + [0] * cap
        remaining = rest
        for v in iter_bits(rest):
            remaining ^= 1 << v
            sub = self.count(remaining & ~self._masks[v], cap - 1)
            for j, c in enumerate(sub):
                counts[j + 1] += c
        if free:
            free_counts = [comb(free, j) for j in range(cap + 1)]
            counts = list(_convolve(counts, free_counts, cap))

        result = tuple(counts)
        self._memo[key] = result
        return result


def _count_branches(
    task: Tuple[Tuple[int, ...], Tuple[int, ...], int, int]
) -> Tuple[int, ...]:
    masks, firsts, cap, budget = task
    counter = IndependentSetCounter(masks, budget)
    full = (1 << len(masks)) - 1
    total = [0] * cap
    for v in firsts:
        above = full >> (v + 1) << (v + 1)
        sub = counter.count(above & ~masks[v], cap - 1)
        for j, c in enumerate(sub):
            total[j] += c
    return tuple(total)


def independence_counts(
    g: Graph,
    cap: int,
    workers: int = 1,
    budget_nodes: int = DEFAULT_NODE_BUDGET,
) -> IndependenceCounts:
    """s_0..s_cap of `g` from one enumeration pass.

    With several workers the sets are partitioned by their smallest vertex;
    the partitions are counted independently and summed in vertex order.

    :raises BudgetExceeded: a counter expanded more than `budget_nodes` nodes
    """
    if cap < 0:
        raise ValueError(f"cap must be non-negative, got {cap}")
    masks = g.masks
    if workers == 1 or cap < 2 or g.vcount < 2:
        counter = IndependentSetCounter(masks, budget_nodes)
        counts = counter.count((1 << g.vcount) - 1, cap)
        _logger.debug(f"{g}: {counter.nodes} nodes for cap {cap}")
        return IndependenceCounts(counts)

    chunks = max(1, min(g.vcount, 4 * workers))
    tasks = [
        (masks, tuple(range(i, g.vcount, chunks)), cap, budget_nodes)
        for i in range(chunks)
    ]
    counts = [1] + [0] * cap
    for part in ordered_map(_count_branches, tasks, workers):
        for j, c in enumerate(part):
            counts[j + 1] += c
    return IndependenceCounts(tuple(counts))


def count_independent_sets(g: Graph, n: int, **kwargs) -> int:
    """Number of n-element independent sets of `g`."""
    if n < 0:
        raise ValueError(f"set size must be non-negative, got {n}")
    return independence_counts(g, n, **kwargs)[n]


def union_counts_by_convolution(
    counts: Sequence[IndependenceCounts],
) -> IndependenceCounts:
    """Counts of a disjoint union: the product of the independence polynomials."""
    if not counts:
        return IndependenceCounts((1,))
    result = counts[0]
    for other in counts[1:]:
        result = result.convolve(other)
    return result


def pendant_counts(base: IndependenceCounts, k: int, cap: int) -> IndependenceCounts:
    """Counts of the graph obtained by hanging a leaf on each of `k` base vertices.

    An independent set picks i base vertices independently, then n - i leaves
    among the k - i whose base vertex was not picked.
    """
    if cap > base.cap:
        raise ValueError(f"base counts only reach {base.cap}, need {cap}")
    return IndependenceCounts(
        tuple(
            sum(base[i] * binomial(k - i, n - i) for i in range(n + 1))
            for n in range(cap + 1)
        )
    )
