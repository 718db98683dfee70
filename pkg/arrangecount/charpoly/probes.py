"""Experimental equality probes for two open invariance questions.

Both attach extra structure to every circulant part of a disjoint union and
ask whether the independent-set counts still depend only on the total size.
The reports record what enumeration observes and claim nothing beyond it.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence, Tuple

from arrangecount.graphcount import (
    Graph,
    attach_copies,
    attach_cycle,
    build_F,
    build_F_affine,
    disjoint_union,
    independence_counts,
)
from arrangecount.run.config import RunConfig


class Conjecture(Enum):
    ATTACHED_COPIES = "attached-copies"
    """Each vertex of F(a, k) joined to its own copy of a fixed graph."""
    ATTACHED_CYCLE = "attached-cycle"
    """Vertex v of F(a, b, k) joined to vertex v of a new k-cycle."""


@dataclass(frozen=True)
class ProbeRow:
    partition: Tuple[int, ...]
    union_counts: Tuple[int, ...]
    single_counts: Tuple[int, ...]

    @property
    def equal(self) -> bool:
        return self.union_counts == self.single_counts


@dataclass(frozen=True)
class ProbeReport:
    conjecture: Conjecture
    rows: Tuple[ProbeRow, ...]

    @property
    def equality_observed(self) -> bool:
        return all(row.equal for row in self.rows)


def _part(
    which: Conjecture,
    a: Sequence[int],
    b: Sequence[int],
    attached: Optional[Graph],
    k: int,
) -> Graph:
    if which == Conjecture.ATTACHED_COPIES:
        if attached is None:
            raise ValueError("attached-copies needs the graph to attach")
        return attach_copies(build_F(a, k), attached)
    return attach_cycle(build_F_affine(a, b, k))


def probe_conjecture(
    which: Conjecture,
    a: Sequence[int],
    partitions: Sequence[Sequence[int]],
    n_max: int,
    b: Sequence[int] = (),
    attached: Optional[Graph] = None,
    config: Optional[RunConfig] = None,
) -> ProbeReport:
    """For every partition compare the union of decorated parts with one
    decorated graph on the total."""
    config = config or RunConfig()

    def counts(parts: Sequence[int]) -> Tuple[int, ...]:
        g = disjoint_union([_part(which, a, b, attached, k) for k in parts])
        return independence_counts(
            g, n_max, workers=config.threads, budget_nodes=config.budget_nodes
        ).counts

    rows = tuple(
        ProbeRow(tuple(p), counts(p), counts([sum(p)])) for p in partitions
    )
    return ProbeReport(which, rows)
