from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

from bitarray import bitarray, frozenbitarray
from bitarray.util import ba2int, zeros


def iter_bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of `mask`, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Finite simple graph on vertices 0..vcount-1.

    Row ``adjacency[v]`` is a little-endian bitset whose bit ``u`` is set iff
    u and v are adjacent. ``labels`` optionally records the residue each vertex
    stands for, which is what edge-set comparisons between families use.
    Build instances with :meth:`from_edges`.
    """

    vcount: int
    adjacency: Tuple[frozenbitarray, ...]
    labels: Optional[Tuple[int, ...]] = None

    @classmethod
    def from_edges(
        cls,
        vcount: int,
        edges: Iterable[Tuple[int, int]],
        labels: Optional[Sequence[int]] = None,
    ) -> Graph:
        """Symmetrised simple graph; self-loops are dropped."""
        if vcount < 0:
            raise ValueError(f"vertex count must be non-negative, got {vcount}")
        if labels is not None and len(labels) != vcount:
            raise ValueError(f"{len(labels)} labels for {vcount} vertices")
        rows: List[bitarray] = [zeros(vcount, endian="little") for _ in range(vcount)]
        for u, v in edges:
            if not (0 <= u < vcount and 0 <= v < vcount):
                raise ValueError(f"edge ({u}, {v}) outside 0..{vcount - 1}")
            if u == v:
                continue
            rows[u][v] = 1
            rows[v][u] = 1
        return cls(
            vcount,
            tuple(frozenbitarray(row) for row in rows),
            tuple(labels) if labels is not None else None,
        )

    @cached_property
    def masks(self) -> Tuple[int, ...]:
        """Adjacency rows as integers, bit u of ``masks[v]`` for the edge uv."""
        return tuple(ba2int(row) if self.vcount else 0 for row in self.adjacency)

    def neighbours(self, v: int) -> List[int]:
        return list(iter_bits(self.masks[v]))

    def degree(self, v: int) -> int:
        return self.adjacency[v].count()

    def edges(self) -> Iterator[Tuple[int, int]]:
        for u in range(self.vcount):
            for v in iter_bits(self.masks[u] >> (u + 1)):
                yield u, u + 1 + v

    @property
    def edge_count(self) -> int:
        return sum(row.count() for row in self.adjacency) // 2

    def label(self, v: int) -> int:
        return self.labels[v] if self.labels is not None else v

    def edge_set(self) -> FrozenSet[FrozenSet[int]]:
        """Edges as unordered pairs of labels."""
        return frozenset(
            frozenset((self.label(u), self.label(v))) for u, v in self.edges()
        )

    def relabel(self, mapping: Dict[int, int]) -> Graph:
        """Same graph with every label replaced through `mapping`."""
        return Graph(
            self.vcount,
            self.adjacency,
            tuple(mapping[self.label(v)] for v in range(self.vcount)),
        )

    def permuted(self, perm: Sequence[int]) -> Graph:
        """Isomorphic copy in which vertex v becomes vertex ``perm[v]``."""
        if sorted(perm) != list(range(self.vcount)):
            raise ValueError("perm is not a permutation of the vertices")
        labels = [0] * self.vcount
        for v in range(self.vcount):
            labels[perm[v]] = self.label(v)
        return Graph.from_edges(
            self.vcount, ((perm[u], perm[v]) for u, v in self.edges()), labels
        )

    def __str__(self) -> str:
        return f"Graph({self.vcount} vertices, {self.edge_count} edges)"
