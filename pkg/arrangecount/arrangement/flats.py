from __future__ import annotations

from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple

from arrangecount.arrangement.hyperplane import Arrangement, Hyperplane

# (pivot column, normal, rhs) with normal[pivot] == 1
Row = Tuple[int, Tuple[Fraction, ...], Tuple[Fraction, ...]]


class FlatSystem:
    """An affine flat as a solved linear system in reduced row echelon form.

    The right-hand sides are vectors: a rational part followed by one entry per
    formal offset component. Because the formal components are independent over
    Q, a system is consistent exactly when it is consistent componentwise.
    The reduced form is unique per flat, so :attr:`key` identifies flats.
    """

    __slots__ = ("dim", "width", "_rows")

    def __init__(self, dim: int, width: int = 0, rows: Sequence[Row] = ()) -> None:
        self.dim = dim
        self.width = width
        self._rows: Tuple[Row, ...] = tuple(rows)

    @classmethod
    def ambient(cls, dim: int, width: int = 0) -> FlatSystem:
        return cls(dim, width)

    @property
    def rank(self) -> int:
        return len(self._rows)

    @property
    def flat_dim(self) -> int:
        return self.dim - self.rank

    @property
    def key(self) -> Tuple[Row, ...]:
        return self._rows

    def _reduce(
        self, h: Hyperplane
    ) -> Tuple[List[Fraction], List[Fraction]]:
        normal = [Fraction(c) for c in h.normal]
        rhs = list(h.rhs(self.width))
        for pivot, row_normal, row_rhs in self._rows:
            factor = normal[pivot]
            if factor == 0:
                continue
            for j in range(pivot, self.dim):
                normal[j] -= factor * row_normal[j]
            for j in range(len(rhs)):
                rhs[j] -= factor * row_rhs[j]
        return normal, rhs

    def contains(self, h: Hyperplane) -> bool:
        """True iff this (nonempty) flat lies inside `h`."""
        normal, rhs = self._reduce(h)
        return all(c == 0 for c in normal) and all(c == 0 for c in rhs)

    def add(self, h: Hyperplane) -> Optional[FlatSystem]:
        """Intersect with `h`; None when the intersection is empty."""
        normal, rhs = self._reduce(h)
        pivot = next((j for j, c in enumerate(normal) if c != 0), None)
        if pivot is None:
            return self if all(c == 0 for c in rhs) else None
        lead = normal[pivot]
        new_normal = tuple(c / lead for c in normal)
        new_rhs = tuple(c / lead for c in rhs)

        rows: List[Row] = []
        for row_pivot, row_normal, row_rhs in self._rows:
            factor = row_normal[pivot]
            if factor != 0:
                row_normal = tuple(
                    a - factor * b for a, b in zip(row_normal, new_normal)
                )
                row_rhs = tuple(a - factor * b for a, b in zip(row_rhs, new_rhs))
            rows.append((row_pivot, row_normal, row_rhs))
        rows.append((pivot, new_normal, new_rhs))
        rows.sort(key=lambda row: row[0])
        return FlatSystem(self.dim, self.width, rows)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FlatSystem):
            return NotImplemented
        return self.dim == other.dim and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self.dim, self._rows))


def _solve(
    dim: int, width: int, hyperplanes: Iterable[Hyperplane]
) -> Optional[FlatSystem]:
    system: Optional[FlatSystem] = FlatSystem.ambient(dim, width)
    for h in hyperplanes:
        assert system is not None
        system = system.add(h)
        if system is None:
            return None
    return system


def rank(hyperplanes: Sequence[Hyperplane]) -> int:
    """Dimension of the span of the normals; 0 for the empty set."""
    if len(hyperplanes) == 0:
        return 0
    system = _solve(hyperplanes[0].dim, 0, (h.homogeneous() for h in hyperplanes))
    assert system is not None
    return system.rank


def is_central(hyperplanes: Sequence[Hyperplane]) -> bool:
    """True iff the hyperplanes share a common point; vacuously true for none."""
    if len(hyperplanes) == 0:
        return True
    width = max(len(h.generic) for h in hyperplanes)
    return _solve(hyperplanes[0].dim, width, hyperplanes) is not None


def is_essential(arr: Arrangement) -> bool:
    return rank(arr.hyperplanes) == arr.dim
