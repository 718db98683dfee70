from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations, permutations
from typing import Iterator, List, Sequence, Tuple

from arrangecount.arrangement.hyperplane import Arrangement, Hyperplane
from arrangecount.errors import InvalidParams


class FamilyKind(Enum):
    BRAID = "braid"
    EQ1 = "eq1"
    """x_i = 0, x_i = x_j and x_i = a_r x_j for i != j."""
    EQ1_MINUS_ZERO = "eq1_minus_zero"
    """The central companion of EQ1: the same without x_i = 0."""
    EQ1_ORDERED = "eq1_ordered"
    """EQ1 with the multiplicative hyperplanes restricted to i < j."""
    DIFFERENCE = "difference"
    AFFINE_MULT = "affine_mult"
    RATIO = "ratio"
    CATALAN = "catalan"
    EXTENDED_CATALAN = "extended_catalan"
    SHI = "shi"
    LOG_CATALAN = "log_catalan"
    """Differences 0 (i < j), 1 and formal log a_r / log a_1 (i != j)."""
    LOG_SHI = "log_shi"
    """LOG_CATALAN with every difference restricted to i < j."""


# kinds whose induced graph on Z/qZ computes chi(q) = n! s_n
GRAPH_BACKED = {
    FamilyKind.BRAID,
    FamilyKind.EQ1,
    FamilyKind.EQ1_MINUS_ZERO,
    FamilyKind.DIFFERENCE,
    FamilyKind.AFFINE_MULT,
    FamilyKind.RATIO,
    FamilyKind.CATALAN,
    FamilyKind.EXTENDED_CATALAN,
}

_NEEDS_A = {
    FamilyKind.EQ1,
    FamilyKind.EQ1_MINUS_ZERO,
    FamilyKind.EQ1_ORDERED,
    FamilyKind.DIFFERENCE,
    FamilyKind.AFFINE_MULT,
    FamilyKind.RATIO,
    FamilyKind.LOG_CATALAN,
    FamilyKind.LOG_SHI,
}
_MULTIPLICATIVE = {
    FamilyKind.EQ1,
    FamilyKind.EQ1_MINUS_ZERO,
    FamilyKind.EQ1_ORDERED,
    FamilyKind.LOG_CATALAN,
    FamilyKind.LOG_SHI,
}


@dataclass(frozen=True)
class ArrangementFamily:
    """Parametric recipe producing one arrangement per dimension."""

    kind: FamilyKind
    a: Tuple[int, ...] = ()
    b: Tuple[int, ...] = ()
    a_max: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", tuple(int(x) for x in self.a))
        object.__setattr__(self, "b", tuple(int(x) for x in self.b))
        if self.kind in _NEEDS_A and len(self.a) == 0:
            raise InvalidParams(f"family {self.kind.value} needs a nonempty a")
        if self.kind in _MULTIPLICATIVE and any(x < 2 for x in self.a):
            raise InvalidParams(
                f"family {self.kind.value} needs every a_r >= 2, got {self.a}"
            )
        if self.kind in (FamilyKind.AFFINE_MULT, FamilyKind.RATIO):
            if len(self.a) != len(self.b):
                raise InvalidParams(f"a and b differ in length: {self.a} vs {self.b}")
        if self.kind == FamilyKind.RATIO:
            if any(x == y for x, y in zip(self.a, self.b)):
                raise InvalidParams(
                    f"ratio family needs a_r != b_r, got {self.a}, {self.b}"
                )
            if any(x == 0 or y == 0 for x, y in zip(self.a, self.b)):
                raise InvalidParams("ratio family needs nonzero coefficients")
        if self.kind == FamilyKind.DIFFERENCE and 0 in self.a:
            raise InvalidParams("difference family offsets must be nonzero")
        if self.kind == FamilyKind.EXTENDED_CATALAN and self.a_max < 1:
            raise InvalidParams(f"extended Catalan needs a_max >= 1, got {self.a_max}")

    @classmethod
    def braid(cls) -> ArrangementFamily:
        return cls(FamilyKind.BRAID)

    @classmethod
    def eq1(cls, a: Sequence[int]) -> ArrangementFamily:
        return cls(FamilyKind.EQ1, tuple(a))

    @classmethod
    def eq1_minus_zero(cls, a: Sequence[int]) -> ArrangementFamily:
        return cls(FamilyKind.EQ1_MINUS_ZERO, tuple(a))

    @classmethod
    def eq1_ordered(cls, a: Sequence[int]) -> ArrangementFamily:
        return cls(FamilyKind.EQ1_ORDERED, tuple(a))

    @classmethod
    def difference(cls, a: Sequence[int]) -> ArrangementFamily:
        return cls(FamilyKind.DIFFERENCE, tuple(a))

    @classmethod
    def affine_mult(cls, a: Sequence[int], b: Sequence[int]) -> ArrangementFamily:
        return cls(FamilyKind.AFFINE_MULT, tuple(a), tuple(b))

    @classmethod
    def ratio(cls, a: Sequence[int], b: Sequence[int]) -> ArrangementFamily:
        return cls(FamilyKind.RATIO, tuple(a), tuple(b))

    @classmethod
    def catalan(cls) -> ArrangementFamily:
        return cls(FamilyKind.CATALAN)

    @classmethod
    def extended_catalan(cls, a_max: int) -> ArrangementFamily:
        return cls(FamilyKind.EXTENDED_CATALAN, a_max=a_max)

    @classmethod
    def shi(cls) -> ArrangementFamily:
        return cls(FamilyKind.SHI)

    @classmethod
    def log_catalan(cls, a: Sequence[int]) -> ArrangementFamily:
        return cls(FamilyKind.LOG_CATALAN, tuple(a))

    @classmethod
    def log_shi(cls, a: Sequence[int]) -> ArrangementFamily:
        return cls(FamilyKind.LOG_SHI, tuple(a))

    @property
    def differences(self) -> Tuple[int, ...]:
        """The nonzero offsets of a difference-type family."""
        if self.kind == FamilyKind.CATALAN:
            return (1,)
        if self.kind == FamilyKind.EXTENDED_CATALAN:
            return tuple(range(1, self.a_max + 1))
        if self.kind == FamilyKind.DIFFERENCE:
            return self.a
        raise InvalidParams(f"{self.kind.value} is not a difference family")

    @property
    def is_graph_backed(self) -> bool:
        return self.kind in GRAPH_BACKED

    def describe(self) -> str:
        params = []
        if self.a:
            params.append("a=" + ",".join(map(str, self.a)))
        if self.b:
            params.append("b=" + ",".join(map(str, self.b)))
        if self.kind == FamilyKind.EXTENDED_CATALAN:
            params.append(f"amax={self.a_max}")
        if not params:
            return self.kind.value
        return f"{self.kind.value}:{';'.join(params)}"


def _unit(n: int, i: int, value: int = 1) -> List[int]:
    vec = [0] * n
    vec[i] = value
    return vec


def _form(n: int, i: int, ci: int, j: int, cj: int) -> List[int]:
    vec = [0] * n
    vec[i] += ci
    vec[j] += cj
    return vec


def _braid(n: int) -> Iterator[Hyperplane]:
    for i, j in combinations(range(n), 2):
        yield Hyperplane.make(_form(n, i, 1, j, -1))


def _coordinate(n: int) -> Iterator[Hyperplane]:
    for i in range(n):
        yield Hyperplane.make(_unit(n, i))


def _differences(n: int, offsets: Sequence[int], ordered: bool) -> Iterator[Hyperplane]:
    pairs = combinations(range(n), 2) if ordered else permutations(range(n), 2)
    for i, j in pairs:
        for c in offsets:
            yield Hyperplane.make(_form(n, i, 1, j, -1), c)


def _formal_differences(n: int, m: int, ordered: bool) -> Iterator[Hyperplane]:
    pairs = combinations(range(n), 2) if ordered else permutations(range(n), 2)
    for i, j in pairs:
        for r in range(1, m):
            yield Hyperplane.make(_form(n, i, 1, j, -1), 0, _unit(m - 1, r - 1))


def instantiate(family: ArrangementFamily, n: int) -> Arrangement:
    """The member of `family` in R^n, duplicates removed."""
    if n < 1:
        raise InvalidParams(f"dimension must be at least 1, got {n}")
    kind = family.kind
    hs: List[Hyperplane] = []
    if kind in (FamilyKind.SHI, FamilyKind.LOG_CATALAN, FamilyKind.LOG_SHI):
        hs.extend(_braid(n))
        hs.extend(_differences(n, (1,), ordered=kind != FamilyKind.LOG_CATALAN))
        if kind != FamilyKind.SHI:
            hs.extend(
                _formal_differences(n, len(family.a), kind == FamilyKind.LOG_SHI)
            )
        return Arrangement.of(n, hs)

    if kind in (FamilyKind.EQ1, FamilyKind.EQ1_ORDERED, FamilyKind.RATIO):
        hs.extend(_coordinate(n))
    hs.extend(_braid(n))

    if kind in (FamilyKind.EQ1, FamilyKind.EQ1_MINUS_ZERO, FamilyKind.EQ1_ORDERED):
        pairs = (
            combinations(range(n), 2)
            if kind == FamilyKind.EQ1_ORDERED
            else permutations(range(n), 2)
        )
        for i, j in pairs:
            for a in family.a:
                hs.append(Hyperplane.make(_form(n, i, 1, j, -a)))
    elif kind in (
        FamilyKind.DIFFERENCE,
        FamilyKind.CATALAN,
        FamilyKind.EXTENDED_CATALAN,
    ):
        hs.extend(_differences(n, family.differences, ordered=False))
    elif kind == FamilyKind.AFFINE_MULT:
        for i, j in permutations(range(n), 2):
            for a, b in zip(family.a, family.b):
                hs.append(Hyperplane.make(_form(n, i, 1, j, -a), b))
    elif kind == FamilyKind.RATIO:
        for i, j in permutations(range(n), 2):
            for a, b in zip(family.a, family.b):
                hs.append(Hyperplane.make(_form(n, i, a, j, -b)))
    return Arrangement.of(n, hs)


def four_line_arrangement() -> Arrangement:
    """x = 0, y = 0, x = y and x + y = 1 in the plane."""
    return Arrangement.of(
        2,
        [
            Hyperplane.make((1, 0)),
            Hyperplane.make((0, 1)),
            Hyperplane.make((1, -1)),
            Hyperplane.make((1, 1), 1),
        ],
    )


def extended_catalan_forms(n: int, m: int) -> List[Tuple[int, ...]]:
    """Linear forms of the logarithmic Catalan arrangement, with multiplicity.

    Every pair i < j contributes the form x_i - x_j once for the braid
    hyperplane and twice for each of the m nonzero offsets.
    """
    if n < 1 or m < 1:
        raise InvalidParams(f"need n >= 1 and m >= 1, got n={n}, m={m}")
    forms: List[Tuple[int, ...]] = []
    for i, j in combinations(range(n), 2):
        forms.extend([tuple(_form(n, i, 1, j, -1))] * (1 + 2 * m))
    return forms
