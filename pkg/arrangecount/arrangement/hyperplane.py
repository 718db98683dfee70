from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Iterator, List, Sequence, Tuple, Union

from arrangecount.errors import InvalidParams

Number = Union[int, Fraction]


def _strip_trailing(values: Tuple[Fraction, ...]) -> Tuple[Fraction, ...]:
    end = len(values)
    while end > 0 and values[end - 1] == 0:
        end -= 1
    return values[:end]


@dataclass(frozen=True)
class Hyperplane:
    """The affine hyperplane ``normal . x = offset + sum_k generic[k] * w_k``.

    The ``w_k`` are formal reals which, together with 1, are linearly
    independent over Q; they carry offsets such as ratios of logarithms
    exactly. Instances are canonical: the normal is a primitive integer vector
    whose first nonzero entry is positive, so equal hyperplanes compare equal.
    Build them with :meth:`make`.
    """

    normal: Tuple[int, ...]
    offset: Fraction = Fraction(0)
    generic: Tuple[Fraction, ...] = ()

    @classmethod
    def make(
        cls,
        normal: Sequence[Number],
        offset: Number = 0,
        generic: Sequence[Number] = (),
    ) -> Hyperplane:
        values = [Fraction(c) for c in normal]
        if all(c == 0 for c in values):
            raise InvalidParams(
                f"hyperplane normal must be nonzero, got {list(normal)}"
            )
        scale = Fraction(lcm(*(c.denominator for c in values)))
        ints = [int(c * scale) for c in values]
        content = gcd(*ints)
        scale /= content
        first = next(c for c in ints if c != 0)
        if first < 0:
            scale = -scale
        return cls(
            normal=tuple(int(c * scale) for c in values),
            offset=Fraction(offset) * scale,
            generic=_strip_trailing(tuple(Fraction(g) * scale for g in generic)),
        )

    @property
    def dim(self) -> int:
        return len(self.normal)

    @property
    def is_rational(self) -> bool:
        return len(self.generic) == 0

    def rhs(self, width: int) -> Tuple[Fraction, ...]:
        """Offset as a vector: rational part then `width` formal parts."""
        padded = self.generic + (Fraction(0),) * (width - len(self.generic))
        return (self.offset,) + padded

    def homogeneous(self) -> Hyperplane:
        """The parallel hyperplane through the origin."""
        return Hyperplane(self.normal)

    def __str__(self) -> str:
        lhs = []
        for i, c in enumerate(self.normal):
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            var = f"x{i + 1}" if abs(c) == 1 else f"{abs(c)}*x{i + 1}"
            lhs.append(f"{sign} {var}" if lhs else ("-" if c < 0 else "") + var)
        rhs = [str(self.offset)] if self.offset != 0 or not self.generic else []
        for k, g in enumerate(self.generic):
            if g != 0:
                rhs.append(f"{g}*w{k + 1}")
        return f"{' '.join(lhs)} = {' + '.join(rhs)}"


@dataclass(frozen=True)
class Arrangement:
    """Duplicate-free sequence of hyperplanes in R^dim."""

    dim: int
    hyperplanes: Tuple[Hyperplane, ...] = ()

    @classmethod
    def of(cls, dim: int, hyperplanes: Iterable[Hyperplane]) -> Arrangement:
        if dim < 0:
            raise InvalidParams(f"dimension must be non-negative, got {dim}")
        seen = set()
        unique: List[Hyperplane] = []
        for h in hyperplanes:
            if h.dim != dim:
                raise InvalidParams(f"hyperplane {h} does not live in R^{dim}")
            if h not in seen:
                seen.add(h)
                unique.append(h)
        return cls(dim, tuple(unique))

    @property
    def width(self) -> int:
        """Number of formal offset components in use."""
        return max((len(h.generic) for h in self.hyperplanes), default=0)

    @property
    def is_rational(self) -> bool:
        return all(h.is_rational for h in self.hyperplanes)

    def __len__(self) -> int:
        return len(self.hyperplanes)

    def __iter__(self) -> Iterator[Hyperplane]:
        return iter(self.hyperplanes)

    def __getitem__(self, index: int) -> Hyperplane:
        return self.hyperplanes[index]
