from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

import sympy

from arrangecount.errors import BudgetExceeded, InvalidParams


class FactorizationBudgetExceeded(BudgetExceeded):
    pass


DEFAULT_FACTOR_LIMIT = 10**6


def _factor(value: int, limit: int) -> Dict[int, int]:
    factors = sympy.factorint(value, limit=limit)
    for p in factors:
        if not sympy.isprime(p):
            raise FactorizationBudgetExceeded(
                f"{value} has the unresolved factor {p} beyond trial division "
                f"limit {limit}"
            )
    return {int(p): int(e) for p, e in factors.items()}


@dataclass(frozen=True)
class ExponentMatrix:
    """Prime-exponent rows of a sequence of integers.

    Row ``i`` holds the exponent of ``primes[j]`` in ``values[i]``.
    """

    values: Tuple[int, ...]
    primes: Tuple[int, ...]
    rows: Tuple[Tuple[int, ...], ...]

    @classmethod
    def of(
        cls, values: Sequence[int], limit: int = DEFAULT_FACTOR_LIMIT
    ) -> ExponentMatrix:
        for a in values:
            if a < 2:
                raise InvalidParams(
                    f"multiplicative independence needs a >= 2, got {a}"
                )
        factorisations = [_factor(a, limit) for a in values]
        primes = sorted({p for f in factorisations for p in f})
        rows = tuple(tuple(f.get(p, 0) for p in primes) for f in factorisations)
        return cls(tuple(values), tuple(primes), rows)

    def reconstruct(self) -> List[int]:
        out = []
        for row in self.rows:
            value = 1
            for p, e in zip(self.primes, row):
                value *= p**e
            out.append(value)
        return out

    @property
    def rank(self) -> int:
        if not self.rows or not self.primes:
            return 0
        return int(sympy.Matrix(self.rows).rank())


def mult_independent(a: Sequence[int], limit: int = DEFAULT_FACTOR_LIMIT) -> bool:
    """True iff no nontrivial integer-exponent product of `a` equals 1."""
    matrix = ExponentMatrix.of(a, limit)
    return matrix.rank == len(matrix.rows)
