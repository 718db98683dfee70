from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, List

import sympy


def next_prime(n: int) -> int:
    """Smallest prime strictly greater than `n`."""
    if n < 0:
        raise ValueError(f"next_prime needs a non-negative argument, got {n}")
    return int(sympy.nextprime(n))


def is_prime(n: int) -> bool:
    return bool(sympy.isprime(n))


@dataclass(frozen=True)
class PrimeSampler:
    """Consecutive primes strictly above `lower_bound`."""

    lower_bound: int = 100

    def __iter__(self) -> Iterator[int]:
        q = self.lower_bound
        while True:
            q = next_prime(q)
            yield q

    def take(self, count: int) -> List[int]:
        primes: List[int] = []
        for q in self:
            if len(primes) == count:
                break
            primes.append(q)
        return primes

    def escalated(self) -> PrimeSampler:
        """Sampler starting from twice the current bound."""
        return PrimeSampler(max(2 * self.lower_bound, 2))
