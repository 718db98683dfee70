from typing import Dict, Sequence, Tuple

import sympy

from arrangecount.errors import ArrangeCountError, InvalidParams
from arrangecount.finitefield.primes import is_prime


class NotPrimitiveRoot(ArrangeCountError):
    pass


def primitive_root(q: int) -> int:
    """Smallest primitive root modulo the prime `q`."""
    if not is_prime(q):
        raise ValueError(f"{q} is not prime")
    return int(sympy.primitive_root(q))


def discrete_logs(q: int, g: int) -> Dict[int, int]:
    """Table ``v -> dlog_g(v)`` for every v in 1..q-1.

    :raises NotPrimitiveRoot: the powers of `g` do not cover the unit group
    """
    if not is_prime(q):
        raise ValueError(f"{q} is not prime")
    table: Dict[int, int] = {}
    value = 1
    for exponent in range(q - 1):
        if value in table:
            raise NotPrimitiveRoot(
                f"{g} has order {exponent} modulo {q}, expected {q - 1}"
            )
        table[value] = exponent
        value = value * g % q
    if len(table) != q - 1 or value != 1:
        raise NotPrimitiveRoot(f"{g} is not a primitive root modulo {q}")
    return table


def dlog_steps(a: Sequence[int], q: int, g: int) -> Tuple[int, ...]:
    """Circulant steps ``dlog_g(a_r mod q)``; the image of the multiplicative
    connection set under the discrete logarithm."""
    table = discrete_logs(q, g)
    steps = []
    for x in a:
        if x % q == 0:
            raise InvalidParams(f"multiplier {x} vanishes modulo {q}")
        steps.append(table[x % q])
    return tuple(steps)
