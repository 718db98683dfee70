from fractions import Fraction
from typing import Dict

from arrangecount.exactmath import (
    IntPolynomial,
    factorial,
    falling_factorial,
    falling_factorial_poly,
)
from arrangecount.exactmath.polynomial import T


def _require(n: int, **params: int) -> None:
    if n < 1:
        raise ValueError(f"closed forms need n >= 1, got {n}")
    for name, value in params.items():
        if value < 1:
            raise ValueError(f"closed forms need {name} >= 1, got {value}")


def closed_catalan(n: int) -> IntPolynomial:
    """t (t - n - 1)(t - n - 2) ... (t - 2n + 1)"""
    _require(n)
    return (T * falling_factorial_poly(n + 1, n - 1)).to_int()


def closed_extended_catalan(n: int, a_max: int) -> IntPolynomial:
    """t (t - n a_max - 1)_(n - 1)"""
    _require(n, a_max=a_max)
    return (T * falling_factorial_poly(n * a_max + 1, n - 1)).to_int()


def closed_shi(n: int) -> IntPolynomial:
    """t (t - n)^(n - 1)"""
    _require(n)
    return (T * (T - n) ** (n - 1)).to_int()


def closed_power_family(n: int, m: int) -> IntPolynomial:
    """(t - 1) prod_{j=1}^{n-1} (t - 1 - m n - j).

    The family uses the multipliers a, a^2, ..., a^m.
    """
    _require(n, m=m)
    return ((T - 1) * falling_factorial_poly(m * n + 2, n - 1)).to_int()


def closed_ordered_family(n: int) -> IntPolynomial:
    """(t - 1)(t - 1 - n)^(n - 1), for one multiplier used on ordered pairs only."""
    _require(n)
    return ((T - 1) * (T - 1 - n) ** (n - 1)).to_int()


def cycle_formula(k: int, n: int) -> int:
    """Independent n-sets of the k-cycle, (k / n!) (k - n - 1)_(n - 1)."""
    _require(n)
    value = Fraction(k, factorial(n)) * falling_factorial(k - n - 1, n - 1)
    if value.denominator != 1:
        raise ValueError(f"cycle formula is not integral at k={k}, n={n}")
    return int(value)


def _with_unit_root(*inner: int) -> IntPolynomial:
    return ((T - 1) * IntPolynomial(reversed(inner))).to_int()


# chi of the eq1 arrangement for two multiplicatively independent multipliers,
# coefficients of the cofactor of (t - 1) from the leading term down
REFERENCE_CHARPOLYS: Dict[int, IntPolynomial] = {
    2: _with_unit_root(1, -6),
    3: _with_unit_root(1, -17, 78),
    4: _with_unit_root(1, -33, 386, -1608),
    5: _with_unit_root(1, -54, 1151, -11514, 45840),
    6: _with_unit_root(1, -80, 2675, -46840, 431004, -1675440),
    7: _with_unit_root(1, -111, 5335, -142365, 2230264, -19515684, 74864160),
}
