from fractions import Fraction
from typing import List, Sequence, Tuple

from arrangecount.exactmath.polynomial import (
    IntPolynomial,
    NonIntegerCoefficients,
    QPolynomial,
)


def lagrange_interpolate_rational(samples: Sequence[Tuple[int, int]]) -> QPolynomial:
    """The unique polynomial of degree < len(samples) through `samples`."""
    if len(samples) == 0:
        raise ValueError("at least one sample is required")
    xs = [x for x, _ in samples]
    if len(set(xs)) != len(xs):
        raise ValueError(f"sample nodes are not distinct: {xs}")

    total: List[Fraction] = [Fraction(0)] * len(samples)
    for i, (xi, yi) in enumerate(samples):
        if yi == 0:
            continue
        basis: QPolynomial = IntPolynomial((1,))
        denom = 1
        for j, xj in enumerate(xs):
            if j == i:
                continue
            basis = basis * IntPolynomial((-xj, 1))
            denom *= xi - xj
        weight = Fraction(yi, denom)
        for k, c in enumerate(basis.coeffs):
            total[k] += weight * c
    return QPolynomial(total)


def lagrange_interpolate(samples: Sequence[Tuple[int, int]]) -> IntPolynomial:
    """Interpolate integer samples and require integer coefficients.

    :raises NonIntegerCoefficients: the samples do not come from an integer
        polynomial of degree below the number of samples
    """
    poly = lagrange_interpolate_rational(samples)
    try:
        return poly.to_int()
    except NonIntegerCoefficients as exc:
        raise NonIntegerCoefficients(
            f"samples at {[x for x, _ in samples]} give non-integral {poly!r}"
        ) from exc
