from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from arrangecount.arrangement import ArrangementFamily, FamilyKind, zaslavsky_regions
from arrangecount.charpoly.pipeline import charpoly_sequence
from arrangecount.errors import ArrangeCountError
from arrangecount.exactmath import (
    EgfSeries,
    IntPolynomial,
    PolynomialEgfSeries,
    QPolynomial,
    polyegf_log,
    polyegf_pow,
)
from arrangecount.exactmath.polynomial import T
from arrangecount.run.config import RunConfig


class ShapeViolation(ArrangeCountError):
    pass


@dataclass(frozen=True)
class EgfCoefficients:
    """Linear and constant parts of the log of ``sum chi_n(t) x^n / n!``.

    Entry ``n - 1`` of each sequence belongs to ``x^n / n!``.
    """

    b: Tuple[Fraction, ...]
    """Coefficient of t in each connected part."""
    c: Tuple[Fraction, ...]
    """Constant term of each connected part."""
    connected: Tuple[QPolynomial, ...]
    f_at_one: Optional[Tuple[Fraction, ...]] = None
    """Connected parts of the central companion family at t = 1 (eq1 only)."""

    @property
    def d(self) -> Tuple[Fraction, ...]:
        """Slopes in k, the name used for the affine families."""
        return self.b


def connected_parts(polys: Sequence[QPolynomial]) -> List[QPolynomial]:
    """f_1, ..., f_N with ``sum chi_n x^n/n! = exp(sum f_n x^n/n!)``."""
    series = PolynomialEgfSeries(tuple(polys))
    return list(polyegf_log(series).coeffs[1:])


def _linear_parts(parts: Sequence[QPolynomial], label: str) -> Tuple[Tuple, Tuple]:
    b, c = [], []
    for n, f in enumerate(parts, start=1):
        if f.degree > 1:
            raise ShapeViolation(
                f"connected part {n} of {label} is {f}, not linear in t"
            )
        coeffs = f.coeffs + (0,) * (2 - len(f.coeffs))
        c.append(Fraction(coeffs[0]))
        b.append(Fraction(coeffs[1]))
    return tuple(b), tuple(c)


def extract_egf_coefficients(
    family: ArrangementFamily, order: int, config: Optional[RunConfig] = None
) -> EgfCoefficients:
    """Split every connected part of the family into ``b_n t + c_n``.

    :raises ShapeViolation: some connected part has degree above one
    """
    polys = charpoly_sequence(family, order, config)
    parts = connected_parts(polys)
    b, c = _linear_parts(parts, family.describe())
    f_at_one = None
    if family.kind == FamilyKind.EQ1:
        companion = ArrangementFamily.eq1_minus_zero(family.a)
        central = connected_parts(charpoly_sequence(companion, order, config))
        f_at_one = tuple(Fraction(f(1)) for f in central)
    return EgfCoefficients(b, c, tuple(parts), f_at_one)


@dataclass(frozen=True)
class EgfPowerReport:
    a: Tuple[int, ...]
    order: int
    regions: Tuple[int, ...]
    lhs: PolynomialEgfSeries
    rhs: PolynomialEgfSeries

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs


def region_series(polys: Sequence[IntPolynomial]) -> EgfSeries:
    """``sum (-1)^n r_n x^n / n!`` with r_n the region count in dimension n."""
    return EgfSeries.from_values(
        [(-1) ** n * zaslavsky_regions(chi, n) for n, chi in enumerate(polys)]
    )


def egf_power_check(
    a: Sequence[int], order: int, config: Optional[RunConfig] = None
) -> EgfPowerReport:
    """Compare the chi series of the eq1 family with the region series raised
    to the power ``-(t - 1)/2``."""
    polys = charpoly_sequence(ArrangementFamily.eq1(a), order, config)
    lhs = PolynomialEgfSeries(tuple(polys))
    base = PolynomialEgfSeries.from_series(region_series(polys))
    rhs = polyegf_pow(base, (T - 1) * Fraction(-1, 2))
    regions = tuple(zaslavsky_regions(chi, n) for n, chi in enumerate(polys))
    return EgfPowerReport(tuple(a), order, regions, lhs, rhs)
