"""Truncated exponential generating functions.

A series of order N stands for ``sum_{n<=N} c_n x^n / n!``. Products, exp and
log are carried out on the ordinary coefficients ``c_n / n!`` with the usual
power-series recurrences and converted back, all in exact arithmetic.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Callable, List, Sequence, Tuple, TypeVar, Union

from arrangecount.errors import ArrangeCountError
from arrangecount.exactmath.polynomial import IntPolynomial, Number, QPolynomial

R = TypeVar("R")


class WrongConstantTerm(ArrangeCountError):
    pass


def _to_ordinary(coeffs: Sequence[R]) -> List[R]:
    return [c * Fraction(1, factorial(n)) for n, c in enumerate(coeffs)]


def _to_exponential(coeffs: Sequence[R]) -> List[R]:
    return [c * factorial(n) for n, c in enumerate(coeffs)]


def _ogf_mul(a: Sequence[R], b: Sequence[R], zero: R) -> List[R]:
    out = []
    for n in range(len(a)):
        acc = zero
        for k in range(n + 1):
            acc = acc + a[k] * b[n - k]
        out.append(acc)
    return out


def _ogf_exp(a: Sequence[R], zero: R, one: R) -> List[R]:
    # n b_n = sum_{k=1}^{n} k a_k b_{n-k}
    b = [one]
    for n in range(1, len(a)):
        acc = zero
        for k in range(1, n + 1):
            acc = acc + a[k] * b[n - k] * k
        b.append(acc * Fraction(1, n))
    return b


def _ogf_log(a: Sequence[R], zero: R) -> List[R]:
    # n a_n = sum_{k=1}^{n} k l_k a_{n-k}, with a_0 = 1
    out = [zero]
    for n in range(1, len(a)):
        acc = zero
        for k in range(1, n):
            acc = acc + out[k] * a[n - k] * k
        out.append(a[n] - acc * Fraction(1, n))
    return out


@dataclass(frozen=True)
class EgfSeries:
    """Truncated EGF with rational coefficients c_0..c_N."""

    coeffs: Tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) == 0:
            raise ValueError("an EGF needs at least the constant coefficient")
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))

    @classmethod
    def from_values(cls, values: Sequence[Number]) -> EgfSeries:
        return cls(tuple(Fraction(v) for v in values))

    @classmethod
    def from_ordinary(cls, values: Sequence[Number]) -> EgfSeries:
        return cls(tuple(_to_exponential([Fraction(v) for v in values])))

    def to_ordinary(self) -> Tuple[Fraction, ...]:
        return tuple(_to_ordinary(self.coeffs))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def scale(self, factor: Number) -> EgfSeries:
        return EgfSeries(tuple(c * factor for c in self.coeffs))

    def __add__(self, other: EgfSeries) -> EgfSeries:
        _check_orders(self, other)
        return EgfSeries(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other: EgfSeries) -> EgfSeries:
        return egf_mul(self, other)


@dataclass(frozen=True)
class PolynomialEgfSeries:
    """Truncated EGF whose coefficients are polynomials in `t`."""

    coeffs: Tuple[QPolynomial, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) == 0:
            raise ValueError("an EGF needs at least the constant coefficient")
        object.__setattr__(
            self,
            "coeffs",
            tuple(
                c if isinstance(c, QPolynomial) else QPolynomial.constant(c)
                for c in self.coeffs
            ),
        )

    @classmethod
    def from_series(cls, series: EgfSeries) -> PolynomialEgfSeries:
        return cls(tuple(QPolynomial.constant(c) for c in series.coeffs))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def evaluate(self, t: Number) -> EgfSeries:
        """Substitute a value for `t` in every coefficient."""
        return EgfSeries(tuple(Fraction(c(t)) for c in self.coeffs))

    def scale(self, factor: Union[Number, QPolynomial]) -> PolynomialEgfSeries:
        return PolynomialEgfSeries(tuple(c * factor for c in self.coeffs))

    def __mul__(self, other: PolynomialEgfSeries) -> PolynomialEgfSeries:
        return polyegf_mul(self, other)


def _check_orders(f, g) -> None:
    if f.order != g.order:
        raise ValueError(f"series orders differ: {f.order} != {g.order}")


def _unary(
    f, constant: Number, name: str, op: Callable[[List], List]
) -> List:
    if f.coeffs[0] != constant:
        raise WrongConstantTerm(
            f"{name} needs constant term {constant}, got {f.coeffs[0]}"
        )
    return _to_exponential(op(_to_ordinary(f.coeffs)))


def egf_mul(f: EgfSeries, g: EgfSeries) -> EgfSeries:
    _check_orders(f, g)
    product = _ogf_mul(_to_ordinary(f.coeffs), _to_ordinary(g.coeffs), Fraction(0))
    return EgfSeries(tuple(_to_exponential(product)))


def egf_add(f: EgfSeries, g: EgfSeries) -> EgfSeries:
    return f + g


def egf_exp(f: EgfSeries) -> EgfSeries:
    coeffs = _unary(f, 0, "exp", lambda a: _ogf_exp(a, Fraction(0), Fraction(1)))
    return EgfSeries(tuple(coeffs))


def egf_log(f: EgfSeries) -> EgfSeries:
    coeffs = _unary(f, 1, "log", lambda a: _ogf_log(a, Fraction(0)))
    return EgfSeries(tuple(coeffs))


def egf_pow(f: EgfSeries, e: Number) -> EgfSeries:
    """f^e as exp(e log f); requires c_0 = 1."""
    return egf_exp(egf_log(f).scale(Fraction(e)))


_ZERO = IntPolynomial((0,))
_ONE = IntPolynomial((1,))


def polyegf_mul(f: PolynomialEgfSeries, g: PolynomialEgfSeries) -> PolynomialEgfSeries:
    _check_orders(f, g)
    product = _ogf_mul(_to_ordinary(f.coeffs), _to_ordinary(g.coeffs), _ZERO)
    return PolynomialEgfSeries(tuple(_to_exponential(product)))


def polyegf_exp(f: PolynomialEgfSeries) -> PolynomialEgfSeries:
    coeffs = _unary(f, 0, "exp", lambda a: _ogf_exp(a, _ZERO, _ONE))
    return PolynomialEgfSeries(tuple(coeffs))


def polyegf_log(f: PolynomialEgfSeries) -> PolynomialEgfSeries:
    coeffs = _unary(f, 1, "log", lambda a: _ogf_log(a, _ZERO))
    return PolynomialEgfSeries(tuple(coeffs))


def polyegf_pow(
    f: PolynomialEgfSeries, e: Union[Number, QPolynomial]
) -> PolynomialEgfSeries:
    """f^e as exp(e log f); the exponent may itself be a polynomial in `t`."""
    return polyegf_exp(polyegf_log(f).scale(e))
