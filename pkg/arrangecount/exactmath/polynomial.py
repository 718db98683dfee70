from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Tuple, Union

from arrangecount.errors import ArrangeCountError

Number = Union[int, Fraction]


class NonIntegerCoefficients(ArrangeCountError):
    pass


def _strip(values: Tuple) -> Tuple:
    end = len(values)
    while end > 1 and values[end - 1] == 0:
        end -= 1
    if end == 0:
        return (0,)
    return values[:end]


def _promote(values: Iterable[Number]) -> QPolynomial:
    """Build the narrowest polynomial type that holds `values` exactly."""
    values = tuple(Fraction(v) for v in values)
    if all(v.denominator == 1 for v in values):
        return IntPolynomial(int(v) for v in values)
    return QPolynomial(values)


class QPolynomial:
    """Dense univariate polynomial in `t` with exact rational coefficients.

    Coefficients are stored in ascending order of the power of `t` without
    trailing zeros; the zero polynomial is ``(0,)``. Arithmetic returns an
    :class:`IntPolynomial` whenever the result happens to be integral, so that
    polynomials compare equal independent of the path that produced them.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Number] = ()) -> None:
        self._coeffs: Tuple = _strip(tuple(Fraction(c) for c in coeffs))

    @classmethod
    def variable(cls) -> IntPolynomial:
        return IntPolynomial((0, 1))

    @classmethod
    def constant(cls, value: Number) -> QPolynomial:
        return _promote((value,))

    @property
    def coeffs(self) -> Tuple:
        return self._coeffs

    @property
    def degree(self) -> int:
        return len(self._coeffs) - 1

    @property
    def leading(self) -> Number:
        return self._coeffs[-1]

    def is_zero(self) -> bool:
        return self._coeffs == (0,)

    def is_monic(self) -> bool:
        return self.leading == 1

    def __call__(self, t: Number) -> Number:
        acc: Number = 0
        for c in reversed(self._coeffs):
            acc = acc * t + c
        if isinstance(acc, Fraction) and acc.denominator == 1:
            return int(acc)
        return acc

    def _coerce(self, other) -> Tuple:
        if isinstance(other, QPolynomial):
            return other.coeffs
        if isinstance(other, (int, Fraction)):
            return (other,)
        raise TypeError(f"cannot combine polynomial with {type(other).__name__}")

    def __add__(self, other) -> QPolynomial:
        try:
            rhs = self._coerce(other)
        except TypeError:
            return NotImplemented
        size = max(len(self._coeffs), len(rhs))
        lhs = self._coeffs + (0,) * (size - len(self._coeffs))
        rhs = rhs + (0,) * (size - len(rhs))
        return _promote(a + b for a, b in zip(lhs, rhs))

    __radd__ = __add__

    def __neg__(self) -> QPolynomial:
        return _promote(-c for c in self._coeffs)

    def __sub__(self, other) -> QPolynomial:
        try:
            rhs = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-_promote(rhs))

    def __rsub__(self, other) -> QPolynomial:
        return (-self) + other

    def __mul__(self, other) -> QPolynomial:
        try:
            rhs = self._coerce(other)
        except TypeError:
            return NotImplemented
        out = [Fraction(0)] * (len(self._coeffs) + len(rhs) - 1)
        for i, a in enumerate(self._coeffs):
            if a == 0:
                continue
            for j, b in enumerate(rhs):
                out[i + j] += a * b
        return _promote(out)

    __rmul__ = __mul__

    def __truediv__(self, scalar: Number) -> QPolynomial:
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        return _promote(Fraction(c) / scalar for c in self._coeffs)

    def __pow__(self, exponent: int) -> QPolynomial:
        if exponent < 0:
            raise ValueError(f"negative polynomial power {exponent}")
        result: QPolynomial = IntPolynomial((1,))
        for _ in range(exponent):
            result = result * self
        return result

    def shift(self, c: Number) -> QPolynomial:
        """Return the polynomial ``p(t + c)``."""
        step = IntPolynomial((0, 1)) + c
        result: QPolynomial = IntPolynomial((0,))
        for coeff in reversed(self._coeffs):
            result = result * step + coeff
        return result

    def to_int(self) -> IntPolynomial:
        if isinstance(self, IntPolynomial):
            return self
        return IntPolynomial(self._coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, QPolynomial):
            return self._coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self._coeffs == (other,)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for power in range(self.degree, -1, -1):
            c = self._coeffs[power]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if power == 0:
                body = str(mag)
            else:
                var = "t" if power == 1 else f"t^{power}"
                body = var if mag == 1 else f"{mag}*{var}"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}({list(self._coeffs)})"


class IntPolynomial(QPolynomial):
    """QPolynomial whose coefficients are all integers."""

    __slots__ = ()

    def __init__(self, coeffs: Iterable[Number] = ()) -> None:
        values = []
        for c in coeffs:
            value = Fraction(c)
            if value.denominator != 1:
                raise NonIntegerCoefficients(f"coefficient {value} is not an integer")
            values.append(int(value))
        self._coeffs = _strip(tuple(values))


def poly_eval(p: QPolynomial, t: Number) -> Number:
    """Exact Horner evaluation of `p` at `t`."""
    return p(t)


def falling_factorial_poly(shift: int, length: int) -> IntPolynomial:
    """Return ``(t - shift)(t - shift - 1)...(t - shift - length + 1)``."""
    if length < 0:
        raise ValueError(f"length must be non-negative, got {length}")
    result: QPolynomial = IntPolynomial((1,))
    for i in range(length):
        result = result * IntPolynomial((-(shift + i), 1))
    return result.to_int()


T = QPolynomial.variable()
