from .combinatorics import binomial, factorial, falling_factorial
from .egf import (
    EgfSeries,
    PolynomialEgfSeries,
    WrongConstantTerm,
    egf_add,
    egf_exp,
    egf_log,
    egf_mul,
    egf_pow,
    polyegf_exp,
    polyegf_log,
    polyegf_mul,
    polyegf_pow,
)
from .interpolation import lagrange_interpolate, lagrange_interpolate_rational
from .polynomial import (
    IntPolynomial,
    NonIntegerCoefficients,
    QPolynomial,
    falling_factorial_poly,
    poly_eval,
)
