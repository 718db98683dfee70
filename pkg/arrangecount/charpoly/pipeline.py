from __future__ import annotations

from dataclasses import dataclass
from math import factorial
from typing import List, Optional, Tuple

from arrangecount.arrangement import (
    ArrangementFamily,
    FamilyKind,
    instantiate,
    whitney_charpoly,
)
from arrangecount.errors import ArrangeCountError, InvalidParams
from arrangecount.exactmath import (
    IntPolynomial,
    NonIntegerCoefficients,
    lagrange_interpolate,
)
from arrangecount.finitefield import DegenerateModQ, PrimeSampler, count_offpoints
from arrangecount.graphcount import (
    Graph,
    InvalidStep,
    build_F,
    build_F_affine,
    build_G,
    build_G_ratio,
    count_independent_sets,
    empty_graph,
)
from arrangecount.run.config import RunConfig
from arrangecount.util.log import LogManager
from arrangecount.util.pool import ordered_map

_logger = LogManager.get_logger("Pipeline")


class ThresholdNotFound(ArrangeCountError):
    pass


@dataclass(frozen=True)
class CharPolyResult:
    """Characteristic polynomial recovered from prime samples."""

    family: ArrangementFamily
    n: int
    poly: IntPolynomial
    samples: Tuple[Tuple[int, int], ...]
    """(q, chi(q)) pairs the polynomial was interpolated from."""
    validation_prime: int
    validation_count: int


def induced_graph(family: ArrangementFamily, q: int) -> Graph:
    """Graph on residues mod q whose n-element independent sets are the
    n-element sets of coordinates avoiding every hyperplane of the family."""
    kind = family.kind
    if kind == FamilyKind.BRAID:
        return empty_graph(q)
    if kind == FamilyKind.EQ1:
        return build_G(family.a, q - 1)
    if kind == FamilyKind.EQ1_MINUS_ZERO:
        # vertex 0 only relates to itself
        return build_F_affine(family.a, (0,) * len(family.a), q)
    if kind in (FamilyKind.DIFFERENCE, FamilyKind.CATALAN, FamilyKind.EXTENDED_CATALAN):
        steps = sorted({d % q for d in family.differences})
        if 0 in steps:
            raise InvalidStep(f"a difference of {family.describe()} vanishes mod {q}")
        return build_F(steps, q)
    if kind == FamilyKind.AFFINE_MULT:
        return build_F_affine(family.a, family.b, q)
    if kind == FamilyKind.RATIO:
        return build_G_ratio(family.a, family.b, q - 1)
    raise InvalidParams(f"{kind.value} has no induced graph")


def eval_chi_at_prime(
    family: ArrangementFamily, n: int, q: int, config: Optional[RunConfig] = None
) -> int:
    """chi(q) as n! times the number of n-element independent sets of the
    induced graph; families without one are scanned over F_q^n instead."""
    config = config or RunConfig()
    if n < 0:
        raise ValueError(f"dimension must be non-negative, got {n}")
    if n == 0:
        return 1
    if family.is_graph_backed:
        g = induced_graph(family, q)
        count = count_independent_sets(
            g, n, workers=config.threads, budget_nodes=config.budget_nodes
        )
        return factorial(n) * count
    arr = instantiate(family, n)
    if not arr.is_rational:
        raise InvalidParams(f"{family.describe()} is not a rational arrangement")
    return count_offpoints(
        arr, q, budget=config.budgets.offpoint_points, workers=config.threads
    )


def _sample(task: Tuple[ArrangementFamily, int, int, RunConfig]) -> int:
    family, n, q, config = task
    return eval_chi_at_prime(family, n, q, config)


def _sample_all(
    family: ArrangementFamily, n: int, primes: List[int], config: RunConfig
) -> List[int]:
    if config.threads > 1 and len(primes) > 1:
        inner = config.copy(update={"threads": 1})
        tasks = [(family, n, q, inner) for q in primes]
        return ordered_map(_sample, tasks, config.threads)
    return [eval_chi_at_prime(family, n, q, config) for q in primes]


def interpolate_charpoly(
    family: ArrangementFamily,
    n: int,
    sampler: Optional[PrimeSampler] = None,
    config: Optional[RunConfig] = None,
) -> CharPolyResult:
    """Interpolate chi from n + 1 consecutive primes and validate at the next one.

    When the validation fails, or the samples do not fit an integer monic
    polynomial of degree n, or the family degenerates modulo a sampled prime,
    the prime floor is doubled and sampling starts over.

    :raises ThresholdNotFound: no agreement after the configured retries
    """
    config = config or RunConfig()
    sampler = sampler or PrimeSampler(config.pipeline.prime_floor)
    for attempt in range(config.pipeline.max_retries + 1):
        primes = sampler.take(n + 2)
        try:
            values = _sample_all(family, n, primes, config)
            samples = tuple(zip(primes[:-1], values[:-1]))
            poly = lagrange_interpolate(samples)
            check_q, check = primes[-1], values[-1]
            if poly.degree == n and poly.is_monic() and poly(check_q) == check:
                _logger.info(
                    f"chi of {family.describe()} in dimension {n} from primes "
                    f"{primes[0]}..{primes[-1]}"
                )
                return CharPolyResult(family, n, poly, samples, check_q, check)
            _logger.info(
                f"samples above {sampler.lower_bound} disagree at {check_q} "
                f"for {family.describe()}, n={n}"
            )
        except (NonIntegerCoefficients, InvalidStep, DegenerateModQ) as exc:
            _logger.info(f"primes above {sampler.lower_bound} rejected: {exc}")
        sampler = sampler.escalated()
    raise ThresholdNotFound(
        f"no stable polynomial for {family.describe()}, n={n} below prime "
        f"{sampler.lower_bound}"
    )


def exact_charpoly(
    family: ArrangementFamily, n: int, config: Optional[RunConfig] = None
) -> IntPolynomial:
    """chi in dimension n; interpolation for rational families, the Whitney
    sum for families with formal offsets."""
    config = config or RunConfig()
    if n == 0:
        return IntPolynomial((1,))
    if family.kind in (FamilyKind.LOG_CATALAN, FamilyKind.LOG_SHI):
        return whitney_charpoly(
            instantiate(family, n), budget=config.budgets.whitney_hyperplanes
        )
    return interpolate_charpoly(family, n, config=config).poly


def charpoly_sequence(
    family: ArrangementFamily, order: int, config: Optional[RunConfig] = None
) -> List[IntPolynomial]:
    """chi_0, ..., chi_order with chi_0 = 1."""
    return [exact_charpoly(family, n, config) for n in range(order + 1)]
