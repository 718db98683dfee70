from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import islice
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from arrangecount.arrangement import (
    Arrangement,
    ArrangementFamily,
    Hyperplane,
    deletion_restriction_check,
    extended_catalan_forms,
    four_line_arrangement,
    generic_charpoly,
    instantiate,
    intersection_poset,
    is_essential,
    mobius_charpoly,
    rank,
    whitney_charpoly,
    zaslavsky_bounded,
    zaslavsky_regions,
)
from arrangecount.charpoly.closed_forms import (
    REFERENCE_CHARPOLYS,
    closed_catalan,
    closed_extended_catalan,
    closed_ordered_family,
    closed_power_family,
    closed_shi,
    cycle_formula,
)
from arrangecount.charpoly.pipeline import (
    eval_chi_at_prime,
    exact_charpoly,
    interpolate_charpoly,
)
from arrangecount.errors import ArrangeCountError, InvalidParams
from arrangecount.exactmath import (
    IntPolynomial,
    QPolynomial,
    lagrange_interpolate_rational,
)
from arrangecount.finitefield import (
    PrimeSampler,
    bad_primes,
    count_offpoints,
    is_prime,
    mult_independent,
)
from arrangecount.graphcount import (
    Graph,
    add_pendants,
    build_F,
    build_F_affine,
    build_G,
    build_G_ratio,
    count_independent_sets,
    cycle_graph,
    disjoint_union,
    independence_counts,
)
from arrangecount.run.config import RunConfig
from arrangecount.util.log import LogManager

_logger = LogManager.get_logger("Verify")


class NotMultIndependent(ArrangeCountError):
    pass


class NonPrimePart(ArrangeCountError):
    pass


class UnionKind(Enum):
    MULTIPLICATIVE = "multiplicative"
    """G(a, k): vertices 1..k, i ~ j when i = a_r j mod k + 1."""
    RATIO = "ratio"
    """G(a, b, k): vertices 1..k, i ~ j when a_r i = b_r j mod k + 1."""
    DIFFERENCE = "difference"
    """F(a, k): circulant on Z/kZ."""
    PENDANT = "pendant"
    """F(a, k) with a leaf on every vertex."""
    AFFINE = "affine"
    """F(a, b, k): Z/kZ, i ~ j when i - a_r j = b_r mod k."""


def family_graph(kind: UnionKind, a: Sequence[int], b: Sequence[int], k: int) -> Graph:
    if kind == UnionKind.MULTIPLICATIVE:
        return build_G(a, k)
    if kind == UnionKind.RATIO:
        return build_G_ratio(a, b, k)
    if kind == UnionKind.DIFFERENCE:
        return build_F(a, k)
    if kind == UnionKind.PENDANT:
        return add_pendants(build_F(a, k))
    return build_F_affine(a, b, k)


@dataclass(frozen=True)
class UnionRow:
    n: int
    union_count: int
    single_count: int

    @property
    def equal(self) -> bool:
        return self.union_count == self.single_count


@dataclass(frozen=True)
class UnionReport:
    kind: UnionKind
    a: Tuple[int, ...]
    b: Tuple[int, ...]
    partition: Tuple[int, ...]
    rows: Tuple[UnionRow, ...]

    @property
    def passed(self) -> bool:
        return all(row.equal for row in self.rows)


def _union_counts(
    kind: UnionKind,
    a: Sequence[int],
    b: Sequence[int],
    partition: Sequence[int],
    n_max: int,
    config: RunConfig,
) -> Tuple[int, ...]:
    union = disjoint_union([family_graph(kind, a, b, k) for k in partition])
    return independence_counts(
        union, n_max, workers=config.threads, budget_nodes=config.budget_nodes
    ).counts


def verify_union_invariance(
    kind: UnionKind,
    a: Sequence[int],
    partition: Sequence[int],
    n_max: int,
    b: Sequence[int] = (),
    config: Optional[RunConfig] = None,
) -> UnionReport:
    """Compare s_n of the union over `partition` with s_n of one graph on the total.

    :raises NonPrimePart: a multiplicative part k (or the total) has k + 1 composite
    """
    config = config or RunConfig()
    if len(partition) == 0:
        raise InvalidParams("partition must have at least one part")
    total = sum(partition)
    if kind in (UnionKind.MULTIPLICATIVE, UnionKind.RATIO):
        for k in list(partition) + [total]:
            if not is_prime(k + 1):
                raise NonPrimePart(f"part {k} has composite modulus {k + 1}")

    union = _union_counts(kind, a, b, partition, n_max, config)
    single = _union_counts(kind, a, b, [total], n_max, config)
    rows = tuple(UnionRow(n, union[n], single[n]) for n in range(n_max + 1))
    report = UnionReport(kind, tuple(a), tuple(b), tuple(partition), rows)
    _logger.info(f"{kind.value} union {tuple(partition)}: passed={report.passed}")
    return report


@dataclass(frozen=True)
class EssentialityRow:
    n: int
    essential: bool
    counts: Tuple[int, ...]
    """s_n of the union graph of every partition, in input order."""

    @property
    def s_dependent(self) -> bool:
        return len(set(self.counts)) > 1

    @property
    def consistent(self) -> bool:
        """A non-essential arrangement must not show dependence on the parts."""
        return self.essential or not self.s_dependent


@dataclass(frozen=True)
class EssentialityReport:
    a: Tuple[int, ...]
    b: Tuple[int, ...]
    partitions: Tuple[Tuple[int, ...], ...]
    rows: Tuple[EssentialityRow, ...]

    @property
    def passed(self) -> bool:
        return all(row.consistent for row in self.rows)


def essentiality_invariance_probe(
    a: Sequence[int],
    b: Sequence[int],
    partitions: Sequence[Sequence[int]],
    n_max: int,
    config: Optional[RunConfig] = None,
) -> EssentialityReport:
    """Pair the essentiality of the affine arrangement with the observed
    dependence of the union counts on how the total is split."""
    config = config or RunConfig()
    family = ArrangementFamily.affine_mult(a, b)
    if len({sum(p) for p in partitions}) > 1:
        raise InvalidParams(f"partitions {partitions} do not share one total")
    counts = [
        _union_counts(UnionKind.AFFINE, a, b, p, n_max, config) for p in partitions
    ]
    rows = tuple(
        EssentialityRow(
            n,
            is_essential(instantiate(family, n)),
            tuple(c[n] for c in counts),
        )
        for n in range(1, n_max + 1)
    )
    return EssentialityReport(
        tuple(a), tuple(b), tuple(tuple(p) for p in partitions), rows
    )


@dataclass(frozen=True)
class ShiftReport:
    a: Tuple[int, ...]
    n: int
    chi: IntPolynomial
    """chi of the eq1 arrangement."""
    shifted: QPolynomial
    """chi of the logarithmic Catalan arrangement at t - 1."""
    generic_shifted: QPolynomial
    """Same with every offset treated as generic."""

    @property
    def passed(self) -> bool:
        return self.chi == self.shifted

    @property
    def generic_agrees(self) -> bool:
        return self.chi == self.generic_shifted


def shift_identity_check(
    a: Sequence[int], n: int, config: Optional[RunConfig] = None
) -> ShiftReport:
    """chi of the eq1 arrangement against the logarithmic Catalan one at t - 1.

    :raises NotMultIndependent: `a` satisfies a multiplicative relation
    """
    config = config or RunConfig()
    if not mult_independent(a, config.budgets.factor_limit):
        raise NotMultIndependent(f"{list(a)} is multiplicatively dependent")
    chi = exact_charpoly(ArrangementFamily.eq1(a), n, config)
    formal = exact_charpoly(ArrangementFamily.log_catalan(a), n, config)
    generic = generic_charpoly(extended_catalan_forms(n, len(a)), n)
    return ShiftReport(tuple(a), n, chi, formal.shift(-1), generic.shift(-1))


@dataclass(frozen=True)
class InvarianceEntry:
    a: Tuple[int, ...]
    independent: bool
    poly: IntPolynomial
    regions: int


@dataclass(frozen=True)
class InvarianceReport:
    n: int
    entries: Tuple[InvarianceEntry, ...]

    @property
    def passed(self) -> bool:
        shared = {e.poly for e in self.entries if e.independent}
        if len(shared) > 1:
            return False
        return all(e.poly not in shared for e in self.entries if not e.independent)

    @property
    def regions_shared(self) -> bool:
        return len({e.regions for e in self.entries if e.independent}) <= 1


def invariance_check(
    a_sets: Sequence[Sequence[int]], n: int, config: Optional[RunConfig] = None
) -> InvarianceReport:
    """chi of the eq1 arrangement agrees across multiplicatively independent
    sets and differs for dependent ones."""
    config = config or RunConfig()
    entries = []
    for a in a_sets:
        poly = exact_charpoly(ArrangementFamily.eq1(a), n, config)
        entries.append(
            InvarianceEntry(
                tuple(a),
                mult_independent(a, config.budgets.factor_limit),
                poly,
                zaslavsky_regions(poly, n),
            )
        )
    return InvarianceReport(n, tuple(entries))


class ClosedForm(Enum):
    CATALAN = "catalan"
    EXTENDED_CATALAN = "extended_catalan"
    SHI = "shi"
    POWER = "power"
    """eq1 with multipliers 2, 4, ..., 2^m."""
    ORDERED = "ordered"
    """eq1 with one multiplier on ordered pairs."""


@dataclass(frozen=True)
class ClosedFormReport:
    form: ClosedForm
    n: int
    m: int
    computed: IntPolynomial
    closed: IntPolynomial

    @property
    def passed(self) -> bool:
        return self.computed == self.closed


def closed_form_check(
    form: ClosedForm, n: int, m: int = 1, config: Optional[RunConfig] = None
) -> ClosedFormReport:
    config = config or RunConfig()
    budget = config.budgets.whitney_hyperplanes
    if form == ClosedForm.CATALAN:
        family = ArrangementFamily.catalan()
        computed = interpolate_charpoly(family, n, config=config).poly
        closed = closed_catalan(n)
    elif form == ClosedForm.EXTENDED_CATALAN:
        family = ArrangementFamily.extended_catalan(m)
        computed = interpolate_charpoly(family, n, config=config).poly
        closed = closed_extended_catalan(n, m)
    elif form == ClosedForm.SHI:
        computed = whitney_charpoly(instantiate(ArrangementFamily.shi(), n), budget)
        closed = closed_shi(n)
    elif form == ClosedForm.POWER:
        family = ArrangementFamily.eq1([2**j for j in range(1, m + 1)])
        computed = interpolate_charpoly(family, n, config=config).poly
        closed = closed_power_family(n, m)
    else:
        family = ArrangementFamily.eq1_ordered([2])
        computed = whitney_charpoly(instantiate(family, n), budget)
        closed = closed_ordered_family(n)
    return ClosedFormReport(form, n, m, computed, closed)


@dataclass(frozen=True)
class PolynomialityReport:
    a: Tuple[int, ...]
    n: int
    poly: QPolynomial
    """s_n(F(a, k)) as a polynomial in k."""
    checks: Tuple[Tuple[int, int], ...]
    """(k, counted s_n) at out-of-sample k."""

    @property
    def passed(self) -> bool:
        return all(self.poly(k) == count for k, count in self.checks)


def polynomiality_check(
    a: Sequence[int],
    n: int,
    start: Optional[int] = None,
    extra: int = 5,
    config: Optional[RunConfig] = None,
) -> PolynomialityReport:
    """Interpolate k -> s_n(F(a, k)) from n + 1 consecutive k and test `extra` more."""
    config = config or RunConfig()
    first = start if start is not None else 2 * n * max(a) + 2

    def count(k: int) -> int:
        return count_independent_sets(
            build_F(a, k), n, workers=config.threads, budget_nodes=config.budget_nodes
        )

    ks = range(first, first + n + 1)
    poly = lagrange_interpolate_rational([(k, count(k)) for k in ks])
    checks = tuple((k, count(k)) for k in range(first + n + 1, first + n + 1 + extra))
    return PolynomialityReport(tuple(a), n, poly, checks)


@dataclass(frozen=True)
class CycleRow:
    k: int
    n: int
    counted: int
    formula: int


@dataclass(frozen=True)
class CycleReport:
    rows: Tuple[CycleRow, ...]

    @property
    def passed(self) -> bool:
        return all(row.counted == row.formula for row in self.rows)


def cycle_formula_check(k_min: int = 3, k_max: int = 30) -> CycleReport:
    """Independent-set counts of every cycle C_k against the closed formula."""
    rows = []
    for k in range(k_min, k_max + 1):
        counts = independence_counts(cycle_graph(k), k // 2)
        rows.extend(
            CycleRow(k, n, counts[n], cycle_formula(k, n))
            for n in range(1, k // 2 + 1)
        )
    return CycleReport(tuple(rows))


@dataclass(frozen=True)
class FourLinesReport:
    whitney: IntPolynomial
    mobius: IntPolynomial
    regions: int
    bounded: int

    @property
    def passed(self) -> bool:
        return (
            self.whitney == self.mobius == IntPolynomial((5, -4, 1))
            and self.regions == 10
            and self.bounded == 2
        )


def four_lines_check() -> FourLinesReport:
    arr = four_line_arrangement()
    chi = whitney_charpoly(arr)
    return FourLinesReport(
        chi,
        mobius_charpoly(intersection_poset(arr), arr.dim),
        zaslavsky_regions(chi, arr.dim),
        zaslavsky_bounded(chi, rank(arr.hyperplanes)),
    )


@dataclass(frozen=True)
class DeletionRestrictionReport:
    a: Tuple[int, ...]
    n: int
    polys: Dict[str, IntPolynomial]
    passed: bool


def deletion_restriction_report(
    a: Sequence[int],
    n: int,
    method: str = "whitney",
    config: Optional[RunConfig] = None,
) -> DeletionRestrictionReport:
    """Run the deletion-restriction identity and keep the polynomials it used."""
    config = config or RunConfig()
    polys: Dict[str, IntPolynomial] = {}

    def compute(family: ArrangementFamily, k: int) -> IntPolynomial:
        if method == "whitney":
            poly = whitney_charpoly(
                instantiate(family, k), config.budgets.whitney_hyperplanes
            )
        elif method == "interpolate":
            poly = exact_charpoly(family, k, config)
        else:
            raise ValueError(f"unknown method {method}")
        polys[f"{family.kind.value}/{k}"] = poly
        return poly

    passed = deletion_restriction_check(a, n, compute)
    return DeletionRestrictionReport(tuple(a), n, polys, passed)


@dataclass(frozen=True)
class SpotCheck:
    n: int
    q: int
    counted: int
    expected: int

    @property
    def passed(self) -> bool:
        return self.counted == self.expected


def spot_check_reference(
    n: int, q: int, a: Sequence[int] = (2, 3), config: Optional[RunConfig] = None
) -> SpotCheck:
    """Count chi of the eq1 arrangement at one prime and compare it with the
    stored reference polynomial."""
    if n not in REFERENCE_CHARPOLYS:
        raise InvalidParams(f"no reference polynomial for n={n}")
    if not is_prime(q):
        raise InvalidParams(f"{q} is not prime")
    counted = eval_chi_at_prime(ArrangementFamily.eq1(a), n, q, config)
    return SpotCheck(n, q, counted, REFERENCE_CHARPOLYS[n](q))


def regions_invariance(
    a_sets: Sequence[Sequence[int]], n: int, config: Optional[RunConfig] = None
) -> Dict[Tuple[int, ...], int]:
    """Region count of the eq1 arrangement in dimension n for every a-set."""
    return {e.a: e.regions for e in invariance_check(a_sets, n, config).entries}


ORACLE_PRIME_FLOOR = 150


@dataclass(frozen=True)
class OracleRow:
    arrangement: str
    whitney: IntPolynomial
    mobius: IntPolynomial
    counts: Tuple[Tuple[int, int], ...]
    """(q, off-point count) at every oracle prime."""

    @property
    def passed(self) -> bool:
        return self.whitney == self.mobius and all(
            self.whitney(q) == count for q, count in self.counts
        )


@dataclass(frozen=True)
class OracleReport:
    seed: int
    rows: Tuple[OracleRow, ...]

    @property
    def passed(self) -> bool:
        return all(row.passed for row in self.rows)


def random_arrangement(
    rng: np.random.Generator, max_dim: int = 3, max_size: int = 10, bound: int = 3
) -> Arrangement:
    """Small arrangement with integer normals and offsets in [-bound, bound]."""
    n = int(rng.integers(1, max_dim + 1))
    hyperplanes: List[Hyperplane] = []
    for _ in range(int(rng.integers(1, max_size + 1))):
        normal = rng.integers(-bound, bound + 1, size=n)
        while not normal.any():
            normal = rng.integers(-bound, bound + 1, size=n)
        offset = int(rng.integers(-bound, bound + 1))
        hyperplanes.append(Hyperplane.make([int(c) for c in normal], offset))
    return Arrangement.of(n, hyperplanes)


def oracle_triangle_check(
    trials: int = 20,
    seed: int = 0,
    prime_count: int = 3,
    prime_floor: int = ORACLE_PRIME_FLOOR,
    config: Optional[RunConfig] = None,
) -> OracleReport:
    """Whitney sum, Moebius inversion and finite-field counting on random
    small arrangements, counted at the first `prime_count` primes above
    `prime_floor` where the arrangement has good reduction."""
    config = config or RunConfig()
    rng = np.random.default_rng(seed)
    rows = []
    for _ in range(trials):
        arr = random_arrangement(rng)
        whitney = whitney_charpoly(arr, config.budgets.whitney_hyperplanes)
        mobius = mobius_charpoly(
            intersection_poset(arr, config.budgets.poset_hyperplanes), arr.dim
        )
        skip = bad_primes(arr)
        primes = (q for q in PrimeSampler(prime_floor) if q not in skip)
        counts = tuple(
            (q, count_offpoints(arr, q, config.budgets.offpoint_points))
            for q in islice(primes, prime_count)
        )
        rows.append(
            OracleRow("; ".join(str(h) for h in arr), whitney, mobius, counts)
        )
    report = OracleReport(seed, tuple(rows))
    _logger.info(f"oracle triangle on {trials} arrangements: passed={report.passed}")
    return report
