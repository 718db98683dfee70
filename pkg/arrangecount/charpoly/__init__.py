from .closed_forms import (
    REFERENCE_CHARPOLYS,
    closed_catalan,
    closed_extended_catalan,
    closed_ordered_family,
    closed_power_family,
    closed_shi,
    cycle_formula,
)
from .egf import (
    EgfCoefficients,
    EgfPowerReport,
    ShapeViolation,
    connected_parts,
    egf_power_check,
    extract_egf_coefficients,
    region_series,
)
from .pipeline import (
    CharPolyResult,
    ThresholdNotFound,
    charpoly_sequence,
    eval_chi_at_prime,
    exact_charpoly,
    induced_graph,
    interpolate_charpoly,
)
from .probes import Conjecture, ProbeReport, probe_conjecture
from .table import (
    DEFAULT_PAIRS,
    DEFAULT_PRIMES,
    REFERENCE_TABLE,
    MultiplicativeTable,
    multiplicative_table,
)
from .verify import (
    ClosedForm,
    ClosedFormReport,
    CycleReport,
    DeletionRestrictionReport,
    EssentialityReport,
    FourLinesReport,
    InvarianceReport,
    NonPrimePart,
    NotMultIndependent,
    OracleReport,
    PolynomialityReport,
    ShiftReport,
    SpotCheck,
    UnionKind,
    UnionReport,
    closed_form_check,
    cycle_formula_check,
    deletion_restriction_report,
    essentiality_invariance_probe,
    family_graph,
    four_lines_check,
    invariance_check,
    oracle_triangle_check,
    polynomiality_check,
    random_arrangement,
    regions_invariance,
    shift_identity_check,
    spot_check_reference,
    verify_union_invariance,
)
