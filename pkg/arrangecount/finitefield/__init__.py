from .counting import (
    OFFPOINT_BUDGET,
    DegenerateModQ,
    bad_primes,
    count_offpoints,
    reduce_mod,
)
from .dlog import (
    NotPrimitiveRoot,
    discrete_logs,
    dlog_steps,
    primitive_root,
)
from .independence import (
    DEFAULT_FACTOR_LIMIT,
    ExponentMatrix,
    FactorizationBudgetExceeded,
    mult_independent,
)
from .primes import PrimeSampler, is_prime, next_prime
