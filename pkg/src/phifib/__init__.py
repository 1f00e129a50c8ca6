"""Exact Fibonacci and Lucas numbers via half-integer sqrt(5) pairs."""

from .algorithms import (
    FloatEstimate,
    SymFibMatrix,
    fib_fast_doubling,
    fib_float,
    fib_iterative,
    fib_lucas_linear,
    fib_matrix,
    fib_pair_fast,
    float_breakdown,
    float_max_n,
    lucas,
    mat_mul_M,
    mat_pow_M,
    mat_square,
)
from .instrumentation import (
    ALGORITHMS,
    BenchRecord,
    OpCounters,
    digit_count,
    emit_report,
    expected_counts,
    run_bench,
)
from .phi_algebra import (
    PhiPair,
    pair_mul,
    pair_mul_phi,
    pair_mul_psi,
    pair_norm,
    pair_one,
    pair_phi,
    pair_pow_phi,
    pair_psi,
    pair_square,
)

__version__ = "0.1.0"
