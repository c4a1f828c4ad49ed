"""Quaternary sequences over Z4 from order-four generalized cyclotomy.

Construction of the residue-class systems modulo pq, sequence generation,
Galois-ring GR(4, 4^r) arithmetic, defining polynomials via the ring DFT,
closed-form and oracle linear complexity, and trace-form verification.
"""

from .analysis import (
    AnalysisReport,
    DefiningPolynomial,
    admissible_pairs,
    analyze,
    class_sum,
    defining_poly_formula,
    dft,
    inner_product_check,
    lc_by_count,
    lc_by_theorem,
    power_table,
    rho_constancy,
    rho_value,
    verify_identities,
)
from .cyclotomy import (
    CASE1,
    CASE2,
    CyclotomicSystem,
    build_system,
    case_of,
    classify,
    count_solutions,
    locate_two,
)
from .galois import (
    GaloisRing,
    GrElement,
    R_MAX,
    frobenius,
    is_constant,
    make_ring,
    root_of_unity,
    teichmuller_decompose,
    trace,
)
from .lfsr import LfsrResult, reeds_sloane, snf_min_length, solvable_z4
from .numtheory import (
    common_primitive_root,
    crt_pair,
    euler_phi,
    factorize,
    is_prime,
    mult_order,
)
from .sequence import (
    QuaternarySequence,
    digit_histogram,
    from_text,
    generate,
    to_csv,
    to_text,
)
from .trace_repr import TraceParams, check_trace_repr, eval_trace_repr, trace_params

__version__ = "0.1.0"

__all__ = [
    "AnalysisReport", "CASE1", "CASE2", "CyclotomicSystem", "DefiningPolynomial",
    "GaloisRing", "GrElement", "LfsrResult", "QuaternarySequence", "R_MAX",
    "TraceParams", "admissible_pairs", "analyze", "build_system", "case_of",
    "check_trace_repr", "class_sum", "classify", "common_primitive_root",
    "count_solutions", "crt_pair", "defining_poly_formula", "dft",
    "digit_histogram", "euler_phi", "eval_trace_repr", "factorize", "frobenius",
    "from_text", "generate", "inner_product_check", "is_constant", "is_prime",
    "lc_by_count", "lc_by_theorem", "locate_two", "make_ring", "mult_order",
    "power_table", "reeds_sloane", "rho_constancy", "rho_value", "root_of_unity",
    "snf_min_length", "solvable_z4", "teichmuller_decompose", "to_csv", "to_text",
    "trace", "trace_params", "verify_identities",
]
