"""Generalized Bessel functions and numerical checks for the exponential
starlike and convex classes on the unit disk."""

from .errors import (
    BesselstarError,
    BranchError,
    ConsistencyError,
    MaxTermsExceeded,
    NonvanishingAtZero,
    NonvanishingViolated,
    NotNormalized,
    OutOfDomain,
    PoleError,
    ZeroDenominator,
)
from .gft_checks import (
    AnalyticMap,
    DiskGrid,
    MembershipReport,
    check_class,
    check_quarter_bound,
    check_subordinate_exp,
    convex_quantity,
    log_bound_lemma_check,
    starlike_quantity,
)
from .series_ops import (
    PowerSeries,
    alexander,
    b_operator,
    eval_series,
    hadamard,
    libera,
    libera_kernel,
    series_of_phi,
    series_of_vartheta,
)
from .special_fn import (
    BesselParams,
    EvalResult,
    gamma,
    named_family,
    omega_eval,
    phi_derivative,
    phi_eval,
    pochhammer,
)
from .theorems import (
    ExtremalCurve,
    Hypothesis,
    TheoremReport,
    bessel_chain_step,
    example_linear_check,
    example_linear_report,
    example_product_check,
    example_product_report,
    expected_extremum,
    extremal_curve,
    hyp_Ke,
    hyp_Pe,
    hyp_Se,
    hyp_bkc_chain,
    hyp_corollaries,
    hyp_libera,
    hyp_omega_Se,
    normalized_phi_deficit,
)

__version__ = "0.1.0"

__all__ = [
    "AnalyticMap",
    "BesselParams",
    "BesselstarError",
    "BranchError",
    "ConsistencyError",
    "DiskGrid",
    "EvalResult",
    "ExtremalCurve",
    "Hypothesis",
    "MaxTermsExceeded",
    "MembershipReport",
    "NonvanishingAtZero",
    "NonvanishingViolated",
    "NotNormalized",
    "OutOfDomain",
    "PoleError",
    "PowerSeries",
    "TheoremReport",
    "ZeroDenominator",
    "alexander",
    "b_operator",
    "bessel_chain_step",
    "check_class",
    "check_quarter_bound",
    "check_subordinate_exp",
    "convex_quantity",
    "eval_series",
    "example_linear_check",
    "example_linear_report",
    "example_product_check",
    "example_product_report",
    "expected_extremum",
    "extremal_curve",
    "gamma",
    "hadamard",
    "hyp_Ke",
    "hyp_Pe",
    "hyp_Se",
    "hyp_bkc_chain",
    "hyp_corollaries",
    "hyp_libera",
    "hyp_omega_Se",
    "libera",
    "libera_kernel",
    "named_family",
    "normalized_phi_deficit",
    "omega_eval",
    "phi_derivative",
    "phi_eval",
    "pochhammer",
    "series_of_phi",
    "series_of_vartheta",
    "starlike_quantity",
]
