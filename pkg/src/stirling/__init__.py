"""Exact and high-precision toolkit for the asymptotic series of n! and 1/n!.

The package computes the coefficients of

    n! ~ (n^n sqrt(2 pi n) / e^n) * (1 + 1/(12 n) + 1/(288 n^2) - ...)

exactly, by three independent methods, verifies the structural identities
that tie the n! and 1/n! expansions together, and validates the two
integral representations of the expanded ratio at arbitrary precision.
"""

from .coeffs import (
    CoeffTable,
    coeffs_via_bernoulli,
    coeffs_via_halfpower,
    coeffs_via_recurrence,
    convolution_check,
    egf_growth,
    log_series_coeffs,
    reciprocal_coeffs,
)
from .exactnum import bernoulli, binomial, factorial, parse_rational, rational_str
from .polyring import Poly, gauss_expectation, gauss_moment, stirling_poly
from .series import TruncSeries, phi_series
from .asympt_eval import (
    ErrorRow,
    TruncationScan,
    error_table,
    eval_partial_sum,
    factorial_approx,
    optimal_truncation,
    reciprocal_factorial_approx,
    stirling_ratio,
)
from .quadrature import (
    BoundCheck,
    QuadResult,
    ToleranceError,
    bound_checks,
    f_integral,
    g_integral,
    phi_eval,
    psi_eval,
)

__version__ = "0.1.0"

__all__ = [
    "CoeffTable",
    "coeffs_via_bernoulli",
    "coeffs_via_halfpower",
    "coeffs_via_recurrence",
    "convolution_check",
    "egf_growth",
    "log_series_coeffs",
    "reciprocal_coeffs",
    "bernoulli",
    "binomial",
    "factorial",
    "parse_rational",
    "rational_str",
    "Poly",
    "gauss_expectation",
    "gauss_moment",
    "stirling_poly",
    "TruncSeries",
    "phi_series",
    "ErrorRow",
    "TruncationScan",
    "error_table",
    "eval_partial_sum",
    "factorial_approx",
    "optimal_truncation",
    "reciprocal_factorial_approx",
    "stirling_ratio",
    "BoundCheck",
    "QuadResult",
    "ToleranceError",
    "bound_checks",
    "f_integral",
    "g_integral",
    "phi_eval",
    "psi_eval",
    "__version__",
]
