"""Exact Sheffer-Appell polynomial sequences over the rationals.

The package builds polynomial sequences from truncated formal power
series pairs (l, h), extracts the coefficient vectors of their
differential and recurrence identities, verifies those identities with
exact residuals, and checks the Pascal/Wronskian matrix factorization
behind them.  All arithmetic uses fractions.Fraction; nothing is
floating point.
"""

from .audit import (
    FAIL,
    IDENTITY_IDS,
    PASS,
    AuditEntry,
    AuditReport,
    run_worked_example_audit,
)
from .errors import (
    InsufficientOrderError,
    NotDeltaSeriesError,
    NotInvertibleError,
    OrderMismatchError,
    ParameterError,
    ShefferMatError,
    UnknownFamilyError,
)
from .families import (
    FAMILIES,
    FamilySpec,
    binomial_series,
    list_families,
    make_pair,
)
from .identities import (
    COEFF_EXTRACTORS,
    LABELS,
    RESIDUALS,
    CoeffTriple,
    associated_residual,
    convolution_recurrence_coeffs,
    convolution_recurrence_residual,
    derivative_recurrence_coeffs,
    derivative_recurrence_residual,
    differential_equation_coeffs,
    differential_equation_residual,
    factorization_check,
    mixed_recurrence_coeffs,
    mixed_recurrence_residual,
    scaled_derivative_matrix,
)
from .matrices import (
    LowerTriangularMatrix,
    Matrix,
    check_property_composition,
    check_property_product_pascal,
    check_property_product_wronskian,
    lift_matrix,
    omega,
    omega_inverse,
    pascal_matrix,
    wronskian_matrix,
    wronskian_powers_matrix,
    wronskian_vector,
)
from .pairs import ShefferPair
from .polynomials import Poly
from .rationals import Rational, format_rational, parse_rational, rat
from .sequences import (
    KINDS,
    PolySequence,
    appell_kernel,
    appell_sequence,
    discrete_convolution,
    sheffer_appell_sequence,
    sheffer_sequence,
)
from .series import TruncatedSeries, exp_xy, lift, log_derivative, x_multiple
from .verify import (
    CheckResult,
    lemma_checks,
    property_suite,
    residual_checks,
    verify_family,
)

__version__ = "0.1.0"

__all__ = [
    "AuditEntry",
    "FAIL",
    "IDENTITY_IDS",
    "PASS",
    "AuditReport",
    "CheckResult",
    "CoeffTriple",
    "COEFF_EXTRACTORS",
    "FAMILIES",
    "FamilySpec",
    "InsufficientOrderError",
    "KINDS",
    "LABELS",
    "LowerTriangularMatrix",
    "Matrix",
    "NotDeltaSeriesError",
    "NotInvertibleError",
    "OrderMismatchError",
    "ParameterError",
    "Poly",
    "PolySequence",
    "Rational",
    "RESIDUALS",
    "ShefferMatError",
    "ShefferPair",
    "TruncatedSeries",
    "UnknownFamilyError",
    "appell_kernel",
    "appell_sequence",
    "associated_residual",
    "binomial_series",
    "check_property_composition",
    "check_property_product_pascal",
    "check_property_product_wronskian",
    "convolution_recurrence_coeffs",
    "convolution_recurrence_residual",
    "derivative_recurrence_coeffs",
    "derivative_recurrence_residual",
    "differential_equation_coeffs",
    "differential_equation_residual",
    "discrete_convolution",
    "exp_xy",
    "factorization_check",
    "format_rational",
    "lemma_checks",
    "lift",
    "lift_matrix",
    "list_families",
    "log_derivative",
    "make_pair",
    "mixed_recurrence_coeffs",
    "mixed_recurrence_residual",
    "omega",
    "omega_inverse",
    "parse_rational",
    "pascal_matrix",
    "property_suite",
    "rat",
    "residual_checks",
    "run_worked_example_audit",
    "scaled_derivative_matrix",
    "sheffer_appell_sequence",
    "sheffer_sequence",
    "verify_family",
    "wronskian_matrix",
    "wronskian_powers_matrix",
    "wronskian_vector",
    "x_multiple",
]
