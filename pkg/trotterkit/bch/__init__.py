# Baker-Campbell-Hausdorff error analysis in a truncated free algebra
from .error_terms import (
    DEFAULT_DEGREE,
    ErrorCoefficients,
    NumericalFailure,
    OrderCertificate,
    Projection,
    certify_order,
    efficiency,
    error_coefficients,
    project_error,
    scheme_error_element,
)
from .free_algebra import (
    FreeAlgebraElement,
    commutator,
    exp_generator,
    generator,
    nc_exp,
    nc_log,
    nc_mul,
    nested_commutator,
)

__all__ = [
    "DEFAULT_DEGREE",
    "ErrorCoefficients",
    "FreeAlgebraElement",
    "NumericalFailure",
    "OrderCertificate",
    "Projection",
    "certify_order",
    "commutator",
    "efficiency",
    "error_coefficients",
    "exp_generator",
    "generator",
    "nc_exp",
    "nc_log",
    "nc_mul",
    "nested_commutator",
    "project_error",
    "scheme_error_element",
]
