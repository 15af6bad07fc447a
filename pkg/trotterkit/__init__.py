"""
trotterkit

Symmetric Suzuki-Trotter splitting schemes and the tools around them.
Provides the scheme catalog with multi-stage coefficient conversion and order
raising, an exact BCH error analysis in a truncated free algebra, a truncated
Taylor propagator, and a Heisenberg spin-chain benchmark harness.

Modules:
    schemes: Scheme catalog, stage coefficients, scheme files
    bch: Free algebra, error coefficients, efficiencies, order certification
    heisenberg: Chain Hamiltonian, analytic gates, Frobenius errors
    taylor: Truncated Taylor propagator
    bench: Benchmark records and the trotterkit command line
"""

__version__ = "1.0.0"
__author__ = "trotterkit developers"

from .bch.error_terms import certify_order, efficiency, error_coefficients
from .schemes.scheme_catalog import get_scheme, list_schemes, suzuki_compose, to_stage_coefficients

__all__ = [
    "certify_order",
    "efficiency",
    "error_coefficients",
    "get_scheme",
    "list_schemes",
    "suzuki_compose",
    "to_stage_coefficients",
    "__version__",
]
