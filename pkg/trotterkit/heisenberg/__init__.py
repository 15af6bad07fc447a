# Heisenberg chain model, analytic gates and Frobenius error evaluation
from .frobenius import (
    adjust_step,
    asymptotic_window,
    evolve,
    fit_loglog_slope,
    frobenius_error,
    trotter_error,
    unitarity_defect,
)
from .gates import (
    Arrangement,
    apply_site_gate,
    apply_stage_gates,
    splitting_step,
    step_operator,
    two_stage_step,
)
from .spin_chain import (
    DEFAULT_L,
    DEFAULT_SEED,
    SpinChainConfig,
    build_hamiltonian,
    build_sparse_hamiltonian,
    exact_propagator,
    make_config,
    sample_fields,
    xxz_config,
    xz_config,
)

__all__ = [
    "Arrangement",
    "DEFAULT_L",
    "DEFAULT_SEED",
    "SpinChainConfig",
    "adjust_step",
    "apply_site_gate",
    "apply_stage_gates",
    "asymptotic_window",
    "build_hamiltonian",
    "build_sparse_hamiltonian",
    "evolve",
    "exact_propagator",
    "fit_loglog_slope",
    "frobenius_error",
    "make_config",
    "sample_fields",
    "splitting_step",
    "step_operator",
    "trotter_error",
    "two_stage_step",
    "unitarity_defect",
    "xxz_config",
    "xz_config",
]
