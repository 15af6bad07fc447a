# Truncated Taylor propagator
from .taylor_evolver import (
    MACHINE_EPSILON,
    TAYLOR_COST_CYCLES,
    TaylorPlan,
    choose_cutoff,
    make_plan,
    spectral_bound,
    taylor_error,
    taylor_evolve,
    taylor_step,
    taylor_steps,
)

__all__ = [
    "MACHINE_EPSILON",
    "TAYLOR_COST_CYCLES",
    "TaylorPlan",
    "choose_cutoff",
    "make_plan",
    "spectral_bound",
    "taylor_error",
    "taylor_evolve",
    "taylor_step",
    "taylor_steps",
]
