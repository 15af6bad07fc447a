#!/usr/bin/env python3
"""
taylor_evolver.py - Truncated Taylor Propagator

    exp(iHh) v ~= sum_{j=0..k} (iHh)^j / j! v

With Gamma >= |lambda_max(H)| and h = 1/Gamma the omitted terms are bounded by
1/(k+1)!, so k is the smallest integer with 1/(k+1)! < epsilon. For double
precision (epsilon = 2.22e-16) this gives k = 17.

The series is evaluated by iterated application, v_{j+1} = (iHh / (j+1)) v_j, so
H is only ever applied to vectors and never raised to a power.

PYTHON API
==========

    from trotterkit.taylor.taylor_evolver import make_plan, taylor_error

    config = xxz_config(L=6)
    plan = make_plan(config)                 # gamma=18.5..., h=1/gamma, k=17
    taylor_error(config, 10.0, plan)         # ~1e-14
"""

import dataclasses
import logging
import math
import sys

import numpy as np

from ..heisenberg.frobenius import frobenius_error
from ..heisenberg.spin_chain import (
    SpinChainConfig,
    build_hamiltonian,
    build_sparse_hamiltonian,
    exact_propagator,
)

logger = logging.getLogger(__name__)

MACHINE_EPSILON = sys.float_info.epsilon

# Largest Gamma*h a plan accepts
MAX_GAMMA_H = 1.5

# Runtime of a k=17 Taylor step counted as this many splitting cycles
TAYLOR_COST_CYCLES = 3


@dataclasses.dataclass(frozen=True)
class TaylorPlan:
    """
    Step and cutoff of a Taylor propagation.

    Attributes:
        gamma: Spectral bound Gamma >= |lambda_max(H)|
        h: Step size (1/Gamma from make_plan)
        k: Series cutoff
        epsilon: Target relative precision per step
    """

    gamma: float
    h: float
    k: int
    epsilon: float

    def __post_init__(self):
        if self.gamma <= 0 or self.h <= 0:
            raise ValueError(f"Taylor plan needs positive gamma and h, got {self.gamma}, {self.h}")
        if self.gamma * self.h > MAX_GAMMA_H:
            raise ValueError(
                f"Taylor step too large: gamma*h = {self.gamma * self.h:.3g} exceeds {MAX_GAMMA_H}"
            )
        if self.k < 1:
            raise ValueError(f"Taylor cutoff must be at least 1, got {self.k}")


def spectral_bound(config: SpinChainConfig) -> float:
    """Gamma = L (|Jx| + |Jy| + |Jz|) + sum_i |h_i| (triangle inequality)."""
    couplings = abs(config.Jx) + abs(config.Jy) + abs(config.Jz)
    return config.L * couplings + sum(abs(h_i) for h_i in config.fields)


def choose_cutoff(epsilon: float = MACHINE_EPSILON) -> int:
    """
    Smallest k with 1/(k+1)! < epsilon.

    Raises:
        ValueError: Unless 0 < epsilon < 1

    Example:
        >>> choose_cutoff(0.5), choose_cutoff(1e-4)
        (2, 7)
    """
    if not 0 < epsilon < 1:
        raise ValueError(f"epsilon must lie in (0, 1), got {epsilon}")
    k = 1
    while 1.0 / math.factorial(k + 1) >= epsilon:
        k += 1
    return k


def make_plan(config: SpinChainConfig, epsilon: float = MACHINE_EPSILON) -> TaylorPlan:
    """Plan with Gamma from spectral_bound, h = 1/Gamma and k from choose_cutoff."""
    gamma = spectral_bound(config)
    if gamma == 0:
        raise ValueError("Spectral bound is zero; the Hamiltonian vanishes")
    plan = TaylorPlan(gamma=gamma, h=1.0 / gamma, k=choose_cutoff(epsilon), epsilon=epsilon)
    logger.debug("Taylor plan: gamma=%.6g h=%.6g k=%d", plan.gamma, plan.h, plan.k)
    return plan


def taylor_step(state: np.ndarray, H_applier, h: float, k: int) -> np.ndarray:
    """
    sum_{j=0..k} (iHh)^j / j! applied to state.

    Args:
        state: Array of shape (N,) or (N, m)
        H_applier: Anything supporting H_applier @ state (dense or sparse matrix)
        h: Step size
        k: Series cutoff

    Raises:
        ValueError: If k < 1
    """
    if k < 1:
        raise ValueError(f"Taylor cutoff must be at least 1, got {k}")
    term = np.asarray(state, dtype=complex)
    result = term.copy()
    for j in range(k):
        term = (1j * h / (j + 1)) * (H_applier @ term)
        result = result + term
    return result


def taylor_steps(t: float, plan: TaylorPlan) -> int:
    """ceil(t / plan.h) steps so the actual step never exceeds plan.h."""
    if t <= 0:
        raise ValueError(f"Evolution time must be positive, got t={t}")
    return max(1, math.ceil(t / plan.h - 1e-9))


def taylor_evolve(config: SpinChainConfig, t: float, plan: TaylorPlan) -> np.ndarray:
    """Taylor propagator over time t applied to the full computational basis."""
    steps = taylor_steps(t, plan)
    h = t / steps
    H = build_sparse_hamiltonian(config)
    state = np.eye(config.dimension, dtype=complex)
    for _ in range(steps):
        state = taylor_step(state, H, h, plan.k)
    logger.debug("Taylor evolution: %d steps of h=%.6g over t=%g", steps, h, t)
    return state


def taylor_error(config: SpinChainConfig, t: float, plan: TaylorPlan) -> float:
    """Frobenius error of the Taylor propagator against exact diagonalisation."""
    exact = exact_propagator(build_hamiltonian(config), t)
    return frobenius_error(exact, taylor_evolve(config, t, plan))
