#!/usr/bin/env python3
"""
frobenius.py - Frobenius-Norm Error of Splitting Propagators

    err = || U(t) - S(h)^(t/h) ||_F / sqrt(N),    N = 2^L

i.e. the root-mean-square error of evolving every computational basis vector.
S(h)^(t/h) is evaluated by successive application of the dense step operator,
never by diagonalising it, so non-unitary schemes are free to diverge.

PYTHON API
==========

    from trotterkit.heisenberg.frobenius import trotter_error, adjust_step

    h, steps = adjust_step(t=10.0, h=0.03)        # h=0.0300300..., steps=333
    err = trotter_error(config, get_scheme("forest-ruth"), Arrangement.S2, h, 10.0)
"""

import logging
from typing import Optional, Sequence, Tuple

import numpy as np

from ..schemes.scheme_catalog import SplittingScheme
from .gates import Arrangement, step_operator
from .spin_chain import SpinChainConfig, build_hamiltonian, exact_propagator

logger = logging.getLogger(__name__)

# Allowed deviation of t/h from an integer
STEP_TOLERANCE = 1e-9


def frobenius_error(exact: np.ndarray, approx: np.ndarray) -> float:
    """||exact - approx||_F / sqrt(N)."""
    return float(np.linalg.norm(exact - approx) / np.sqrt(exact.shape[0]))


def unitarity_defect(M: np.ndarray) -> float:
    """||M^dagger M - I||_F / sqrt(N)."""
    N = M.shape[0]
    return frobenius_error(M.conj().T @ M, np.eye(N))


def adjust_step(t: float, h: float) -> Tuple[float, int]:
    """
    Nearest step size that divides t exactly.

    Returns:
        Tuple of (adjusted h, number of steps), steps >= 1

    Raises:
        ValueError: If t or h is not positive
    """
    if t <= 0 or h <= 0:
        raise ValueError(f"t and h must be positive, got t={t}, h={h}")
    steps = max(1, int(round(t / h)))
    adjusted = t / steps
    if adjusted != h:
        logger.debug("Adjusted h=%.6g to %.6g (%d steps over t=%g)", h, adjusted, steps, t)
    return adjusted, steps


def step_count(t: float, h: float) -> int:
    """
    t/h as an integer.

    Raises:
        ValueError: If t/h is not within STEP_TOLERANCE of a positive integer
    """
    ratio = t / h
    steps = int(round(ratio))
    if steps < 1 or abs(ratio - steps) > STEP_TOLERANCE:
        raise ValueError(
            f"t/h must be a positive integer, got t/h = {ratio!r}; use adjust_step() first"
        )
    return steps


def evolve(
    config: SpinChainConfig,
    scheme: SplittingScheme,
    arrangement: Arrangement,
    h: float,
    t: float,
    conjugate_alternating: Optional[bool] = None,
) -> np.ndarray:
    """
    S(h)^(t/h) by successive application of the step operator.

    Args:
        conjugate_alternating: Use conjugated coefficients on every odd step (0-based);
                               None means on for complex schemes, off otherwise

    Raises:
        ValueError: If t/h is not an integer or the arrangement does not fit the chain
    """
    steps = step_count(t, h)
    if conjugate_alternating is None:
        conjugate_alternating = not scheme.unitary()
    forward = step_operator(config, scheme, arrangement, h)
    alternate = (
        step_operator(config, scheme, arrangement, h, conjugate=True)
        if conjugate_alternating and not scheme.unitary()
        else forward
    )
    result = np.eye(config.dimension, dtype=complex)
    for k in range(steps):
        result = (alternate if k % 2 else forward) @ result
    return result


def trotter_error(
    config: SpinChainConfig,
    scheme: SplittingScheme,
    arrangement: Arrangement,
    h: float,
    t: float,
    conjugate_alternating: Optional[bool] = None,
    exact: Optional[np.ndarray] = None,
) -> float:
    """
    Frobenius error of the splitting propagator against exact diagonalisation.

    Args:
        exact: Precomputed exp(iHt) for this config and t (computed when omitted)
    """
    approx = evolve(config, scheme, arrangement, h, t, conjugate_alternating)
    if exact is None:
        exact = exact_propagator(build_hamiltonian(config), t)
    return frobenius_error(exact, approx)


def fit_loglog_slope(x: Sequence[float], y: Sequence[float]) -> float:
    """
    Least-squares slope of log(y) against log(x).

    Raises:
        ValueError: With fewer than two points or non-positive values
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.shape != y.shape or x.size < 2:
        raise ValueError(f"Slope fit needs at least two (x, y) pairs, got {x.size}")
    if np.any(x <= 0) or np.any(y <= 0):
        raise ValueError("Slope fit needs positive values on both axes")
    slope, _ = np.polyfit(np.log(x), np.log(y), 1)
    return float(slope)


def asymptotic_window(
    x: Sequence[float], y: Sequence[float], floor: float = 1e-12, plateau: float = 1e-1
) -> np.ndarray:
    """
    Indices of the points in the asymptotic region of an error curve.

    Keeps the points strictly between the precision floor and the plateau, then
    the one-decade span of x holding the most of them (the first such span on ties).

    Returns:
        Index array into x/y sorted by x (may be empty)
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    order = np.argsort(x, kind="stable")
    candidates = [i for i in order if floor < y[i] < plateau]
    best: Sequence[int] = []
    for start, i in enumerate(candidates):
        span = [j for j in candidates[start:] if x[j] <= 10 * x[i]]
        if len(span) > len(best):
            best = span
    return np.asarray(best, dtype=int)
