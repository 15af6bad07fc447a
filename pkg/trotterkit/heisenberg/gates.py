#!/usr/bin/env python3
"""
gates.py - Analytic Stage Gates and Multi-Stage Splitting Steps

The chain Hamiltonian is grouped per site and axis,

    H^x_i = Jx X_i X_{i+1}     H^y_i = Jy Y_i Y_{i+1}     H^z_i = Jz Z_i Z_{i+1} + h_i Z_i

and every exponential exp(i c h H^a_i) has a closed form:

    exp(i t XX) = cos(t) + i sin(t) XX     (same for YY; complex t allowed)
    exp(i c h H^z_i) is diagonal

Terms of one axis commute, so an axis stage is a plain product over sites.

Arrangements fix the order of stages inside a forward ramp; backward ramps run it
in reverse:

    S2   (all x, all z)                        2 stages, needs Jy = 0
    S3   (all x, all y, all z)                 3 stages
    S2L  (x_1, z_1, x_2, z_2, ..., x_L, z_L)   2L stages, needs Jy = 0
    S3L  (x_1, y_1, z_1, ..., x_L, y_L, z_L)   3L stages

States are complex arrays of shape (2^L,) or (2^L, m); the second form evolves m
vectors at once (the identity matrix gives the step operator itself). Stages are
applied in the order they are written, first factor first.
"""

import dataclasses
import enum
import logging
from functools import lru_cache
from typing import List, Optional, Tuple

import numpy as np

from ..schemes.scheme_catalog import SplittingScheme, conjugate_alternate, to_stage_coefficients
from .spin_chain import SpinChainConfig, z_values

logger = logging.getLogger(__name__)

AXES = ("x", "y", "z")

Stage = Tuple[str, Optional[int]]


class Arrangement(enum.Enum):
    """Stage ordering of a splitting of the chain Hamiltonian."""

    S2 = "s2"
    S2L = "s2l"
    S3 = "s3"
    S3L = "s3l"

    @classmethod
    def parse(cls, tag: str) -> "Arrangement":
        try:
            return cls(tag.lower())
        except ValueError as e:
            choices = ", ".join(a.value for a in cls)
            raise ValueError(f"Invalid arrangement {tag!r}; choose one of {choices}") from e

    @property
    def axes(self) -> Tuple[str, ...]:
        return ("x", "z") if self in (Arrangement.S2, Arrangement.S2L) else AXES

    @property
    def local(self) -> bool:
        return self in (Arrangement.S2L, Arrangement.S3L)

    def requires_xz(self) -> bool:
        return "y" not in self.axes

    def num_stages(self, L: int) -> int:
        """Stage count: 2, 3, 2L or 3L."""
        return len(self.axes) * (L if self.local else 1)

    def stages(self, L: int) -> List[Stage]:
        """Forward-ramp stage order as (axis, site) pairs; site None means every site."""
        if self.local:
            return [(axis, site) for site in range(L) for axis in self.axes]
        return [(axis, None) for axis in self.axes]

    def check_compatible(self, config: SpinChainConfig):
        """
        Raises:
            ValueError: For a two-axis arrangement on a chain with Jy != 0
        """
        if self.requires_xz() and config.Jy != 0:
            raise ValueError(
                f"Arrangement {self.value.upper()} drops the y stage and needs Jy = 0 "
                f"(got Jy = {config.Jy})"
            )


@dataclasses.dataclass(frozen=True)
class ChainTables:
    """Bit tables shared by all gates of one chain."""

    flip: Tuple[np.ndarray, ...]  # basis index with both bond bits flipped, per site
    yy_sign: Tuple[np.ndarray, ...]  # -1 where the bond bits agree, +1 otherwise
    z_site: Tuple[np.ndarray, ...]  # diagonal of H^z_i per site
    z_total: np.ndarray  # diagonal of sum_i H^z_i


@lru_cache(maxsize=32)
def chain_tables(config: SpinChainConfig) -> ChainTables:
    index = np.arange(config.dimension)
    z = z_values(config.L)
    flip, yy_sign, z_site = [], [], []
    for i, j in config.bonds():
        flip.append(index ^ ((1 << i) | (1 << j)))
        bond = z[:, i] * z[:, j]
        yy_sign.append(-bond.astype(float))
        z_site.append(config.Jz * bond + config.fields[i] * z[:, i])
    return ChainTables(tuple(flip), tuple(yy_sign), tuple(z_site), np.sum(z_site, axis=0))


def _column(vector: np.ndarray, state: np.ndarray) -> np.ndarray:
    return vector.reshape((-1,) + (1,) * (state.ndim - 1))


def _apply_bond(state: np.ndarray, axis: str, site: int, theta: complex, tables: ChainTables):
    flipped = state[tables.flip[site]]
    if axis == "y":
        flipped = flipped * _column(tables.yy_sign[site], state)
    return np.cos(theta) * state + 1j * np.sin(theta) * flipped


def apply_site_gate(
    state: np.ndarray, axis: str, site: int, coeff: complex, h: float, config: SpinChainConfig
) -> np.ndarray:
    """exp(i coeff h H^axis_site) applied to state."""
    if axis not in AXES:
        raise ValueError(f"Invalid axis {axis!r}; choose one of x, y, z")
    if not 0 <= site < config.L:
        raise ValueError(f"Site {site} outside 0..{config.L - 1}")
    tables = chain_tables(config)
    if axis == "z":
        return np.exp(1j * coeff * h * _column(tables.z_site[site], state)) * state
    J = config.Jx if axis == "x" else config.Jy
    if J == 0 or coeff == 0:
        return state
    return _apply_bond(state, axis, site, coeff * h * J, tables)


def apply_stage_gates(
    state: np.ndarray, axis: str, coeff: complex, h: float, config: SpinChainConfig
) -> np.ndarray:
    """
    prod_i exp(i coeff h H^axis_i) applied to state, sites ascending.

    The y stage of a chain with Jy = 0 is the identity.

    Raises:
        ValueError: For an axis other than x, y or z
    """
    if axis not in AXES:
        raise ValueError(f"Invalid axis {axis!r}; choose one of x, y, z")
    tables = chain_tables(config)
    if axis == "z":
        return np.exp(1j * coeff * h * _column(tables.z_total, state)) * state
    J = config.Jx if axis == "x" else config.Jy
    if J == 0 or coeff == 0:
        return state
    theta = coeff * h * J
    for site in range(config.L):
        state = _apply_bond(state, axis, site, theta, tables)
    return state


def _apply_stage(state, stage: Stage, coeff, h, config):
    axis, site = stage
    if site is None:
        return apply_stage_gates(state, axis, coeff, h, config)
    return apply_site_gate(state, axis, site, coeff, h, config)


def splitting_step(
    state: np.ndarray,
    scheme: SplittingScheme,
    arrangement: Arrangement,
    h: float,
    config: SpinChainConfig,
) -> np.ndarray:
    """
    One time step of `scheme` in the multi-stage form.

    Every cycle runs the forward ramp with c_i and the backward ramp with d_i.

    Raises:
        ValueError: If the arrangement needs Jy = 0 and the chain has Jy != 0
    """
    arrangement.check_compatible(config)
    stage = to_stage_coefficients(scheme)
    forward = arrangement.stages(config.L)
    backward = forward[::-1]
    state = np.asarray(state, dtype=complex)
    for c_i, d_i in zip(stage.c, stage.d):
        for st in forward:
            state = _apply_stage(state, st, c_i, h, config)
        for st in backward:
            state = _apply_stage(state, st, d_i, h, config)
    return state


def two_stage_step(
    state: np.ndarray, scheme: SplittingScheme, h: float, config: SpinChainConfig
) -> np.ndarray:
    """
    One step of the a/b product exp(a_1 A) exp(b_1 B) ... exp(a_{q+1} A) with A = all x
    gates and B = all z gates. Agrees with splitting_step under S2.
    """
    Arrangement.S2.check_compatible(config)
    state = np.asarray(state, dtype=complex)
    for a_i, b_i in zip(scheme.a, scheme.b):
        state = apply_stage_gates(state, "x", a_i, h, config)
        state = apply_stage_gates(state, "z", b_i, h, config)
    return apply_stage_gates(state, "x", scheme.a[-1], h, config)


def step_operator(
    config: SpinChainConfig,
    scheme: SplittingScheme,
    arrangement: Arrangement,
    h: float,
    conjugate: bool = False,
) -> np.ndarray:
    """
    Dense matrix S(h) of one splitting step, obtained by stepping every basis vector.

    Args:
        conjugate: Use the complex-conjugated coefficients (odd steps of a
                   symmetric-conjugate run)
    """
    if conjugate:
        scheme = conjugate_alternate(scheme, 1)
    identity = np.eye(config.dimension, dtype=complex)
    return splitting_step(identity, scheme, arrangement, h, config)
