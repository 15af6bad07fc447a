#!/usr/bin/env python3
"""
spin_chain.py - Periodic Heisenberg Spin-1/2 Chain

    H = sum_i ( Jx X_i X_{i+1} + Jy Y_i Y_{i+1} + Jz Z_i Z_{i+1} + h_i Z_i ),   site L == site 0

Basis convention: site i is bit i of the computational basis index (site 0 is the
least significant bit), bit value 0 is Z = +1. Dense operators are built as
kron(P_{L-1}, ..., P_1, P_0).

The random fields h_i come from SplitMix64 seeded with the config seed, each
64-bit output u mapped to (u >> 11) * 2^-53 in [0, 1) and then to [-0.1, 0.1],
so a seed gives the same realisation on every platform.

PYTHON API
==========

    from trotterkit.heisenberg.spin_chain import xz_config, build_hamiltonian, exact_propagator

    config = xz_config(L=6, seed=20221006)
    H = build_hamiltonian(config)
    U = exact_propagator(H, t=10.0)           # exp(+iHt)
"""

import dataclasses
import logging
from functools import reduce
from typing import Iterator, List, Sequence, Tuple

import numpy as np
import scipy.linalg
import scipy.sparse

logger = logging.getLogger(__name__)

DEFAULT_L = 6
DEFAULT_SEED = 20221006
FIELD_AMPLITUDE = 0.1

HERMITIAN_ATOL = 1e-12

_MASK64 = (1 << 64) - 1

PAULI_I = np.eye(2, dtype=complex)
PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=complex)


@dataclasses.dataclass(frozen=True)
class SpinChainConfig:
    """
    Heisenberg chain parameters.

    Attributes:
        L: Number of sites (>= 2)
        Jx, Jy, Jz: Couplings
        fields: Per-site longitudinal fields h_i (L values)
        seed: Seed the fields were sampled with (recorded in bench output)
    """

    L: int
    Jx: float
    Jy: float
    Jz: float
    fields: Tuple[float, ...]
    seed: int = DEFAULT_SEED

    def __post_init__(self):
        if self.L < 2:
            raise ValueError(f"Chain length must be at least 2, got L={self.L}")
        object.__setattr__(self, "fields", tuple(float(x) for x in self.fields))
        if len(self.fields) != self.L:
            raise ValueError(f"Expected {self.L} fields, got {len(self.fields)}")
        if not 0 <= self.seed <= _MASK64:
            raise ValueError(f"Seed must be an unsigned 64-bit integer, got {self.seed}")

    @property
    def dimension(self) -> int:
        return 2**self.L

    def bonds(self) -> Iterator[Tuple[int, int]]:
        """Periodic nearest-neighbour bonds (i, i+1 mod L), site-ascending."""
        for i in range(self.L):
            yield i, (i + 1) % self.L


def splitmix64(seed: int) -> Iterator[int]:
    """Endless SplitMix64 stream of unsigned 64-bit integers."""
    state = seed & _MASK64
    while True:
        state = (state + 0x9E3779B97F4A7C15) & _MASK64
        z = state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        yield z ^ (z >> 31)


def sample_fields(seed: int, L: int) -> List[float]:
    """
    L fields uniform in [-0.1, 0.1], bit-exact for a given seed.

    Example:
        >>> sample_fields(7, 3) == sample_fields(7, 3)
        True
    """
    stream = splitmix64(seed)
    values = []
    for _ in range(L):
        unit = (next(stream) >> 11) * 2.0**-53
        values.append(-FIELD_AMPLITUDE + 2 * FIELD_AMPLITUDE * unit)
    return values


def make_config(
    L: int, Jx: float, Jy: float, Jz: float, seed: int = DEFAULT_SEED
) -> SpinChainConfig:
    return SpinChainConfig(L, Jx, Jy, Jz, tuple(sample_fields(seed, L)), seed)


def xz_config(L: int = DEFAULT_L, seed: int = DEFAULT_SEED) -> SpinChainConfig:
    """XZ model (Jx = Jz = 1, Jy = 0) with seeded random fields."""
    return make_config(L, 1.0, 0.0, 1.0, seed)


def xxz_config(L: int = DEFAULT_L, seed: int = DEFAULT_SEED) -> SpinChainConfig:
    """Isotropic model (Jx = Jy = Jz = 1) with seeded random fields."""
    return make_config(L, 1.0, 1.0, 1.0, seed)


def site_operator(ops: Sequence[Tuple[int, np.ndarray]], L: int) -> np.ndarray:
    """Tensor product placing each (site, 2x2 matrix) pair and identities elsewhere."""
    factors = [PAULI_I] * L
    for site, op in ops:
        factors[site] = factors[site] @ op
    # site 0 must end up least significant
    return reduce(np.kron, factors[::-1])


def build_hamiltonian(config: SpinChainConfig) -> np.ndarray:
    """
    Dense 2^L x 2^L Hamiltonian.

    Each of the L periodic bonds contributes once, so at L=2 the single physical
    bond is counted twice.
    """
    N = config.dimension
    H = np.zeros((N, N), dtype=complex)
    for i, j in config.bonds():
        for J, pauli in ((config.Jx, PAULI_X), (config.Jy, PAULI_Y), (config.Jz, PAULI_Z)):
            if J:
                H += J * site_operator([(i, pauli), (j, pauli)], config.L)
    for i, h_i in enumerate(config.fields):
        if h_i:
            H += h_i * site_operator([(i, PAULI_Z)], config.L)
    return H


def z_values(L: int) -> np.ndarray:
    """(2^L, L) table of Z eigenvalues +-1 per basis index and site."""
    indices = np.arange(2**L)[:, None]
    bits = (indices >> np.arange(L)[None, :]) & 1
    return 1 - 2 * bits


def build_sparse_hamiltonian(config: SpinChainConfig) -> scipy.sparse.csr_matrix:
    """
    Hamiltonian as a sparse matrix assembled from bit operations.

    Used as the matrix-free applier of the Taylor propagator; agrees with
    build_hamiltonian entry by entry.
    """
    N = config.dimension
    index = np.arange(N)
    z = z_values(config.L)
    diagonal = np.zeros(N)
    rows, cols, data = [index], [index], [diagonal.astype(complex)]
    for i, j in config.bonds():
        diagonal += config.Jz * z[:, i] * z[:, j]
        mask = (1 << i) | (1 << j)
        flipped = index ^ mask
        if config.Jx:
            rows.append(index)
            cols.append(flipped)
            data.append(np.full(N, config.Jx, dtype=complex))
        if config.Jy:
            # <k|YY|k^mask> = -1 when bits i and j of k agree, +1 otherwise
            rows.append(index)
            cols.append(flipped)
            data.append(config.Jy * -(z[:, i] * z[:, j]).astype(complex))
    diagonal += z @ np.asarray(config.fields)
    data[0] = diagonal.astype(complex)
    return scipy.sparse.csr_matrix(
        (np.concatenate(data), (np.concatenate(rows), np.concatenate(cols))), shape=(N, N)
    )


def is_hermitian(H: np.ndarray, atol: float = HERMITIAN_ATOL) -> bool:
    return H.shape[0] == H.shape[1] and np.allclose(H, H.conj().T, rtol=0, atol=atol)


def exact_propagator(H: np.ndarray, t: float) -> np.ndarray:
    """
    U = exp(+iHt) by Hermitian eigendecomposition.

    Raises:
        ValueError: If H is not Hermitian (tolerance 1e-12)
    """
    H = np.asarray(H)
    if not is_hermitian(H):
        raise ValueError("exact_propagator needs a Hermitian matrix")
    eigenvalues, vectors = scipy.linalg.eigh(H)
    return (vectors * np.exp(1j * eigenvalues * t)) @ vectors.conj().T
