#!/usr/bin/env python3
"""
error_terms.py - Leading Error Coefficients and Efficiency of Splitting Schemes

With h set to 1, the logarithm of a scheme's product of exponentials is

    log(S) = (A + B) + E,    E = E_1 + E_2 + E_3 + ...

where E_k collects the words of length k (the h^k error). For a symmetric scheme
all even parts vanish and the odd parts are Lie elements, written in the basis

    E_1 = (nu - 1) A + (sigma - 1) B
    E_3 = alpha [A,[A,B]] + beta [B,[A,B]]
    E_5 = gamma_1 [A,[A,[A,[A,B]]]] + gamma_2 [A,[A,[B,[A,B]]]] + gamma_3 [B,[A,[A,[A,B]]]]
        + gamma_4 [B,[B,[B,[A,B]]]] + gamma_5 [B,[B,[A,[A,B]]]] + gamma_6 [A,[B,[B,[A,B]]]]

Efficiencies:

    Eff_2 = 1 / (q^2 sqrt(|alpha|^2 + |beta|^2))
    Eff_4 = 1 / (q^4 sqrt(sum_j |gamma_j|^2))

PYTHON API
==========

    from trotterkit.bch.error_terms import efficiency, error_coefficients, certify_order

    efficiency(get_scheme("verlet"))            # 10.73...
    coeffs = error_coefficients(get_scheme("suzuki-4"))
    coeffs.gamma                                # 6 complex values

    cert = certify_order(get_scheme("blanes-moan-6"))
    cert.certified_order                        # 6
"""

import dataclasses
import logging
from functools import lru_cache
from typing import Dict, Optional, Tuple

import numpy as np

from ..schemes.scheme_catalog import SplittingScheme
from .free_algebra import (
    FreeAlgebraElement,
    exp_generator,
    format_bracket,
    generator,
    nc_log,
    nc_mul,
    nested_commutator,
)

logger = logging.getLogger(__name__)

DEFAULT_DEGREE = 7

# Normal-equation solutions above this residual are not in the commutator span.
RESIDUAL_LIMIT = 1e-8
GRAM_DETERMINANT_MIN = 1e-10

# Order certification thresholds
VANISH_TOLERANCE = 1e-10
LEADING_TERM_MIN = 1e-6

AB = ("A", "B")

COMMUTATOR_BASIS = {
    1: ("A", "B"),
    3: (("A", AB), ("B", AB)),
    5: (
        ("A", ("A", ("A", AB))),
        ("A", ("A", ("B", AB))),
        ("B", ("A", ("A", AB))),
        ("B", ("B", ("B", AB))),
        ("B", ("B", ("A", AB))),
        ("A", ("B", ("B", AB))),
    ),
}


class NumericalFailure(RuntimeError):
    """A numerical consistency check failed (projection residual, singular basis)."""


@dataclasses.dataclass(frozen=True)
class Projection:
    """Basis coefficients of one homogeneous error part and the least-squares residual."""

    degree: int
    coefficients: Tuple[complex, ...]
    residual: float


@dataclasses.dataclass(frozen=True)
class ErrorCoefficients:
    """Leading error coefficients of a scheme in the commutator basis."""

    scheme: str
    nu: complex
    sigma: complex
    alpha: complex
    beta: complex
    gamma: Tuple[complex, ...]
    residuals: Dict[int, float]

    def rows(self):
        """(label, value) pairs in report order."""
        yield "nu-1", self.nu - 1
        yield "sigma-1", self.sigma - 1
        yield "alpha", self.alpha
        yield "beta", self.beta
        for j, g in enumerate(self.gamma, start=1):
            yield f"gamma_{j}", g


@dataclasses.dataclass(frozen=True)
class OrderCertificate:
    """
    Outcome of checking a scheme's homogeneous error parts against its claimed order.

    Attributes:
        scheme: Scheme identifier
        claimed_order: Order stored in the scheme
        degree: Truncation degree the check ran at
        max_abs: Largest coefficient modulus of each error part, degrees 1..degree
        certified_order: Largest k <= degree with every part of degree <= k vanishing
        leading_term: Largest coefficient of the degree-(claimed+1) part, None beyond degree
    """

    scheme: str
    claimed_order: int
    degree: int
    max_abs: Tuple[float, ...]
    certified_order: int
    leading_term: Optional[float]

    @property
    def verified(self) -> bool:
        if self.claimed_order >= self.degree:
            # Only degrees up to the truncation can be checked
            return self.certified_order == self.degree
        return (
            self.certified_order == self.claimed_order
            and self.leading_term is not None
            and self.leading_term >= LEADING_TERM_MIN
        )


def scheme_error_element(
    scheme: SplittingScheme, degree: int = DEFAULT_DEGREE, allow_truncated: bool = False
) -> FreeAlgebraElement:
    """
    log(prod_i exp(a_i A) exp(b_i B) * exp(a_{q+1} A)) - (A + B) with h = 1.

    Args:
        scheme: Splitting scheme
        degree: Truncation degree D
        allow_truncated: Skip the D >= order + 1 requirement (only the parts up to D
                         are computed, which is exact for those degrees)

    Raises:
        ValueError: If D < order + 1 and allow_truncated is not set
    """
    if not allow_truncated and degree < scheme.order + 1:
        raise ValueError(
            f"Truncation degree {degree} too small for order-{scheme.order} scheme "
            f"{scheme.name!r} (need at least {scheme.order + 1})"
        )
    product = FreeAlgebraElement.scalar(1.0, degree)
    for a_i, b_i in zip(scheme.a, scheme.b):
        product = nc_mul(product, exp_generator("A", a_i, degree))
        product = nc_mul(product, exp_generator("B", b_i, degree))
    product = nc_mul(product, exp_generator("A", scheme.a[-1], degree))

    logger.debug("Expanded %s (q=%d) to degree %d", scheme.name, scheme.cycles, degree)
    return nc_log(product) - generator("A", degree) - generator("B", degree)


@lru_cache(maxsize=None)
def _basis_matrix(degree: int) -> np.ndarray:
    """Columns are the basis commutators of `degree` expanded in word space."""
    if degree not in COMMUTATOR_BASIS:
        raise ValueError(f"Projection is defined for degrees 1, 3 and 5, got {degree}")
    columns = [
        nested_commutator(expr, degree).homogeneous(degree) for expr in COMMUTATOR_BASIS[degree]
    ]
    matrix = np.column_stack(columns).real

    gram_det = float(np.linalg.det(matrix.T @ matrix))
    if gram_det <= GRAM_DETERMINANT_MIN:
        raise NumericalFailure(
            f"Degree-{degree} commutator basis is linearly dependent "
            f"(Gram determinant {gram_det:.3e})"
        )
    if gram_det < 1e3 * GRAM_DETERMINANT_MIN:
        logger.warning("Degree-%d Gram determinant %.3e is close to singular", degree, gram_det)
    logger.debug(
        "Degree-%d basis %s, Gram determinant %.6g",
        degree,
        ", ".join(format_bracket(e) for e in COMMUTATOR_BASIS[degree]),
        gram_det,
    )
    return matrix


def project_error(err: FreeAlgebraElement, degree: int) -> Projection:
    """
    Coordinates of the degree-`degree` part of err in the commutator basis.

    Solves the normal equations M^T M x = M^T v, where the columns of M are the
    basis commutators in word space and v is the homogeneous part of err.

    Returns:
        Projection with (nu-1, sigma-1), (alpha, beta) or (gamma_1..gamma_6)

    Raises:
        ValueError: For degrees other than 1, 3, 5 or beyond the truncation of err
        NumericalFailure: If the residual exceeds RESIDUAL_LIMIT
    """
    if degree > err.max_degree:
        raise ValueError(f"Degree {degree} exceeds truncation degree {err.max_degree}")
    matrix = _basis_matrix(degree)
    target = err.homogeneous(degree)
    solution = np.linalg.solve(matrix.T @ matrix, matrix.T @ target)
    residual = float(np.linalg.norm(matrix @ solution - target))
    if residual > RESIDUAL_LIMIT:
        raise NumericalFailure(
            f"Degree-{degree} error part is not in the commutator span (residual {residual:.3e})"
        )
    return Projection(degree, tuple(complex(x) for x in solution), residual)


def error_coefficients(scheme: SplittingScheme, degree: int = DEFAULT_DEGREE) -> ErrorCoefficients:
    """
    nu, sigma, alpha, beta and gamma_1..gamma_6 of a scheme.

    Any scheme order is accepted: the parts up to degree 5 are exact once D >= 5.
    """
    if degree < 5:
        raise ValueError(f"Error coefficients need truncation degree >= 5, got {degree}")
    err = scheme_error_element(scheme, degree, allow_truncated=True)
    first, third, fifth = (project_error(err, d) for d in (1, 3, 5))
    return ErrorCoefficients(
        scheme=scheme.name,
        nu=first.coefficients[0] + 1,
        sigma=first.coefficients[1] + 1,
        alpha=third.coefficients[0],
        beta=third.coefficients[1],
        gamma=fifth.coefficients,
        residuals={1: first.residual, 3: third.residual, 5: fifth.residual},
    )


def efficiency_from_coefficients(coeffs: ErrorCoefficients, order: int, cycles: int) -> float:
    if order == 2:
        norm = np.sqrt(abs(coeffs.alpha) ** 2 + abs(coeffs.beta) ** 2)
        return float(1.0 / (cycles**2 * norm))
    if order == 4:
        norm = np.sqrt(sum(abs(g) ** 2 for g in coeffs.gamma))
        return float(1.0 / (cycles**4 * norm))
    raise ValueError(f"Efficiency is only defined for order 2 and 4 schemes, got order {order}")


def efficiency(scheme: SplittingScheme, degree: int = DEFAULT_DEGREE) -> float:
    """
    Eff_2 for order-2 schemes, Eff_4 for order-4 schemes.

    Raises:
        ValueError: For order 6 and above, where no efficiency is defined
    """
    if scheme.order not in (2, 4):
        raise ValueError(
            f"Efficiency is only defined for order 2 and 4 schemes; "
            f"{scheme.name!r} has order {scheme.order}"
        )
    coeffs = error_coefficients(scheme, degree)
    return efficiency_from_coefficients(coeffs, scheme.order, scheme.cycles)


def certify_order(scheme: SplittingScheme, degree: int = DEFAULT_DEGREE) -> OrderCertificate:
    """
    Check which homogeneous error parts of a scheme vanish.

    Schemes whose order reaches the truncation degree are checked through D only.
    """
    err = scheme_error_element(scheme, degree, allow_truncated=True)
    max_abs = tuple(err.max_abs(d) for d in range(1, degree + 1))

    certified = 0
    for d, value in enumerate(max_abs, start=1):
        if value >= VANISH_TOLERANCE:
            break
        certified = d

    leading_degree = scheme.order + 1
    leading = max_abs[leading_degree - 1] if leading_degree <= degree else None
    certificate = OrderCertificate(
        scheme=scheme.name,
        claimed_order=scheme.order,
        degree=degree,
        max_abs=max_abs,
        certified_order=certified,
        leading_term=leading,
    )
    logger.debug(
        "%s: claimed order %d, certified %d at D=%d", scheme.name, scheme.order, certified, degree
    )
    return certificate
