#!/usr/bin/env python3
"""
scheme_catalog.py - Symmetric Splitting Schemes and Their Multi-Stage Form
==========================================================================

A splitting scheme approximates exp((A + B)h) by the product

    exp(A a_1 h) exp(B b_1 h) exp(A a_2 h) ... exp(B b_q h) exp(A a_{q+1} h)

where q is the number of cycles. Every scheme registered here is symmetric
(palindromic): a_{q+2-i} = a_i and b_{q+1-i} = b_i, so only the first half of
each coefficient list has to be written down.

The same coefficients drive a splitting into any number of stages A_1 ... A_L
once they are converted to forward/backward ramp coefficients (c_i, d_i):

    c_1 = a_1          d_1 = b_1 - c_1
    c_i = a_i - d_{i-1}  d_i = b_i - c_i

Each cycle then runs a forward ramp A_1 ... A_L with c_i followed by a
backward ramp A_L ... A_1 with d_i, and the order of the scheme is unchanged.

PYTHON API
==========

    from trotterkit.schemes import get_scheme, to_stage_coefficients, suzuki_compose

    verlet = get_scheme("verlet")
    stage = to_stage_coefficients(verlet)        # c=[0.5], d=[0.5]

    forest_ruth = suzuki_compose(verlet, p=1)    # order 4, q=3
    suzuki4 = suzuki_compose(verlet, p=2)        # order 4, q=5

    for scheme in list_schemes(order=4, unitary=True):
        print(scheme.name, scheme.cycles)

CATALOG
=======

    verlet               n=2  q=1
    omelyan-2            n=2  q=2
    forest-ruth          n=4  q=3
    omelyan-fr-type      n=4  q=4
    omelyan-small-a      n=4  q=4
    non-unitary-q4       n=4  q=4   complex
    suzuki-4             n=4  q=5
    optimised-4          n=4  q=5
    non-unitary-q5       n=4  q=5   complex
    uniform-non-unitary  n=4  q=5   complex
    blanes-moan-4        n=4  q=6
    blanes-moan-6        n=6  q=10
    suzuki-6             n=6  q=25  (suzuki-4 composed with p=2)
    bm6-suzuki-8         n=8  q=50  (blanes-moan-6 composed with p=2)
    suzuki-8             n=8  q=125 (suzuki-6 composed with p=2)
"""

import dataclasses
import logging
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

logger = logging.getLogger(__name__)

# Accepted deviation of sum(a) and sum(b) from 1 when a scheme is constructed.
SUM_TOLERANCE = 1e-14

Coefficients = Tuple[complex, ...]


class UnknownSchemeError(ValueError):
    """Raised when a scheme identifier is not registered in the catalog."""


@dataclasses.dataclass(frozen=True)
class SplittingScheme:
    """
    Symmetric 2-stage splitting scheme.

    Attributes:
        name: Lowercase-hyphenated identifier
        order: Even positive order n (single-step error is O(h^{n+1}))
        cycles: Number of cycles q
        a: q+1 coefficients of the A-exponentials (fractions of h)
        b: q coefficients of the B-exponentials (fractions of h)
        published_eff: Efficiency quoted in the literature, None where none is quoted
    """

    name: str
    order: int
    cycles: int
    a: Coefficients
    b: Coefficients
    published_eff: Optional[float] = None

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(complex(x) for x in self.a))
        object.__setattr__(self, "b", tuple(complex(x) for x in self.b))
        self.validate()

    def validate(self):
        """
        Check the scheme invariants.

        Raises:
            ValueError: Naming the violated invariant (order, cycle count, list length,
                        coefficient sum or symmetry)
        """
        if self.order < 2 or self.order % 2:
            raise ValueError(
                f"Scheme {self.name!r}: order must be an even positive integer, got {self.order}"
            )
        if self.cycles < 1:
            raise ValueError(f"Scheme {self.name!r}: cycles must be positive, got {self.cycles}")
        if len(self.a) != self.cycles + 1:
            raise ValueError(
                f"Scheme {self.name!r}: expected {self.cycles + 1} a-coefficients, "
                f"got {len(self.a)}"
            )
        if len(self.b) != self.cycles:
            raise ValueError(
                f"Scheme {self.name!r}: expected {self.cycles} b-coefficients, got {len(self.b)}"
            )
        for label, values in (("a", self.a), ("b", self.b)):
            deviation = abs(sum(values) - 1)
            if deviation > SUM_TOLERANCE:
                raise ValueError(
                    f"Scheme {self.name!r}: sum of {label}-coefficients deviates from 1 "
                    f"by {deviation:.3e}"
                )
            if values != values[::-1]:
                raise ValueError(f"Scheme {self.name!r}: {label}-coefficients are not symmetric")

    def unitary(self) -> bool:
        """True iff every coefficient is real (imaginary part exactly zero)."""
        return all(x.imag == 0 for x in self.a + self.b)


@dataclasses.dataclass(frozen=True)
class StageCoefficients:
    """Forward (c) and backward (d) ramp coefficients of a scheme, q entries each."""

    c: Coefficients
    d: Coefficients

    @property
    def cycles(self) -> int:
        return len(self.c)


def symmetric_complete(
    half_a: Sequence[complex], half_b: Sequence[complex], q: int
) -> Tuple[Coefficients, Coefficients]:
    """
    Mirror the first half of a symmetric scheme into its full coefficient lists.

    Args:
        half_a: First ceil((q+1)/2) a-coefficients
        half_b: First ceil(q/2) b-coefficients
        q: Number of cycles

    Returns:
        Tuple (a, b) of lengths q+1 and q; middle entries are not duplicated

    Raises:
        ValueError: If q < 1 or the half lists have the wrong length for q

    Example:
        >>> symmetric_complete([0.5], [1.0], 1)
        (((0.5+0j), (0.5+0j)), ((1+0j),))
    """
    if q < 1:
        raise ValueError(f"Number of cycles must be positive, got {q}")
    n_a = (q + 2) // 2
    n_b = (q + 1) // 2
    if len(half_a) != n_a:
        raise ValueError(f"q={q} needs {n_a} leading a-coefficients, got {len(half_a)}")
    if len(half_b) != n_b:
        raise ValueError(f"q={q} needs {n_b} leading b-coefficients, got {len(half_b)}")

    half_a = [complex(x) for x in half_a]
    half_b = [complex(x) for x in half_b]
    # len(a) = q+1: the middle a is shared when q is even
    a = half_a + half_a[: (q + 1) - n_a][::-1]
    b = half_b + half_b[: q - n_b][::-1]
    return tuple(a), tuple(b)


def to_stage_coefficients(scheme: SplittingScheme) -> StageCoefficients:
    """
    Convert a 2-stage scheme (a, b) to forward/backward ramp coefficients (c, d).

    Args:
        scheme: A valid splitting scheme

    Returns:
        StageCoefficients satisfying c_1 = a_1, c_i + d_{i-1} = a_i, c_i + d_i = b_i

    Example:
        >>> to_stage_coefficients(get_scheme("verlet"))
        StageCoefficients(c=((0.5+0j),), d=((0.5+0j),))
    """
    c: List[complex] = []
    d: List[complex] = []
    previous_d = 0j
    for a_i, b_i in zip(scheme.a, scheme.b):
        c_i = a_i - previous_d
        d_i = b_i - c_i
        c.append(c_i)
        d.append(d_i)
        previous_d = d_i
    return StageCoefficients(tuple(c), tuple(d))


def reconstruct_two_stage(stage: StageCoefficients) -> Tuple[Coefficients, Coefficients]:
    """
    Rebuild (a, b) from ramp coefficients through the telescope identities.

    a_1 = c_1, a_i = c_i + d_{i-1}, a_{q+1} = d_q and b_i = c_i + d_i.
    """
    a = [stage.c[0]]
    for i in range(1, stage.cycles):
        a.append(stage.c[i] + stage.d[i - 1])
    a.append(stage.d[-1])
    b = [c_i + d_i for c_i, d_i in zip(stage.c, stage.d)]
    return tuple(a), tuple(b)


def suzuki_compose(
    scheme: SplittingScheme, p: int = 2, name: Optional[str] = None
) -> SplittingScheme:
    """
    Raise the order of a symmetric scheme by two.

    Builds S(s h)^p S((1 - 2ps) h) S(s h)^p with s = 1 / (2p - (2p)^(1/(n+1))).
    The last a-coefficient of each copy is merged with the first a-coefficient of the
    next copy, so the result has (2p+1) q cycles.

    Args:
        scheme: Symmetric scheme of order n
        p: Number of outer copies on each side (p=2 is the recommended choice)
        name: Identifier of the result (default: "<name>+suzuki-p<p>")

    Returns:
        Symmetric scheme of order n+2

    Raises:
        ValueError: If p < 1

    Example:
        >>> fr = suzuki_compose(get_scheme("verlet"), p=1)
        >>> fr.cycles, round(fr.b[0].real, 12)
        (3, 1.35120719196)
    """
    if p < 1:
        raise ValueError(f"Composition power p must be a positive integer, got {p}")

    s = 1.0 / (2 * p - (2 * p) ** (1.0 / (scheme.order + 1)))
    weights = [s] * p + [1.0 - 2 * p * s] + [s] * p

    a: List[complex] = []
    b: List[complex] = []
    for w in weights:
        scaled_a = [w * x for x in scheme.a]
        if a:
            a[-1] = a[-1] + scaled_a[0]
            a.extend(scaled_a[1:])
        else:
            a.extend(scaled_a)
        b.extend(w * x for x in scheme.b)

    return SplittingScheme(
        name=name or f"{scheme.name}+suzuki-p{p}",
        order=scheme.order + 2,
        cycles=len(b),
        a=tuple(a),
        b=tuple(b),
    )


def recursive_compose(
    scheme: SplittingScheme, levels: int, p: int = 2, name: Optional[str] = None
) -> SplittingScheme:
    """
    Apply suzuki_compose `levels` times; the order grows by 2 per level.

    With p=1 from Verlet the cycle count is 3^(n/2 - 1), the smallest reachable by
    this construction (and a poor performer); p=2 multiplies q by 5 per level.
    """
    if levels < 1:
        raise ValueError(f"levels must be a positive integer, got {levels}")
    result = scheme
    for _ in range(levels):
        result = suzuki_compose(result, p)
    if name is not None:
        result = dataclasses.replace(result, name=name)
    return result


def conjugate_alternate(scheme: SplittingScheme, step_index: int) -> SplittingScheme:
    """
    Coefficients to use in time step `step_index` of a symmetric-conjugate run.

    Odd steps use the complex conjugate of every coefficient, even steps the scheme
    itself. Real schemes are returned unchanged in both cases.
    """
    if step_index % 2 == 0 or scheme.unitary():
        return scheme
    return dataclasses.replace(
        scheme,
        a=tuple(x.conjugate() for x in scheme.a),
        b=tuple(x.conjugate() for x in scheme.b),
    )


def stage_cost_factor(num_stages: int) -> Fraction:
    """
    Relative cost (s-1)/s of one cycle split into s stages.

    Adjacent ramps share their boundary exponential, so only s-1 of the s stages per
    ramp cost a separate application.

    Raises:
        ValueError: If num_stages < 2
    """
    if num_stages < 2:
        raise ValueError(f"A splitting needs at least 2 stages, got {num_stages}")
    return Fraction(num_stages - 1, num_stages)


# ---------------------------------------------------------------------------
# Built-in catalog
# ---------------------------------------------------------------------------


def _from_half(
    name: str,
    order: int,
    q: int,
    half_a: Sequence[complex],
    half_b: Sequence[complex],
    published_eff: Optional[float] = None,
) -> SplittingScheme:
    a, b = symmetric_complete(half_a, half_b, q)
    return SplittingScheme(name, order, q, a, b, published_eff)


def _verlet() -> SplittingScheme:
    return _from_half("verlet", 2, 1, [0.5], [1.0], 10.7)


def _omelyan_2() -> SplittingScheme:
    a1 = 0.1931833275037836
    return _from_half("omelyan-2", 2, 2, [a1, 1 - 2 * a1], [0.5], 29.2)


def _forest_ruth() -> SplittingScheme:
    a1 = 0.6756035959798288
    b1 = 1.351207191959658
    return _from_half("forest-ruth", 4, 3, [a1, 0.5 - a1], [b1, 1 - 2 * b1], 0.315)


def _q4(name: str, a1: complex, a2: complex, b1: complex, eff: Optional[float]) -> SplittingScheme:
    return _from_half(name, 4, 4, [a1, a2, 1 - 2 * (a1 + a2)], [b1, 0.5 - b1], eff)


def _q5(
    name: str, a1: complex, a2: complex, b1: complex, b2: complex, eff: Optional[float]
) -> SplittingScheme:
    return _from_half(
        name, 4, 5, [a1, a2, 0.5 - (a1 + a2)], [b1, b2, 1 - 2 * (b1 + b2)], eff
    )


def _blanes_moan_4() -> SplittingScheme:
    a = [0.07920369643119569, 0.353172906049774, -0.0420650803577195]
    b = [0.209515106613362, -0.143851773179818]
    return _from_half("blanes-moan-4", 4, 6, a + [1 - 2 * sum(a)], b + [0.5 - sum(b)], 10.2)


def _blanes_moan_6() -> SplittingScheme:
    a = [
        0.0502627644003922,
        0.413514300428344,
        0.0450798897943977,
        -0.188054853819569,
        0.54196067845078,
    ]
    b = [0.148816447901042, -0.132385865767784, 0.067307604692185, 0.432666402578175]
    return _from_half("blanes-moan-6", 6, 10, a + [1 - 2 * sum(a)], b + [0.5 - sum(b)])


def _build_catalog() -> Dict[str, Callable[[], SplittingScheme]]:
    catalog: Dict[str, Callable[[], SplittingScheme]] = {
        "verlet": _verlet,
        "omelyan-2": _omelyan_2,
        "forest-ruth": _forest_ruth,
        "omelyan-fr-type": lambda: _q4(
            "omelyan-fr-type", 0.1720865590295143, -0.1616217622107222, 0.5915620307551568, 4.24
        ),
        "omelyan-small-a": lambda: _q4(
            "omelyan-small-a", 0.5316386245813512, -0.3086019704406066, -0.04375142191737413, None
        ),
        "non-unitary-q4": lambda: _q4(
            "non-unitary-q4",
            0.09957801119428374 + 0.02359386141367452j,
            0.2520542187700347 + 0.09826170579213035j,
            0.2596218597573501 + 0.08909472525370253j,
            29.9,
        ),
        "suzuki-4": lambda: _q5(
            "suzuki-4",
            0.2072453858971879,
            0.4144907717943757,
            0.4144907717943757,
            0.4144907717943757,
            1.10,
        ),
        "optimised-4": lambda: _q5(
            "optimised-4",
            0.09257547473195787,
            0.4627160310210738,
            0.2540996315529392,
            -0.1676517240119692,
            10.5,
        ),
        "non-unitary-q5": lambda: _q5(
            "non-unitary-q5",
            0.07613272445178274 - 0.03518797331257356j,
            0.2017183745725757 + 0.02597491015915232j,
            0.1658339349217486 - 0.07090293766092534j,
            0.2137425142256234 + 0.1386193640914034j,
            67.4,
        ),
        "uniform-non-unitary": lambda: _q5(
            "uniform-non-unitary",
            0.1 + 0.02523113193557069j,
            0.2 - 0.04082482904638631j,
            0.2 + 0.05046226387114138j,
            0.2 - 0.132111921963914j,
            6.38,
        ),
        "blanes-moan-4": _blanes_moan_4,
        "blanes-moan-6": _blanes_moan_6,
        "suzuki-6": lambda: suzuki_compose(get_scheme("suzuki-4"), 2, name="suzuki-6"),
        "bm6-suzuki-8": lambda: suzuki_compose(get_scheme("blanes-moan-6"), 2, name="bm6-suzuki-8"),
        "suzuki-8": lambda: suzuki_compose(get_scheme("suzuki-6"), 2, name="suzuki-8"),
    }
    return catalog


_CATALOG = _build_catalog()
_CACHE: Dict[str, SplittingScheme] = {}

SCHEME_NAMES: Tuple[str, ...] = tuple(_CATALOG)


def get_scheme(name: str) -> SplittingScheme:
    """
    Look up a catalog scheme by identifier.

    Args:
        name: One of SCHEME_NAMES

    Returns:
        The registered scheme with the published coefficients

    Raises:
        UnknownSchemeError: If the name is not registered (message lists the available names)
    """
    if name not in _CATALOG:
        raise UnknownSchemeError(
            f"Unknown scheme {name!r}. Available: {', '.join(SCHEME_NAMES)}"
        )
    if name not in _CACHE:
        _CACHE[name] = _CATALOG[name]()
        logger.debug("Registered scheme %s (q=%d)", name, _CACHE[name].cycles)
    return _CACHE[name]


def list_schemes(
    order: Optional[int] = None, unitary: Optional[bool] = None
) -> List[SplittingScheme]:
    """All catalog schemes in registration order, optionally filtered by order and unitarity."""
    schemes = [get_scheme(name) for name in SCHEME_NAMES]
    if order is not None:
        schemes = [s for s in schemes if s.order == order]
    if unitary is not None:
        schemes = [s for s in schemes if s.unitary() == unitary]
    return schemes
