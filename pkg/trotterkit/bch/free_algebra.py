#!/usr/bin/env python3
"""
free_algebra.py - Truncated Free Associative Algebra on Two Generators

Elements are noncommutative polynomials in A and B whose words longer than the
truncation degree D are discarded. This is all the machinery needed to expand a
product of exponentials exp(a_1 A) exp(b_1 B) ... and take its logarithm: the
truncated algebra is exact for every degree up to D.

Storage is one dense numpy array per degree. Level k holds the 2^k coefficients
of the words of length k, indexed by reading the word as a binary number with
A = 0, B = 1 and the first letter most significant (AB -> 1, BA -> 2). Concatenation
of a word of length i with one of length j is then np.outer(x_i, y_j).ravel().

PYTHON API
==========

    from trotterkit.bch.free_algebra import generator, nc_exp, nc_log, commutator

    A = generator("A", 3)
    B = generator("B", 3)
    z = nc_log(nc_exp(A) * nc_exp(B))
    z.terms                                   # {'A': 1, 'B': 1, 'AB': 0.5, 'BA': -0.5, ...}
    z.homogeneous(2)                          # array([0, 0.5, -0.5, 0])
"""

import numbers
from typing import Dict, List, Optional, Sequence, Union

import numpy as np

# Coefficients at or below this modulus are treated as exact zeros in `terms`.
PRUNE_THRESHOLD = 1e-300

LETTERS = "AB"

Scalar = Union[int, float, complex]


def word_index(word: str) -> int:
    """Position of a word inside its degree level (A=0, B=1, first letter most significant)."""
    index = 0
    for letter in word:
        if letter not in LETTERS:
            raise ValueError(f"Invalid letter {letter!r} in word {word!r} (alphabet is A, B)")
        index = 2 * index + LETTERS.index(letter)
    return index


def index_word(index: int, degree: int) -> str:
    """Inverse of word_index for a word of the given length."""
    return "".join(LETTERS[(index >> (degree - 1 - k)) & 1] for k in range(degree))


class FreeAlgebraElement:
    """
    Noncommutative polynomial in A, B truncated at degree `max_degree`.

    Supports +, -, unary -, scalar * element and element * element (the
    concatenation product, identical to nc_mul).
    """

    __slots__ = ("max_degree", "levels")

    def __init__(self, levels: Sequence[np.ndarray], max_degree: int):
        if max_degree < 0:
            raise ValueError(f"Truncation degree must be non-negative, got {max_degree}")
        if len(levels) != max_degree + 1:
            raise ValueError(f"Expected {max_degree + 1} degree levels, got {len(levels)}")
        self.max_degree = max_degree
        self.levels: List[np.ndarray] = []
        for k, level in enumerate(levels):
            arr = np.asarray(level, dtype=complex).reshape(-1)
            if arr.shape[0] != 2**k:
                raise ValueError(f"Degree {k} level must have {2 ** k} entries, got {arr.shape[0]}")
            self.levels.append(arr)

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, max_degree: int) -> "FreeAlgebraElement":
        return cls([np.zeros(2**k, dtype=complex) for k in range(max_degree + 1)], max_degree)

    @classmethod
    def scalar(cls, value: Scalar, max_degree: int) -> "FreeAlgebraElement":
        element = cls.zero(max_degree)
        element.levels[0][0] = value
        return element

    @classmethod
    def from_terms(cls, terms: Dict[str, Scalar], max_degree: int) -> "FreeAlgebraElement":
        """Build an element from {word: coefficient}; the empty word is the constant."""
        element = cls.zero(max_degree)
        for word, coeff in terms.items():
            if len(word) > max_degree:
                raise ValueError(f"Word {word!r} exceeds truncation degree {max_degree}")
            element.levels[len(word)][word_index(word)] += coeff
        return element

    # -- views ------------------------------------------------------------

    @property
    def constant(self) -> complex:
        return complex(self.levels[0][0])

    @property
    def terms(self) -> Dict[str, complex]:
        """Non-zero coefficients keyed by word, shortest words first."""
        result = {}
        for k, level in enumerate(self.levels):
            for index in np.flatnonzero(np.abs(level) > PRUNE_THRESHOLD):
                result[index_word(int(index), k)] = complex(level[index])
        return result

    def homogeneous(self, degree: int) -> np.ndarray:
        """Copy of the degree-`degree` coefficient vector (length 2^degree)."""
        if not 0 <= degree <= self.max_degree:
            raise ValueError(f"Degree {degree} outside 0..{self.max_degree}")
        return self.levels[degree].copy()

    def max_abs(self, degree: int) -> float:
        """Largest coefficient modulus among words of the given length."""
        return float(np.max(np.abs(self.levels[degree])))

    def coefficient(self, word: str) -> complex:
        if len(word) > self.max_degree:
            return 0j
        return complex(self.levels[len(word)][word_index(word)])

    # -- arithmetic -------------------------------------------------------

    def _check_compatible(self, other: "FreeAlgebraElement"):
        if other.max_degree != self.max_degree:
            raise ValueError(
                f"Truncation degree mismatch: {self.max_degree} vs {other.max_degree}"
            )

    def __add__(self, other: "FreeAlgebraElement") -> "FreeAlgebraElement":
        if not isinstance(other, FreeAlgebraElement):
            return NotImplemented
        self._check_compatible(other)
        return FreeAlgebraElement(
            [x + y for x, y in zip(self.levels, other.levels)], self.max_degree
        )

    def __sub__(self, other: "FreeAlgebraElement") -> "FreeAlgebraElement":
        if not isinstance(other, FreeAlgebraElement):
            return NotImplemented
        self._check_compatible(other)
        return FreeAlgebraElement(
            [x - y for x, y in zip(self.levels, other.levels)], self.max_degree
        )

    def __neg__(self) -> "FreeAlgebraElement":
        return FreeAlgebraElement([-x for x in self.levels], self.max_degree)

    def __mul__(self, other):
        if isinstance(other, FreeAlgebraElement):
            return nc_mul(self, other)
        if isinstance(other, numbers.Number):
            return FreeAlgebraElement([x * other for x in self.levels], self.max_degree)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, numbers.Number):
            return FreeAlgebraElement([other * x for x in self.levels], self.max_degree)
        return NotImplemented

    def __repr__(self):
        body = " + ".join(f"({c:.6g}){w or '1'}" for w, c in self.terms.items()) or "0"
        return f"FreeAlgebraElement[D={self.max_degree}]({body})"


def generator(letter: str, max_degree: int, coeff: Scalar = 1.0) -> FreeAlgebraElement:
    """coeff * A or coeff * B."""
    if letter not in LETTERS:
        raise ValueError(f"Generator must be 'A' or 'B', got {letter!r}")
    element = FreeAlgebraElement.zero(max_degree)
    if max_degree >= 1:
        element.levels[1][LETTERS.index(letter)] = coeff
    return element


def nc_mul(x: FreeAlgebraElement, y: FreeAlgebraElement) -> FreeAlgebraElement:
    """
    Concatenation product, dropping words longer than the truncation degree.

    Raises:
        ValueError: If the truncation degrees differ
    """
    x._check_compatible(y)
    D = x.max_degree
    levels = []
    for n in range(D + 1):
        level = np.zeros(2**n, dtype=complex)
        for i in range(n + 1):
            xi, yj = x.levels[i], y.levels[n - i]
            if xi.any() and yj.any():
                level += np.outer(xi, yj).ravel()
        levels.append(level)
    return FreeAlgebraElement(levels, D)


def nc_exp(x: FreeAlgebraElement) -> FreeAlgebraElement:
    """
    Truncated exponential sum_{k<=D} x^k / k!.

    Evaluated Horner style, exp(x) = 1 + x(1 + x/2(1 + x/3(...))).

    Raises:
        ValueError: If x has a non-zero constant term
    """
    if x.constant != 0:
        raise ValueError(f"nc_exp needs a zero constant term, got {x.constant}")
    one = FreeAlgebraElement.scalar(1.0, x.max_degree)
    result = one
    for k in range(x.max_degree, 0, -1):
        result = one + nc_mul(x, result) * (1.0 / k)
    return result


def nc_log(p: FreeAlgebraElement, tolerance: float = 1e-14) -> FreeAlgebraElement:
    """
    Truncated logarithm sum_{k<=D} (-1)^{k+1} (p - 1)^k / k.

    Evaluated Horner style, log(1 + y) = y(1 - y(1/2 - y(1/3 - ...))).

    Raises:
        ValueError: If the constant term of p differs from 1 by more than `tolerance`
    """
    if abs(p.constant - 1) > tolerance:
        raise ValueError(f"nc_log needs a constant term of 1, got {p.constant}")
    D = p.max_degree
    y = p - FreeAlgebraElement.scalar(p.constant, D)
    inner = FreeAlgebraElement.zero(D)
    for k in range(D, 0, -1):
        sign_term = FreeAlgebraElement.scalar(1.0 / k, D)
        inner = sign_term - nc_mul(y, inner)
    return nc_mul(y, inner)


def exp_generator(letter: str, coeff: Scalar, max_degree: int) -> FreeAlgebraElement:
    """
    exp(coeff * letter) in closed form: level k holds coeff^k / k! on the single word letter^k.
    """
    if letter not in LETTERS:
        raise ValueError(f"Generator must be 'A' or 'B', got {letter!r}")
    element = FreeAlgebraElement.zero(max_degree)
    term = complex(1.0)
    for k in range(max_degree + 1):
        # A^k is word 0, B^k is word 2^k - 1
        element.levels[k][0 if letter == "A" else 2**k - 1] = term
        term = term * coeff / (k + 1)
    return element


def commutator(x: FreeAlgebraElement, y: FreeAlgebraElement) -> FreeAlgebraElement:
    """[x, y] = xy - yx."""
    return nc_mul(x, y) - nc_mul(y, x)


def nested_commutator(
    expression: Union[str, tuple], max_degree: Optional[int] = None
) -> FreeAlgebraElement:
    """
    Expand a nested bracket into word space.

    `expression` is a letter or a pair (left, right) of expressions, so
    ("A", ("A", "B")) is [A, [A, B]]. The default truncation degree is the
    bracket length, which keeps every word.
    """
    if max_degree is None:
        max_degree = bracket_degree(expression)
    if isinstance(expression, str):
        return generator(expression, max_degree)
    left, right = expression
    return commutator(
        nested_commutator(left, max_degree), nested_commutator(right, max_degree)
    )


def bracket_degree(expression: Union[str, tuple]) -> int:
    if isinstance(expression, str):
        return 1
    left, right = expression
    return bracket_degree(left) + bracket_degree(right)


def format_bracket(expression: Union[str, tuple]) -> str:
    """('A', ('A', 'B')) -> '[A,[A,B]]'."""
    if isinstance(expression, str):
        return expression
    left, right = expression
    return f"[{format_bracket(left)},{format_bracket(right)}]"
