"""Alternating, decaying coefficient sequences and their partial sums.

Every encoder in this package is driven by a sequence ``a_n`` whose terms
alternate in sign while shrinking in magnitude, so the running sum keeps
crossing zero and settles toward it without reaching it at any finite n.
The distance of a partial sum from zero is what encodes an integer, so the
sequences here come with a certified bound on that distance.

Summation is plain left-to-right double precision accumulation.  That is a
deliberate choice: identical inputs must produce bit-identical sums across
every code path (tables, closed forms, file round trips), which compensated
or pairwise schemes would break.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "Canonical",
    "Generalized",
    "ExpPoly",
    "Trig",
    "CoefficientFamily",
    "PartialSum",
    "coefficient",
    "partial_sum",
    "partial_sums",
    "tail_bound",
]


def _check_term_index(n: int) -> int:
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)):
        raise TypeError(f"term index must be an integer, got {n!r}")
    if n < 1:
        raise ValueError(f"term index must be >= 1, got {n}")
    return int(n)


def _parity_signs(ns: np.ndarray) -> np.ndarray:
    return np.where(ns % 2 == 0, 1.0, -1.0)


@dataclass(frozen=True)
class Canonical:
    """a_n = ((1/2)^n + (-1)^n) / n.

    A geometric part that dies out fast plus an alternating harmonic part
    that supplies the slow sign-flipping drift.  The full series sums to
    zero, so partial sums measure how much of the cancellation is still
    outstanding.
    """

    def coefficient(self, n: int) -> float:
        # scalar access funnels through the array path: libm and numpy
        # transcendentals can disagree by an ulp, and two paths would leak
        # that difference into the bit-exactness contract
        n = _check_term_index(n)
        return float(self.coefficients(np.array([n]))[0])

    def coefficients(self, ns: np.ndarray) -> np.ndarray:
        ns = np.asarray(ns)
        return (np.power(0.5, ns) + _parity_signs(ns)) / ns


@dataclass(frozen=True)
class Generalized:
    """a_n = (alpha^n + (-1)^n * beta) / n^gamma.

    Args:
        alpha: geometric base, must satisfy |alpha| < 1 so that part decays.
        beta: weight of the alternating part.
        gamma: polynomial decay exponent, must be >= 1.

    ``Generalized(0.5, 1.0, 1.0)`` reproduces :class:`Canonical` exactly,
    including at the bit level.
    """

    alpha: float
    beta: float
    gamma: float

    def __post_init__(self) -> None:
        for name in ("alpha", "beta", "gamma"):
            value = getattr(self, name)
            if not math.isfinite(value):
                raise ValueError(f"{name} must be finite, got {value!r}")
        if abs(self.alpha) >= 1.0:
            raise ValueError(
                f"|alpha| must be < 1 for the geometric part to decay, got {self.alpha!r}"
            )
        if self.gamma < 1.0:
            raise ValueError(f"gamma must be >= 1, got {self.gamma!r}")

    def coefficient(self, n: int) -> float:
        n = _check_term_index(n)
        return float(self.coefficients(np.array([n]))[0])

    def coefficients(self, ns: np.ndarray) -> np.ndarray:
        ns = np.asarray(ns)
        numer = np.power(self.alpha, ns) + _parity_signs(ns) * self.beta
        return numer / np.power(ns.astype(float), self.gamma)


@dataclass(frozen=True)
class ExpPoly:
    """a_n = (e^(-n) + (-1)^n) / n^p with p >= 1."""

    p: float = 1.0

    def __post_init__(self) -> None:
        if not math.isfinite(self.p) or self.p < 1.0:
            raise ValueError(f"p must be a finite value >= 1, got {self.p!r}")

    def coefficient(self, n: int) -> float:
        n = _check_term_index(n)
        return float(self.coefficients(np.array([n]))[0])

    def coefficients(self, ns: np.ndarray) -> np.ndarray:
        ns = np.asarray(ns)
        numer = np.exp(-ns.astype(float)) + _parity_signs(ns)
        return numer / np.power(ns.astype(float), self.p)


@dataclass(frozen=True)
class Trig:
    """a_n = cos(pi * n) * e^(-n) / n.

    The cosine at integer multiples of pi is exactly +-1, so it is evaluated
    as the parity sign rather than through a floating point cosine, which
    would only be approximately +-1.
    """

    def coefficient(self, n: int) -> float:
        n = _check_term_index(n)
        return float(self.coefficients(np.array([n]))[0])

    def coefficients(self, ns: np.ndarray) -> np.ndarray:
        ns = np.asarray(ns)
        return _parity_signs(ns) * np.exp(-ns.astype(float)) / ns


CoefficientFamily = Canonical | Generalized | ExpPoly | Trig


@dataclass(frozen=True)
class PartialSum:
    """Running sum of the first ``n`` coefficients."""

    n: int
    value: float


def coefficient(family: CoefficientFamily, n: int) -> float:
    """Return the n-th coefficient of ``family`` (n >= 1)."""
    return family.coefficient(n)


def partial_sums(family: CoefficientFamily, n_max: int) -> np.ndarray:
    """Running sums S(1), S(2), ..., S(n_max) as one array.

    Computed with a sequential accumulation, so each entry is bit-identical
    to summing the coefficients one by one in index order.
    """
    n_max = _check_term_index(n_max)
    ns = np.arange(1, n_max + 1)
    return np.cumsum(family.coefficients(ns))


def partial_sum(family: CoefficientFamily, n: int) -> PartialSum:
    """Sum of the first ``n`` coefficients, left to right.

    Args:
        family: coefficient family to sum.
        n: number of leading terms, must be >= 0.  ``n = 0`` is the empty
            sum and yields exactly 0.0.

    Returns:
        A :class:`PartialSum` record holding ``n`` and the accumulated value.

    Raises:
        ValueError: if ``n`` is negative.
        TypeError: if ``n`` is not an integer.
    """
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)):
        raise TypeError(f"term count must be an integer, got {n!r}")
    if n < 0:
        raise ValueError(f"term count must be >= 0, got {n}")
    if n == 0:
        return PartialSum(0, 0.0)
    return PartialSum(int(n), float(partial_sums(family, int(n))[-1]))


def tail_bound(family: CoefficientFamily, n: int) -> float:
    """Provable upper bound on |sum of all coefficients beyond index n|.

    Because the full series sums to zero, this is also a bound on |S(n)|.
    The bound splits the tail into its two parts: the alternating part is
    bounded by the first omitted term, and the geometric part by the full
    geometric tail with the polynomial decay dropped:

        |tail| <= |beta| / (n + 1)^gamma + |alpha|^(n + 1) / (1 - |alpha|)

    For :class:`Canonical` this reduces to 1/(n + 1) + 2^(-n).  Note the
    combined sequence is *not* eventually geometric, the harmonic part
    dominates, so no geometric envelope is available.

    Args:
        family: a :class:`Canonical` or :class:`Generalized` instance.
        n: number of leading terms already summed, must be >= 1.

    Returns:
        The bound as a float.

    Raises:
        NotImplementedError: for families without a certified bound.
        ValueError: if ``n`` < 1.
    """
    n = _check_term_index(n)
    if isinstance(family, Canonical):
        alpha, beta, gamma = 0.5, 1.0, 1.0
    elif isinstance(family, Generalized):
        alpha, beta, gamma = family.alpha, family.beta, family.gamma
    else:
        raise NotImplementedError(
            f"no certified tail bound for {type(family).__name__}"
        )
    alternating_part = abs(beta) / (n + 1) ** gamma
    geometric_part = abs(alpha) ** (n + 1) / (1.0 - abs(alpha))
    return alternating_part + geometric_part
