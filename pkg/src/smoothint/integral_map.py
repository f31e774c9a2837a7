"""The integral map: total area under the bump train as a function of N.

Each bump integrates to (amplitude * delta * sqrt(2 pi)) regardless of where
it sits and of how bumps overlap, so the area under the whole train is the
scaled running coefficient sum

    I(N) = delta * sqrt(2 pi) * S(N)

in discrete mode, with the fractional and smooth modes replacing S(N) by
their weighted variants.  Because S(N) drifts toward zero while alternating,
I(N) encodes N as the depth of a near-cancellation, and the table type here
is the lookup structure every recovery strategy consumes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .bumps import Sigmoid
from .coefficients import CoefficientFamily, coefficient, partial_sum, partial_sums
from .encoder import EncoderConfig, Mode, _accumulate, _check_count, smooth_cutoff, term_weights

__all__ = [
    "IntegralTable",
    "integral_closed",
    "integral_quadrature",
    "build_table",
    "map_derivative_smooth",
    "area_scale",
]

# Quadrature domains must extend this many widths past the outermost bump
# centers; the mass cut off beyond 5 widths is under 3e-7 of one bump.
_DOMAIN_MARGIN_WIDTHS = 5.0

# Minimum sample density (points per unit length) for the trapezoid rule to
# be comfortably inside the closed-form agreement tolerance.
_MIN_POINTS_PER_UNIT = 100.0


def area_scale(delta: float) -> float:
    """Area of one unit-amplitude bump of width ``delta``: delta * sqrt(2 pi)."""
    return delta * math.sqrt(2.0 * math.pi)


@dataclass(frozen=True)
class IntegralTable:
    """Tabulated integral map I(N) for N = 1..n_max, no gaps.

    ``family`` and ``delta`` may be ``None`` for tables loaded from files
    that carry no provenance (the CSV form); such tables skip the
    closed-form consistency check but remain fully usable for recovery,
    which only reads the rows.

    ``supports_binary`` is derived from the rows at construction: the signs
    must strictly alternate and the magnitudes of each parity class must be
    non-increasing.  Binary-search recovery is only valid on such tables.
    """

    delta: float | None
    family: CoefficientFamily | None
    n_max: int
    ns: np.ndarray
    values: np.ndarray
    supports_binary: bool = field(init=False)

    def __post_init__(self) -> None:
        ns = np.asarray(self.ns, dtype=int)
        values = np.asarray(self.values, dtype=float)
        object.__setattr__(self, "ns", ns)
        object.__setattr__(self, "values", values)
        if self.n_max < 1:
            raise ValueError(f"n_max must be >= 1, got {self.n_max}")
        if ns.shape != (self.n_max,) or values.shape != (self.n_max,):
            raise ValueError("table rows must cover exactly n_max entries")
        if not np.array_equal(ns, np.arange(1, self.n_max + 1)):
            raise ValueError("table rows must run 1..n_max in order with no gaps")
        if not np.all(np.isfinite(values)):
            raise ValueError("table values must be finite")
        if self.family is not None and self.delta is not None:
            expected = area_scale(self.delta) * partial_sums(self.family, self.n_max)
            if not np.allclose(values, expected, rtol=1e-12, atol=1e-12):
                raise ValueError("table values disagree with the closed form")
        signs = np.sign(values)
        alternating = bool(signs[0] != 0.0 and np.all(signs[1:] == -signs[:-1]))
        magnitudes = np.abs(values)
        # comparing N against N+2 checks both parity classes at once
        envelopes_shrink = bool(np.all(magnitudes[2:] <= magnitudes[:-2]))
        object.__setattr__(self, "supports_binary", alternating and envelopes_shrink)

    @property
    def rows(self) -> list[tuple[int, float]]:
        return [(int(n), float(v)) for n, v in zip(self.ns, self.values)]

    def value_at(self, n: int) -> float:
        """I(n) for a tabulated n, raising if n is outside 1..n_max."""
        if isinstance(n, bool) or not isinstance(n, (int, np.integer)):
            raise TypeError(f"row index must be an integer, got {n!r}")
        if not 1 <= n <= self.n_max:
            raise ValueError(f"row {n} outside table range 1..{self.n_max}")
        return float(self.values[n - 1])


def integral_closed(config: EncoderConfig, n_value: float) -> float:
    """Exact area under the bump train, by linearity of the integral.

    Discrete mode: scale * S(N).  Fractional mode: scale * (S(floor(N)) +
    frac * a_(floor(N)+1)).  Smooth mode: scale times the transition-weighted
    coefficient sum up to the truncation cutoff.
    """
    scale = area_scale(config.delta)
    if config.mode is Mode.SMOOTH:
        ns, weights = term_weights(config, n_value)
        return scale * float(np.dot(weights, config.family.coefficients(ns)))
    n_value = _check_count(n_value)
    k = math.floor(n_value)
    frac = n_value - k
    if config.mode is Mode.DISCRETE and frac != 0.0:
        raise ValueError(
            f"discrete mode requires an integer counting parameter, got {n_value!r}"
        )
    if frac == 0.0:
        return scale * partial_sum(config.family, k).value
    return scale * (partial_sum(config.family, k).value + frac * coefficient(config.family, k + 1))


def build_table(config: EncoderConfig, n_max: int) -> IntegralTable:
    """Tabulate I(N) for N = 1..n_max under a discrete-mode configuration."""
    if config.mode is not Mode.DISCRETE:
        raise ValueError("tables are built from discrete-mode configurations")
    if isinstance(n_max, bool) or not isinstance(n_max, (int, np.integer)) or n_max < 1:
        raise ValueError(f"n_max must be a positive integer, got {n_max!r}")
    values = area_scale(config.delta) * partial_sums(config.family, int(n_max))
    return IntegralTable(
        delta=config.delta,
        family=config.family,
        n_max=int(n_max),
        ns=np.arange(1, int(n_max) + 1),
        values=values,
    )


def _occupied_centers(config: EncoderConfig, n_value: float) -> tuple[int, int] | None:
    """Range of bump centers carrying non-negligible weight, or None if empty."""
    if config.mode is Mode.SMOOTH:
        # one center past ceil(N) still carries a visible transition weight
        return 1, math.ceil(n_value) + 1
    if config.mode is Mode.FRACTIONAL:
        hi = math.ceil(n_value) if n_value != math.floor(n_value) else int(n_value)
    else:
        hi = int(n_value)
    return (1, hi) if hi >= 1 else None


def integral_quadrature(
    config: EncoderConfig,
    n_value: float,
    t_min: float,
    t_max: float,
    points: int,
) -> float:
    """Trapezoid-rule area under the bump train over [t_min, t_max].

    The closed form is exact, so this exists as an independent cross-check.
    To keep the result within 1e-6 of the closed form the sample grid must
    be dense enough and the domain must reach a few widths past the
    outermost active bumps; violations raise instead of silently returning
    an imprecise value.

    Args:
        config: encoder configuration.
        n_value: counting parameter.
        t_min, t_max: integration limits, t_min < t_max.
        points: trapezoid sample count, at least 100 per unit of length.

    Raises:
        ValueError: insufficient domain coverage or sample density.
    """
    if not (math.isfinite(t_min) and math.isfinite(t_max)) or t_min >= t_max:
        raise ValueError(f"need finite t_min < t_max, got [{t_min!r}, {t_max!r}]")
    if isinstance(points, bool) or not isinstance(points, (int, np.integer)) or points < 2:
        raise ValueError(f"points must be an integer >= 2, got {points!r}")
    if points < _MIN_POINTS_PER_UNIT * (t_max - t_min):
        raise ValueError(
            f"{points} points is too sparse for [{t_min}, {t_max}]; "
            f"need at least {_MIN_POINTS_PER_UNIT:g} per unit length"
        )
    span = _occupied_centers(config, float(n_value))
    if span is not None:
        margin = _DOMAIN_MARGIN_WIDTHS * config.delta
        need_lo, need_hi = span[0] - margin, span[1] + margin
        if t_min > need_lo or t_max < need_hi:
            raise ValueError(
                f"domain [{t_min}, {t_max}] truncates the bump train; "
                f"need at least [{need_lo:g}, {need_hi:g}]"
            )
    ts = np.linspace(t_min, t_max, int(points))
    return float(np.trapezoid(_accumulate(config, float(n_value), ts), ts))


def map_derivative_smooth(config: EncoderConfig, n_value: float) -> float:
    """d I(N) / d N for the smooth map with a logistic transition.

    Each term's weight sigma(n - N) gains sharpness * sigma * (1 - sigma)
    per unit increase of N, so the derivative is the scaled coefficient sum
    with those factors.  Only the logistic transition has this closed form;
    other transitions raise.
    """
    if config.mode is not Mode.SMOOTH or not isinstance(config.transition, Sigmoid):
        raise ValueError("derivative requires smooth mode with a Sigmoid transition")
    n_value = float(n_value)
    n_hi = smooth_cutoff(config, n_value)
    ns = np.arange(1, n_hi + 1)
    # d/dN sigma(n - N) is minus the x-derivative at x = n - N
    gain = -config.transition.derivative(ns - n_value)
    coeffs = config.family.coefficients(ns)
    return area_scale(config.delta) * float(np.dot(coeffs, gain))
