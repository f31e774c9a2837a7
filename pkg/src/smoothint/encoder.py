"""Bump-train evaluation: a counting parameter N selects how many bumps fire.

The encoder places one Gaussian bump at each positive integer center n with
amplitude a_n and a shared width.  Three interpretations of the counting
parameter N are supported:

* discrete: N must be an integer, bumps 1..N fire at full strength.
* fractional: bumps 1..floor(N) fire fully and bump floor(N)+1 fires scaled
  by the fractional part, so the train interpolates linearly between
  consecutive integer configurations.
* smooth: every bump up to a truncation index fires, weighted by a
  transition function evaluated at (n - N), so the whole train is a smooth
  function of N.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .bumps import Sigmoid, TransitionFunction
from .coefficients import CoefficientFamily

__all__ = ["Mode", "EncoderConfig", "counter_eval", "counter_grid"]

# A smooth evaluation keeps this many bump indices beyond ceil(N); the
# transition weight of the last kept term is already below 1e-40 at the
# default sharpness.
SMOOTH_TRUNCATION_MARGIN = 10

# A bump further than this many widths from t contributes less than 1e-55
# of its amplitude, far below every tolerance in the package (the skip
# threshold is nominally 1e-30), so such terms are not evaluated.
_CUTOFF_WIDTHS = 16.0


class Mode(str, Enum):
    DISCRETE = "discrete"
    FRACTIONAL = "fractional"
    SMOOTH = "smooth"


@dataclass(frozen=True)
class EncoderConfig:
    """Everything needed to evaluate the bump train.

    Args:
        family: coefficient family supplying the bump amplitudes.
        delta: shared bump width, > 0.
        mode: counting interpretation, see the module docstring.
        transition: gating function for smooth mode.  Defaults to
            ``Sigmoid(10.0)`` when smooth mode is selected; must be left
            unset for the other modes.
        truncation: fixed series cutoff for smooth mode.  ``None`` derives
            ceil(N) + 10 at evaluation time; an explicit value below that
            floor is rejected when evaluating.
    """

    family: CoefficientFamily
    delta: float = 0.2
    mode: Mode = Mode.DISCRETE
    transition: TransitionFunction | None = field(default=None)
    truncation: int | None = None

    def __post_init__(self) -> None:
        if not math.isfinite(self.delta) or self.delta <= 0.0:
            raise ValueError(f"delta must be > 0, got {self.delta!r}")
        if not isinstance(self.mode, Mode):
            raise TypeError(f"mode must be a Mode, got {self.mode!r}")
        if self.mode is Mode.SMOOTH:
            if self.transition is None:
                object.__setattr__(self, "transition", Sigmoid())
        elif self.transition is not None:
            raise ValueError("transition only applies to smooth mode")
        if self.truncation is not None:
            if self.mode is not Mode.SMOOTH:
                raise ValueError("truncation only applies to smooth mode")
            if not isinstance(self.truncation, (int, np.integer)) or self.truncation < 1:
                raise ValueError(f"truncation must be a positive integer, got {self.truncation!r}")


def _check_count(n_value: float) -> float:
    if isinstance(n_value, bool) or not isinstance(n_value, (int, float, np.integer, np.floating)):
        raise TypeError(f"counting parameter must be a real number, got {n_value!r}")
    n_value = float(n_value)
    if not math.isfinite(n_value):
        raise ValueError(f"counting parameter must be finite, got {n_value!r}")
    if n_value < 0.0:
        raise ValueError(f"counting parameter must be >= 0, got {n_value!r}")
    return n_value


def smooth_cutoff(config: EncoderConfig, n_value: float) -> int:
    """Series cutoff for a smooth evaluation at ``n_value``."""
    floor_needed = math.ceil(n_value) + SMOOTH_TRUNCATION_MARGIN
    if config.truncation is None:
        return floor_needed
    if config.truncation < floor_needed:
        raise ValueError(
            f"truncation {config.truncation} is below the required cutoff "
            f"{floor_needed} for evaluation at N={n_value!r}"
        )
    return int(config.truncation)


def term_weights(config: EncoderConfig, n_value: float) -> tuple[np.ndarray, np.ndarray]:
    """Bump indices and their mode weights for an evaluation at ``n_value``.

    Returns:
        ``(ns, weights)``: integer centers 1..n_hi and a weight in [0, 1]
        for each.  Discrete weights are all 1; fractional weights are 1
        except a trailing fractional entry; smooth weights come from the
        transition function.

    Raises:
        ValueError: negative or non-finite ``n_value``, or a non-integer
            ``n_value`` in discrete mode.
    """
    n_value = _check_count(n_value)
    if config.mode is Mode.DISCRETE:
        if n_value != math.floor(n_value):
            raise ValueError(
                f"discrete mode requires an integer counting parameter, got {n_value!r}"
            )
        k = int(n_value)
        return np.arange(1, k + 1), np.ones(k)
    if config.mode is Mode.FRACTIONAL:
        k = math.floor(n_value)
        frac = n_value - k
        if frac == 0.0:
            return np.arange(1, k + 1), np.ones(k)
        weights = np.ones(k + 1)
        weights[-1] = frac
        return np.arange(1, k + 2), weights
    n_hi = smooth_cutoff(config, n_value)
    ns = np.arange(1, n_hi + 1)
    return ns, np.asarray(config.transition(ns - n_value), dtype=float)


def _accumulate(config: EncoderConfig, n_value: float, ts: np.ndarray) -> np.ndarray:
    """Sum the weighted bump train over an ascending sample grid ``ts``.

    Terms are added in ascending center order, restricted per term to the
    window where the bump is not negligible, so a one-point grid reproduces
    the full-grid values bit for bit.
    """
    ns, weights = term_weights(config, n_value)
    out = np.zeros(ts.shape)
    if ns.size == 0:
        return out
    amplitudes = weights * config.family.coefficients(ns)
    window = _CUTOFF_WIDTHS * config.delta
    two_var = 2.0 * config.delta * config.delta
    for center, amp in zip(ns, amplitudes):
        if amp == 0.0:
            continue
        lo = np.searchsorted(ts, center - window, side="left")
        hi = np.searchsorted(ts, center + window, side="right")
        if lo >= hi:
            continue
        d = ts[lo:hi] - center
        out[lo:hi] += amp * np.exp(-(d * d) / two_var)
    return out


def counter_eval(config: EncoderConfig, n_value: float, t: float) -> float:
    """Value of the bump train at position ``t`` for counting parameter ``n_value``.

    Raises:
        ValueError: non-finite ``t``, negative ``n_value``, or a fractional
            ``n_value`` in discrete mode.
    """
    t = float(t)
    if not math.isfinite(t):
        raise ValueError(f"t must be finite, got {t!r}")
    return float(_accumulate(config, n_value, np.array([t]))[0])


def counter_grid(
    config: EncoderConfig,
    n_value: float,
    t_min: float,
    t_max: float,
    points: int,
) -> tuple[np.ndarray, np.ndarray]:
    """Sample the bump train on a uniform grid.

    Args:
        config: encoder configuration.
        n_value: counting parameter.
        t_min, t_max: inclusive sample range, t_min < t_max.
        points: number of samples, >= 2.

    Returns:
        ``(ts, values)`` arrays of equal length; ``values[i]`` equals
        ``counter_eval(config, n_value, ts[i])`` exactly.
    """
    if not (math.isfinite(t_min) and math.isfinite(t_max)) or t_min >= t_max:
        raise ValueError(f"need finite t_min < t_max, got [{t_min!r}, {t_max!r}]")
    if isinstance(points, bool) or not isinstance(points, (int, np.integer)) or points < 2:
        raise ValueError(f"points must be an integer >= 2, got {points!r}")
    ts = np.linspace(t_min, t_max, int(points))
    return ts, _accumulate(config, n_value, ts)
