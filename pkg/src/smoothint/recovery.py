"""Recovering the counting parameter from an observed integral value.

Four complementary strategies, all returning the smallest qualifying index
when several rows fit:

* threshold: first table row whose integral magnitude drops below epsilon,
  the pure "how deep is the cancellation" reading.
* table scan / table binary: first row whose value lies within epsilon of an
  observed target, by linear scan or by a parity-split binary search that
  exploits the alternating sign pattern.
* spline: continuous inversion of the tabulated map.
* analytic local: exact inversion of one linear segment of the fractional
  map.

A failed search returns ``None``; it is an expected outcome, not an error.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .coefficients import coefficient, partial_sum
from .encoder import EncoderConfig
from .integral_map import IntegralTable, area_scale
from .interp import find_root_bracketed, spline_derivative, spline_eval, spline_fit

__all__ = [
    "RecoveryMethod",
    "RecoveryResult",
    "recover_threshold",
    "recover_match",
    "recover_binary",
    "recover_spline",
    "recover_analytic_fractional",
    "select_epsilon",
    "perturbation_margin",
    "noise_sweep",
]

# Below this coefficient magnitude the fractional segment is too flat for a
# trustworthy local inversion; results are still returned but flagged.
DEFAULT_STABILITY_EPSILON = 1e-6


class RecoveryMethod(str, Enum):
    THRESHOLD = "threshold"
    TABLE_SCAN = "table-scan"
    TABLE_BINARY = "table-binary"
    SPLINE = "spline"
    ANALYTIC_LOCAL = "analytic-local"


@dataclass(frozen=True)
class RecoveryResult:
    """Outcome of a successful recovery.

    ``n`` is an exact integer for the table-driven methods and a real number
    for the spline and analytic ones.  ``residual`` is the distance left
    between the achieved integral value and the request.  ``stable`` is a
    method-specific robustness verdict: for table methods the residual fits
    inside half the tolerance (so a further perturbation below epsilon/2
    cannot invalidate the match), for the continuous methods the local slope
    is bounded away from zero.
    """

    n: float
    residual: float
    method: RecoveryMethod
    stable: bool

    @property
    def nearest_integer(self) -> int:
        """Rounded integer candidate for the continuous methods."""
        return int(round(self.n))


def _check_epsilon(epsilon: float) -> float:
    epsilon = float(epsilon)
    if not math.isfinite(epsilon) or epsilon <= 0.0:
        raise ValueError(f"epsilon must be a positive real, got {epsilon!r}")
    return epsilon


def _check_target(target: float) -> float:
    target = float(target)
    if not math.isfinite(target):
        raise ValueError(f"target must be finite, got {target!r}")
    return target


def recover_threshold(
    table: IntegralTable, epsilon: float, require_local_min: bool = False
) -> RecoveryResult | None:
    """Smallest tabulated N with |I(N)| < epsilon, or None.

    With ``require_local_min`` the row must also be no larger in magnitude
    than its neighbours (one-sided at the table edges).  The flag is off by
    default: on tables whose magnitude envelope decreases monotonically,
    every interior row is beaten by its successor and only the last row
    could ever qualify.
    """
    epsilon = _check_epsilon(epsilon)
    magnitudes = np.abs(table.values)
    hits = magnitudes < epsilon
    if require_local_min:
        ok_left = np.ones(table.n_max, dtype=bool)
        ok_right = np.ones(table.n_max, dtype=bool)
        ok_left[1:] = magnitudes[1:] <= magnitudes[:-1]
        ok_right[:-1] = magnitudes[:-1] <= magnitudes[1:]
        hits &= ok_left & ok_right
    indices = np.flatnonzero(hits)
    if indices.size == 0:
        return None
    i = int(indices[0])
    residual = float(magnitudes[i])
    return RecoveryResult(
        n=int(table.ns[i]),
        residual=residual,
        method=RecoveryMethod.THRESHOLD,
        stable=bool(residual < epsilon / 2.0),
    )


def recover_match(
    table: IntegralTable, target: float, epsilon: float
) -> RecoveryResult | None:
    """Smallest tabulated N with |I(N) - target| < epsilon, or None."""
    target = _check_target(target)
    epsilon = _check_epsilon(epsilon)
    residuals = np.abs(table.values - target)
    indices = np.flatnonzero(residuals < epsilon)
    if indices.size == 0:
        return None
    i = int(indices[0])
    residual = float(residuals[i])
    return RecoveryResult(
        n=int(table.ns[i]),
        residual=residual,
        method=RecoveryMethod.TABLE_SCAN,
        stable=bool(residual < epsilon / 2.0),
    )


def recover_binary(
    table: IntegralTable, target: float, epsilon: float
) -> RecoveryResult | None:
    """Same answer as :func:`recover_match`, in logarithmic time.

    Splitting the rows by sign gives two monotone sequences (negative rows
    ascend toward zero, positive rows descend toward zero), and within each
    the rows matching the target form one contiguous run, so the earliest
    match per sign class is a binary search away.  The overall answer is
    the earlier of the two class results.

    Tables whose rows do not alternate with shrinking magnitudes cannot be
    searched this way; those fall back to the linear scan, and the result's
    method tag (table-scan) records the degraded path.
    """
    target = _check_target(target)
    epsilon = _check_epsilon(epsilon)
    if not table.supports_binary:
        return recover_match(table, target, epsilon)
    lo_t = target - epsilon
    hi_t = target + epsilon
    values = table.values
    candidates = []

    neg = np.flatnonzero(values < 0.0)
    neg_vals = values[neg]  # ascending
    j = int(np.searchsorted(neg_vals, lo_t, side="right"))
    if j < neg.size and neg_vals[j] < hi_t:
        candidates.append(int(neg[j]))

    pos = np.flatnonzero(values > 0.0)
    pos_vals = values[pos]  # descending
    j = int(np.searchsorted(-pos_vals, -hi_t, side="right"))
    if j < pos.size and pos_vals[j] > lo_t:
        candidates.append(int(pos[j]))

    if not candidates:
        return None
    i = min(candidates)
    residual = float(abs(values[i] - target))
    return RecoveryResult(
        n=int(table.ns[i]),
        residual=residual,
        method=RecoveryMethod.TABLE_BINARY,
        stable=bool(residual < epsilon / 2.0),
    )


def recover_spline(
    table: IntegralTable,
    target: float,
    tol: float = 1e-9,
    stability_epsilon: float = DEFAULT_STABILITY_EPSILON,
) -> RecoveryResult | None:
    """Continuous inversion of the tabulated map through a cubic spline.

    A knot whose tabulated value already matches the target within ``tol``
    is returned directly (the curve also crosses most levels much earlier,
    in the steep first interval, so without this pass an exactly tabulated
    value would be shadowed by that crossing).  Otherwise the first
    sign-change interval of (spline - target), scanning left to right, is
    rooted to ``tol``.

    Stability means the spline slope at the result is bounded away from
    zero, so the inversion is locally well conditioned.
    """
    target = _check_target(target)
    if tol <= 0.0 or not math.isfinite(tol):
        raise ValueError(f"tol must be a positive real, got {tol!r}")
    spline = spline_fit(zip(table.ns.astype(float), table.values))
    gap = table.values - target
    knot_hits = np.flatnonzero(np.abs(gap) <= tol)
    if knot_hits.size:
        n_star = float(table.ns[knot_hits[0]])
    else:
        brackets = np.flatnonzero(gap[:-1] * gap[1:] < 0.0)
        if brackets.size == 0:
            return None
        i = int(brackets[0])
        n_star = find_root_bracketed(
            lambda x: spline_eval(spline, x) - target,
            float(table.ns[i]),
            float(table.ns[i + 1]),
            tol,
        )
    residual = abs(spline_eval(spline, n_star) - target)
    slope = spline_derivative(spline, n_star)
    return RecoveryResult(
        n=n_star,
        residual=float(residual),
        method=RecoveryMethod.SPLINE,
        stable=bool(abs(slope) > stability_epsilon),
    )


def recover_analytic_fractional(
    config: EncoderConfig,
    target: float,
    segment: int,
    stability_epsilon: float = DEFAULT_STABILITY_EPSILON,
) -> RecoveryResult:
    """Invert one linear segment of the fractional map exactly.

    On [k, k+1] the fractional map is the line I(N) = I(k) + (N - k) *
    scale * a_(k+1), so a target inside the segment's value range maps back
    to N in closed form.  Only the family and width of ``config`` matter
    here; the mode field is not consulted.

    Args:
        config: supplies the coefficient family and bump width.
        target: observed integral value, must lie within the segment's
            closed value range.
        segment: the integer k naming the segment [k, k+1], k >= 0.
        stability_epsilon: slope-coefficient magnitude below which the
            result is flagged unstable.

    Raises:
        ValueError: target outside the segment's range, or a segment whose
            slope coefficient is exactly zero (no inverse exists).
    """
    target = _check_target(target)
    if isinstance(segment, bool) or not isinstance(segment, (int, np.integer)) or segment < 0:
        raise ValueError(f"segment must be an integer >= 0, got {segment!r}")
    k = int(segment)
    scale = area_scale(config.delta)
    slope_coeff = coefficient(config.family, k + 1)
    if slope_coeff == 0.0:
        raise ValueError(f"segment [{k}, {k + 1}] has zero slope; inversion is singular")
    i_lo = scale * partial_sum(config.family, k).value
    i_hi = i_lo + scale * slope_coeff
    if not (min(i_lo, i_hi) <= target <= max(i_lo, i_hi)):
        raise ValueError(
            f"target {target!r} outside segment [{k}, {k + 1}] value range "
            f"[{min(i_lo, i_hi)}, {max(i_lo, i_hi)}]"
        )
    n_star = k + (target - i_lo) / (scale * slope_coeff)
    achieved = i_lo + (n_star - k) * scale * slope_coeff
    return RecoveryResult(
        n=float(n_star),
        residual=float(abs(achieved - target)),
        method=RecoveryMethod.ANALYTIC_LOCAL,
        stable=bool(abs(slope_coeff) > stability_epsilon),
    )


def select_epsilon(decay_ratio: float, n_max: int, constant: float = 1.0) -> float:
    """Tolerance matched to an envelope that shrinks like constant * ratio^N.

    Using the envelope value at the table horizon as epsilon keeps the
    threshold test meaningful at every depth the table covers.
    """
    decay_ratio = float(decay_ratio)
    if not 0.0 < decay_ratio < 1.0:
        raise ValueError(f"decay ratio must be in (0, 1), got {decay_ratio!r}")
    if isinstance(n_max, bool) or not isinstance(n_max, (int, np.integer)) or n_max < 1:
        raise ValueError(f"n_max must be a positive integer, got {n_max!r}")
    constant = float(constant)
    if not math.isfinite(constant) or constant <= 0.0:
        raise ValueError(f"constant must be > 0, got {constant!r}")
    return constant * decay_ratio ** int(n_max)


def perturbation_margin(table: IntegralTable, n: int, epsilon: float) -> bool:
    """True when row ``n`` sits deep enough that epsilon/2 noise cannot unseat it.

    |I(n)| < epsilon/2 means any perturbation smaller than epsilon/2 leaves
    the perturbed value within epsilon of the stored row, by the triangle
    inequality.
    """
    epsilon = _check_epsilon(epsilon)
    return bool(abs(table.value_at(n)) < epsilon / 2.0)


def noise_sweep(
    table: IntegralTable,
    true_n: int,
    epsilon: float,
    amplitudes,
    trials: int = 100,
    seed: int = 0,
) -> list[tuple[float, float]]:
    """Exact-recovery rate of :func:`recover_match` under uniform noise.

    For each amplitude A, ``trials`` perturbations are drawn uniformly from
    [-A, A], added to the true row value, and pushed through the matcher;
    the reported accuracy is the fraction of draws recovering exactly
    ``true_n``.  Draws come from one seeded generator consumed in argument
    order, so a (seed, amplitudes, trials) triple always reproduces the
    same stream.

    Returns:
        List of (amplitude, accuracy) pairs in input order.
    """
    epsilon = _check_epsilon(epsilon)
    true_value = table.value_at(true_n)
    if isinstance(trials, bool) or not isinstance(trials, (int, np.integer)) or trials < 1:
        raise ValueError(f"trials must be a positive integer, got {trials!r}")
    amplitudes = [float(a) for a in amplitudes]
    for amplitude in amplitudes:
        if not math.isfinite(amplitude) or amplitude < 0.0:
            raise ValueError(f"noise amplitude must be >= 0, got {amplitude!r}")
    rng = np.random.default_rng(seed)
    results = []
    for amplitude in amplitudes:
        draws = rng.uniform(-amplitude, amplitude, int(trials))
        hits = 0
        for shift in draws:
            recovered = recover_match(table, true_value + shift, epsilon)
            if recovered is not None and recovered.n == true_n:
                hits += 1
        results.append((amplitude, hits / int(trials)))
    return results
