"""Separable multi-dimensional extension of the integral map.

A tuple of counts selects one bump train per axis; separability means the
d-dimensional integral factors into the product of the per-axis coefficient
sums, scaled by the Gaussian normalization per dimension:

    I(N_1, ..., N_d) = (2 pi)^(d/2) * delta^d * S_1(N_1) * ... * S_d(N_d)

Any axis at zero kills the whole product, exactly as the empty sum does in
one dimension.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .coefficients import CoefficientFamily, partial_sum, partial_sums
from .encoder import EncoderConfig
from .integral_map import build_table
from .recovery import recover_match

__all__ = [
    "MultiIndex",
    "MultiEncoderConfig",
    "integral_multi",
    "recover_multi",
    "coordinatewise_recover",
]

# Index tuples order lexicographically under the native tuple comparison,
# which is exactly the ordering the searches below promise.
MultiIndex = tuple[int, ...]


@dataclass(frozen=True)
class MultiEncoderConfig:
    """One coefficient family per axis and a shared bump width."""

    families: tuple[CoefficientFamily, ...]
    delta: float = 0.2

    def __post_init__(self) -> None:
        families = tuple(self.families)
        object.__setattr__(self, "families", families)
        if len(families) < 1:
            raise ValueError("need at least one axis")
        if not math.isfinite(self.delta) or self.delta <= 0.0:
            raise ValueError(f"delta must be > 0, got {self.delta!r}")

    @property
    def dimension(self) -> int:
        return len(self.families)

    @classmethod
    def isotropic(cls, family: CoefficientFamily, dimension: int, delta: float = 0.2):
        """Same family on every axis."""
        if dimension < 1:
            raise ValueError(f"dimension must be >= 1, got {dimension}")
        return cls(families=(family,) * dimension, delta=delta)


def _scale(config: MultiEncoderConfig) -> float:
    d = config.dimension
    return (2.0 * math.pi) ** (d / 2.0) * config.delta**d


def _check_indices(config: MultiEncoderConfig, indices) -> MultiIndex:
    indices = tuple(indices)
    if len(indices) != config.dimension:
        raise ValueError(
            f"expected {config.dimension} components, got {len(indices)}"
        )
    for component in indices:
        if isinstance(component, bool) or not isinstance(component, int):
            raise TypeError(f"components must be integers, got {component!r}")
        if component < 0:
            raise ValueError(f"components must be >= 0, got {component}")
    return indices


def integral_multi(config: MultiEncoderConfig, indices) -> float:
    """Closed-form d-dimensional integral at an index tuple."""
    indices = _check_indices(config, indices)
    product = 1.0
    for family, component in zip(config.families, indices):
        product *= partial_sum(family, component).value
    return _scale(config) * product


def _axis_limits(config: MultiEncoderConfig, n_max) -> list[int]:
    if isinstance(n_max, (int, bool)):
        limits = [n_max] * config.dimension
    else:
        limits = list(n_max)
    if len(limits) != config.dimension:
        raise ValueError(f"expected {config.dimension} axis limits, got {len(limits)}")
    for limit in limits:
        if isinstance(limit, bool) or not isinstance(limit, int) or limit < 1:
            raise ValueError(f"axis limits must be positive integers, got {limit!r}")
    return limits


def recover_multi(
    config: MultiEncoderConfig,
    n_max,
    epsilon: float,
    *,
    pareto: bool = False,
) -> MultiIndex | list[MultiIndex] | None:
    """Index tuples (components >= 1) whose integral magnitude is below epsilon.

    By default returns the lexicographically smallest qualifying tuple, or
    ``None``.  With ``pareto=True`` returns instead the set of qualifying
    tuples that are minimal under componentwise comparison (no other
    qualifying tuple is <= in every coordinate), sorted lexicographically;
    the set is empty when nothing qualifies.

    The search enumerates tuples in lexicographic order but prunes every
    subtree whose best achievable magnitude, taking the smallest |S| still
    available on each remaining axis, cannot reach epsilon.
    """
    epsilon = float(epsilon)
    if not math.isfinite(epsilon) or epsilon <= 0.0:
        raise ValueError(f"epsilon must be a positive real, got {epsilon!r}")
    limits = _axis_limits(config, n_max)
    sums = [partial_sums(family, limit) for family, limit in zip(config.families, limits)]
    scale = _scale(config)
    d = config.dimension

    # smallest attainable |product| over axes i.. (used to prune subtrees)
    best_tail = [1.0] * (d + 1)
    for i in range(d - 1, -1, -1):
        best_tail[i] = float(min(abs(s) for s in sums[i])) * best_tail[i + 1]

    found: list[MultiIndex] = []

    def search(axis: int, prefix: tuple[int, ...], product: float) -> bool:
        if axis == d:
            if scale * abs(product) < epsilon:
                found.append(prefix)
                return not pareto
            return False
        for component in range(1, limits[axis] + 1):
            partial = product * float(sums[axis][component - 1])
            if scale * abs(partial) * best_tail[axis + 1] >= epsilon:
                continue
            if search(axis + 1, prefix + (component,), partial):
                return True
        return False

    search(0, (), 1.0)
    if pareto:
        minimal = [
            candidate
            for candidate in found
            if not any(
                other != candidate and all(o <= c for o, c in zip(other, candidate))
                for other in found
            )
        ]
        return sorted(minimal)
    return found[0] if found else None


def coordinatewise_recover(
    config: MultiEncoderConfig,
    targets,
    epsilon: float,
    n_max,
) -> MultiIndex | None:
    """Recover each axis independently from its own observed integral.

    Each target is matched against that axis's one-dimensional table (same
    bump width).  The result is the tuple of per-axis matches; if any axis
    has no match the whole recovery reports ``None``.

    Raises:
        ValueError: number of targets differs from the number of axes.
    """
    targets = tuple(float(t) for t in targets)
    if len(targets) != config.dimension:
        raise ValueError(
            f"need one target per axis: got {len(targets)} for {config.dimension} axes"
        )
    limits = _axis_limits(config, n_max)
    recovered = []
    for family, target, limit in zip(config.families, targets, limits):
        table = build_table(EncoderConfig(family=family, delta=config.delta), limit)
        match = recover_match(table, target, epsilon)
        if match is None:
            return None
        recovered.append(int(match.n))
    return tuple(recovered)
