"""Seeded generators for the canonical univariate process taxonomy.

Reproducibility contract: draws come from numpy's PCG64 stream seeded with
the given integer; Gaussian innovations are the inverse normal CDF applied
to consecutive uniforms. Both pieces are published, stable algorithms, so
the same seed yields bitwise-identical series on any platform (and a
reimplementation elsewhere can match by following the same recipe).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np
from scipy.special import ndtri

from .periods import Period
from .series import TimeSeries


class ProcessKind(enum.Enum):
    WHITE_NOISE = "white_noise"
    RANDOM_WALK = "random_walk"
    RANDOM_WALK_DRIFT = "random_walk_drift"
    TREND_STATIONARY = "trend_stationary"
    AR1 = "ar1"


@dataclass(frozen=True)
class ProcessSpec:
    kind: ProcessKind
    T: int
    drift: float = 0.5
    trend_slope: float = 0.5
    phi: float = 0.0
    sigma: float = 1.0
    seed: int = 0
    y0: float = 0.0

    def __post_init__(self):
        if self.T < 1:
            raise ValueError(f"series length must be positive, got {self.T}")
        if self.sigma <= 0:
            raise ValueError(f"sigma must be positive, got {self.sigma}")
        if self.kind is ProcessKind.AR1 and not abs(self.phi) < 1:
            raise ValueError(f"AR(1) requires |phi| < 1, got {self.phi}")


def _gaussian(rng: np.random.Generator, n: int) -> np.ndarray:
    # Inverse-CDF transform of uniform draws; see module docstring.
    return ndtri(rng.random(n))


def generate(spec: ProcessSpec, start: Period = Period(2000, 1)) -> TimeSeries:
    """Deterministic series for `spec`; same seed, same bits."""
    rng = np.random.Generator(np.random.PCG64(spec.seed))
    T = spec.T
    kind = spec.kind
    label = kind.value

    if kind is ProcessKind.AR1:
        # y0 from the stationary distribution, then the recursion.
        eps = _gaussian(rng, T + 1)
        y = np.empty(T)
        prev = eps[0] * spec.sigma / np.sqrt(1.0 - spec.phi**2)
        for t in range(T):
            prev = spec.phi * prev + spec.sigma * eps[t + 1]
            y[t] = prev
        return TimeSeries(start, y, label)

    eps = spec.sigma * _gaussian(rng, T)
    t_index = np.arange(1.0, T + 1.0)
    if kind is ProcessKind.WHITE_NOISE:
        y = eps
    elif kind is ProcessKind.TREND_STATIONARY:
        y = spec.trend_slope * t_index + eps
    elif kind is ProcessKind.RANDOM_WALK:
        y = spec.y0 + np.cumsum(eps)
    elif kind is ProcessKind.RANDOM_WALK_DRIFT:
        # Shares the noise path with RANDOM_WALK at the same seed: the
        # cumulative drift is added on top of the identical walk.
        y = spec.y0 + np.cumsum(eps) + spec.drift * t_index
    else:
        raise ValueError(f"unknown process kind {kind!r}")
    return TimeSeries(start, y, label)
