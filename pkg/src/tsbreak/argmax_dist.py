"""Limit distribution of the estimated break location.

The break estimator's scaled error converges to the argmax of a two-sided
Brownian motion with triangular drift: standard scale and drift -|s|/2 on
the left of the origin, volatility sqrt(phi) and drift -xi*s/2 on the
right. `cdf` is the closed form of that argmax law, derived by integrating
the joint density of the running maximum and endpoint of the right-hand
side against the exponential law of each side's ultimate maximum. For
phi = xi = 1 it reduces to the familiar symmetric expression
1 + sqrt(x/2pi) e^{-x/8} - (x+5)/2 Phi(-sqrt(x)/2) + 3/2 e^x Phi(-3 sqrt(x)/2).
"""

from __future__ import annotations

import math

from scipy.special import erfc, erfcx

BISECT_TOL = 1e-8


def _cdf_nonneg(x: float, phi: float, xi: float) -> float:
    # erfcx keeps the e^{z2^2} erfc(z2) product finite for large x.
    z1 = xi * math.sqrt(x) / (2.0 * math.sqrt(2.0 * phi))
    z2 = (2.0 * phi + xi) * math.sqrt(x) / (2.0 * math.sqrt(2.0 * phi))
    damp = math.exp(-x * xi**2 / (8.0 * phi))
    return (
        1.0
        + (xi / math.sqrt(phi)) * math.sqrt(x / (2.0 * math.pi)) * damp
        - (1.0 + x * xi**2 / (4.0 * phi) + xi**2 / (2.0 * phi * (phi + xi)))
        * erfc(z1)
        + (xi * (2.0 * phi + xi) / (2.0 * phi * (phi + xi))) * erfcx(z2) * damp
    )


def cdf(x: float, phi: float = 1.0, xi: float = 1.0) -> float:
    """P(argmax <= x) of the two-sided limit process."""
    if phi <= 0 or xi <= 0:
        raise ValueError(f"phi and xi must be positive, got {phi}, {xi}")
    if x >= 0:
        return min(1.0, max(0.0, _cdf_nonneg(x, phi, xi)))
    # Mirror the process: the left branch becomes the right branch of a
    # process with parameters (1/phi, 1/xi) after rescaling time by xi^2/phi.
    return min(
        1.0, max(0.0, 1.0 - _cdf_nonneg(-x * xi**2 / phi, 1.0 / phi, 1.0 / xi))
    )


def quantile(p: float, phi: float = 1.0, xi: float = 1.0) -> float:
    """Inverse CDF by bracketing and bisection to 1e-8."""
    if not 0.0 < p < 1.0:
        raise ValueError(f"probability must be in (0, 1), got {p}")
    lo, hi = 0.0, 1.0
    if cdf(0.0, phi, xi) <= p:
        while cdf(hi, phi, xi) < p:
            lo, hi = hi, hi * 2.0
            if hi > 1e12:
                raise ArithmeticError("quantile bracket search diverged")
    else:
        lo, hi = -1.0, 0.0
        while cdf(lo, phi, xi) > p:
            lo, hi = lo * 2.0, lo
            if lo < -1e12:
                raise ArithmeticError("quantile bracket search diverged")
    while hi - lo > BISECT_TOL:
        mid = 0.5 * (lo + hi)
        if cdf(mid, phi, xi) < p:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)
