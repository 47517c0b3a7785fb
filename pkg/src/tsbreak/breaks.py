"""Structural-break analysis: Chow test, F-statistic sweep, breakpoints.

Break indices are 1-based throughout the public surface: a break at i
splits the sample into observations 1..i and i+1..n.
"""

from __future__ import annotations

import enum
import math
import os
from dataclasses import dataclass, replace

import numpy as np
from scipy import stats

from . import argmax_dist, ols
from .series import TimeSeries

DEFAULT_TRIMMING = 0.10
DEFAULT_MC_SEED = 20240101
MC_GRID = 1000
MC_REPS = 10000
SUPPORTED_ALPHAS = (0.01, 0.05, 0.10)


class BreakModel(enum.Enum):
    LEVEL = "level"  # intercept only
    TREND = "trend"  # intercept plus linear time index

    @property
    def k(self) -> int:
        return 1 if self is BreakModel.LEVEL else 2


class BreaksError(ValueError):
    """Raised for invalid windows, degenerate fits, or bad parameters."""


def mc_seed() -> int:
    """Monte Carlo seed; the TSBREAK_SEED environment variable overrides."""
    return int(os.environ.get("TSBREAK_SEED", DEFAULT_MC_SEED))


def _regressors(model: BreakModel, n: int) -> np.ndarray:
    if model is BreakModel.LEVEL:
        return np.ones((n, 1))
    return np.column_stack([np.ones(n), np.arange(1.0, n + 1.0)])


def _segment_rss(X: np.ndarray, y: np.ndarray) -> float:
    fit = ols.fit(ols.DesignMatrix(X, tuple(f"x{i}" for i in range(X.shape[1]))), y)
    return fit.rss


@dataclass(frozen=True)
class ChowResult:
    break_index: int  # last observation of the first segment, 1-based
    f_stat: float
    df_num: int
    df_den: int
    p_value: float


def _chow_f(X: np.ndarray, y: np.ndarray, split: int) -> tuple[float, int, int]:
    """Pooled-vs-segmented F statistic at a 1-based split index."""
    n, k = X.shape
    if split < k + 1 or n - split < k + 1:
        raise BreaksError(
            f"split at {split} leaves a segment with fewer than {k + 1} "
            f"observations (n={n}, k={k})"
        )
    rss_pooled = _segment_rss(X, y)
    rss1 = _segment_rss(X[:split], y[:split])
    rss2 = _segment_rss(X[split:], y[split:])
    rss_seg = rss1 + rss2
    if rss_seg <= 0.0:
        raise BreaksError(
            "degenerate segments: both sub-fits are exact (zero residual "
            "sum of squares), the F statistic is undefined"
        )
    df_den = n - 2 * k
    f = ((rss_pooled - rss_seg) / k) / (rss_seg / df_den)
    return max(f, 0.0), k, df_den


def chow_test(series: TimeSeries, model: BreakModel, point: int) -> ChowResult:
    """Chow test at a researcher-chosen split point."""
    y = series.values
    X = _regressors(model, len(y))
    f, k, df_den = _chow_f(X, y, point)
    p = float(stats.f.sf(f, k, df_den))
    return ChowResult(point, f, k, df_den, p)


@dataclass(frozen=True)
class FstatsPath:
    """F statistic per candidate break index over a trimmed window.

    Deliberately silent about which candidate might be "the" break: an
    ex-post sweep cannot date a break, only summarize evidence that one
    exists somewhere in the window.
    """

    n: int
    from_index: int
    to_index: int
    f_values: np.ndarray
    trimming: float
    k: int

    @property
    def candidates(self) -> range:
        return range(self.from_index, self.to_index + 1)

    @property
    def sup_f(self) -> float:
        return float(self.f_values.max())

    @property
    def ave_f(self) -> float:
        return float(self.f_values.mean())


def f_stats(
    series: TimeSeries,
    model: BreakModel,
    from_index: int,
    to_index: int,
    trimming: float = DEFAULT_TRIMMING,
) -> FstatsPath:
    """Chow F at every candidate split in [from_index, to_index]."""
    y = series.values
    n = len(y)
    if not 1 <= from_index <= to_index <= n - 1:
        raise BreaksError(
            f"candidate window [{from_index}, {to_index}] invalid for n={n}"
        )
    margin = math.ceil(trimming * n)
    if from_index < margin or to_index > n - margin:
        raise BreaksError(
            f"window [{from_index}, {to_index}] violates the "
            f"{100 * (1 - trimming):.0f}/{100 * trimming:.0f} rule: each "
            f"segment needs at least {margin} of the {n} observations "
            "(lower the trimming fraction explicitly to override)"
        )
    X = _regressors(model, n)
    values = np.array(
        [_chow_f(X, y, split)[0] for split in range(from_index, to_index + 1)]
    )
    values.setflags(write=False)
    return FstatsPath(n, from_index, to_index, values, trimming, model.k)


# --- Monte Carlo null distribution of the F path functionals -----------------

_null_cache: dict[tuple, tuple[np.ndarray, np.ndarray]] = {}


def _null_draws(
    lam1: float, lam2: float, k: int, seed: int
) -> tuple[np.ndarray, np.ndarray]:
    """Simulated (sup, ave) draws of the limiting F-path functionals.

    k times the Chow F at split fraction u converges, under the null, to
    ||B_k(u)||^2 / (u(1-u)) with B_k a k-dimensional Brownian bridge. The
    bridge is simulated on a 1000-point grid and the functionals are taken
    over the grid points inside [lam1, lam2]; draws are cached per
    (window, k, seed).
    """
    key = (round(lam1, 9), round(lam2, 9), k, seed)
    if key in _null_cache:
        return _null_cache[key]
    grid = np.arange(1, MC_GRID) / MC_GRID
    window = (grid >= lam1) & (grid <= lam2)
    if not window.any():
        raise BreaksError(
            f"candidate window [{lam1:.3f}, {lam2:.3f}] too narrow for the "
            f"{MC_GRID}-point simulation grid"
        )
    u = grid[window]
    scale = 1.0 / (u * (1.0 - u))
    rng = np.random.Generator(np.random.PCG64(seed))
    sups = np.empty(MC_REPS)
    aves = np.empty(MC_REPS)
    batch = 250
    done = 0
    while done < MC_REPS:
        b = min(batch, MC_REPS - done)
        z = rng.standard_normal((b, k, MC_GRID)) / math.sqrt(MC_GRID)
        w = np.cumsum(z, axis=2)
        bridge = w[:, :, :-1] - grid * w[:, :, -1:]
        q = np.sum(bridge[:, :, window] ** 2, axis=1) * scale
        sups[done : done + b] = q.max(axis=1)
        aves[done : done + b] = q.mean(axis=1)
        done += b
    for arr in (sups, aves):
        arr.setflags(write=False)
    _null_cache[key] = (sups, aves)
    return sups, aves


@dataclass(frozen=True)
class BoundarySpec:
    alpha: float
    criterion: str  # "sup_f" | "ave_f"
    critical_value: float
    seed: int


def boundary(
    path: FstatsPath,
    alpha: float = 0.05,
    criterion: str = "sup_f",
    seed: int | None = None,
) -> BoundarySpec:
    """Critical value of the sup-F or ave-F functional at level alpha."""
    if alpha not in SUPPORTED_ALPHAS:
        raise BreaksError(
            f"unsupported alpha {alpha}; choose from {SUPPORTED_ALPHAS}"
        )
    if criterion not in ("sup_f", "ave_f"):
        raise BreaksError(f"criterion must be sup_f or ave_f, got {criterion!r}")
    seed = mc_seed() if seed is None else seed
    sups, aves = _null_draws(
        path.from_index / path.n, path.to_index / path.n, path.k, seed
    )
    draws = sups if criterion == "sup_f" else aves
    crit = float(np.quantile(draws, 1.0 - alpha)) / path.k
    return BoundarySpec(alpha, criterion, crit, seed)


@dataclass(frozen=True)
class SupFPvalue:
    p_value: float
    mc_se: float
    clamped: bool  # true when sup_f exceeded every simulated draw

    def __str__(self) -> str:
        if self.clamped:
            return f"< {1.0 / MC_REPS:g}"
        return f"{self.p_value:.4f} (MC se {self.mc_se:.4f})"


def sup_f_pvalue(path: FstatsPath, seed: int | None = None) -> SupFPvalue:
    """Tail proportion of sup_f under the simulated null distribution."""
    seed = mc_seed() if seed is None else seed
    sups, _ = _null_draws(
        path.from_index / path.n, path.to_index / path.n, path.k, seed
    )
    tail = int(np.sum(sups >= path.k * path.sup_f))
    p = tail / len(sups)
    if tail == 0:
        return SupFPvalue(1.0 / len(sups), float("nan"), True)
    return SupFPvalue(p, math.sqrt(p * (1.0 - p) / len(sups)), False)


# --- Multiple breakpoints ----------------------------------------------------


@dataclass(frozen=True)
class BreakpointSet:
    model: BreakModel
    n: int
    h: int
    rss_table: tuple[float, ...]  # indexed by break count m = 0..m_max
    bic_table: tuple[float, ...]
    selected_m: int
    breaks_by_m: tuple[tuple[int, ...], ...]
    confidence_intervals: tuple[tuple[int, int, int], ...] | None = None

    @property
    def break_indices(self) -> tuple[int, ...]:
        return self.breaks_by_m[self.selected_m]


def _segment_rss_table(y: np.ndarray, model: BreakModel, h: int) -> np.ndarray:
    """rss[i, j]: RSS of the model on observations i..j (0-based, inclusive).

    Filled only for j - i + 1 >= h via running sums, O(n^2) total.
    """
    n = len(y)
    out = np.full((n, n), np.nan)
    t = np.arange(1.0, n + 1.0)
    for i in range(n):
        s_y = s_yy = s_t = s_tt = s_ty = 0.0
        for j in range(i, n):
            v = y[j]
            s_y += v
            s_yy += v * v
            if model is BreakModel.TREND:
                s_t += t[j]
                s_tt += t[j] * t[j]
                s_ty += t[j] * v
            m = j - i + 1
            if m < h:
                continue
            if model is BreakModel.LEVEL:
                rss = s_yy - s_y * s_y / m
            else:
                stt = s_tt - s_t * s_t / m
                sty = s_ty - s_t * s_y / m
                syy = s_yy - s_y * s_y / m
                rss = syy - (sty * sty / stt if stt > 0 else 0.0)
            out[i, j] = max(rss, 0.0)
    return out


def optimal_breakpoints(
    series: TimeSeries,
    model: BreakModel,
    h: int,
    m_max: int | None = None,
) -> BreakpointSet:
    """Minimal-RSS partitions for each break count, selected by BIC.

    Exact dynamic program over the triangular segment-RSS array; among
    equal-RSS partitions the lexicographically smallest break vector wins,
    and BIC ties go to the smaller break count.
    """
    y = series.values
    n = len(y)
    k = model.k
    if h < k + 1:
        raise BreaksError(f"h={h} too small for the {model.value} model (k={k})")
    if n < 2 * h:
        raise BreaksError(f"series of length {n} shorter than 2h={2 * h}")
    bound = n // h - 1
    if m_max is None:
        m_max = bound
    elif not 0 <= m_max <= bound:
        raise BreaksError(f"m_max={m_max} outside feasible range 0..{bound}")

    seg = _segment_rss_table(y, model, h)

    # best[m][j]: (rss, breaks) for observations 0..j with m breaks.
    best: list[list[tuple[float, tuple[int, ...]] | None]] = [
        [None] * n for _ in range(m_max + 1)
    ]
    for j in range(n):
        if not np.isnan(seg[0, j]):
            best[0][j] = (float(seg[0, j]), ())
    for m in range(1, m_max + 1):
        for j in range(n):
            if j + 1 < (m + 1) * h:
                continue
            choice = None
            # Last break after observation b (1-based), segment b..j.
            for b in range(m * h, j - h + 2):
                prev = best[m - 1][b - 1]
                if prev is None or np.isnan(seg[b, j]):
                    continue
                cand = (prev[0] + float(seg[b, j]), prev[1] + (b,))
                if choice is None or cand < choice:
                    choice = cand
            best[m][j] = choice

    rss_table, bic_table, breaks_by_m = [], [], []
    log_n = math.log(n)
    for m in range(m_max + 1):
        cell = best[m][n - 1]
        if cell is None:
            raise BreaksError(f"no feasible partition with {m} breaks")
        rss, brk = cell
        rss_table.append(rss)
        breaks_by_m.append(brk)
        npar = (m + 1) * k + m + 1  # per-segment slopes, break dates, variance
        safe_rss = max(rss, 1e-300)
        bic_table.append(n * math.log(safe_rss / n) + npar * log_n)

    selected_m = min(range(m_max + 1), key=lambda m: (bic_table[m], m))
    return BreakpointSet(
        model,
        n,
        h,
        tuple(rss_table),
        tuple(bic_table),
        selected_m,
        tuple(breaks_by_m),
    )


def breakpoint_confint(
    bset: BreakpointSet,
    series: TimeSeries,
    alpha: float = 0.05,
) -> BreakpointSet:
    """Attach (lower, point, upper) intervals to the selected partition.

    Intervals come from the argmax limit law with segment-specific residual
    variances and regressor moments; quantiles by bisection to 1e-8.
    """
    breaks = bset.break_indices
    if not breaks:
        raise BreaksError("no breaks selected; nothing to build intervals for")
    y = series.values
    n = bset.n
    if len(y) != n:
        raise BreaksError("series does not match the breakpoint set")
    X = _regressors(bset.model, n)
    bounds = (0,) + breaks + (n,)
    intervals = []
    for idx, b in enumerate(breaks):
        lo, hi = bounds[idx], bounds[idx + 2]
        X1, y1 = X[lo:b], y[lo:b]
        X2, y2 = X[b:hi], y[b:hi]
        fit1 = ols.fit(ols.DesignMatrix(X1, ("c",) * X1.shape[1]), y1)
        fit2 = ols.fit(ols.DesignMatrix(X2, ("c",) * X2.shape[1]), y2)
        delta = np.asarray(fit2.coefficients) - np.asarray(fit1.coefficients)
        q1 = X1.T @ X1 / len(y1)
        q2 = X2.T @ X2 / len(y2)
        dq1 = float(delta @ q1 @ delta)
        dq2 = float(delta @ q2 @ delta)
        sigma1 = fit1.rss / len(y1)
        sigma2 = fit2.rss / len(y2)
        if dq1 <= 0.0 or dq2 <= 0.0:
            raise BreaksError(
                f"no parameter change across break #{b}; interval undefined"
            )
        if sigma1 == 0.0 and sigma2 == 0.0:
            intervals.append((b, b, b))  # noiseless shift: exact break date
            continue
        if sigma1 == 0.0 or sigma2 == 0.0:
            side = "before" if sigma1 == 0.0 else "after"
            raise BreaksError(
                f"segment {side} break #{b} has zero residual variance; "
                "the interval is undefined"
            )
        xi = dq2 / dq1
        phi = xi * sigma2 / sigma1
        scale = sigma1 / dq1  # observations per unit of limit time
        q_hi = argmax_dist.quantile(1.0 - alpha / 2.0, phi, xi)
        q_lo = argmax_dist.quantile(alpha / 2.0, phi, xi)
        lower = b - math.ceil(scale * q_hi)
        upper = b - math.floor(scale * q_lo)
        intervals.append((max(1, lower), b, min(n, upper)))
    return replace(bset, confidence_intervals=tuple(intervals))
