#!/usr/bin/env python3
"""Regenerate the bundled monthly fixture CSV.

The series is synthetic: a calibrated 192-month base segment (2004-01 ..
2019-12) followed by a 49-month piecewise-constant staircase (2020-01 ..
2024-01) with three mean shifts and segment-specific noise drawn from a
fixed PCG64 stream. Values mimic a 0-100 search-interest index.

Usage: python tools/make_fixture.py [out.csv]
Default output: src/tsbreak/data/trends_monthly.csv
"""

import math
import pathlib
import sys

import numpy as np

# Calibrated base segment, 192 monthly values (2004-01 .. 2019-12).
PRE = np.array([
    76.0115, 26.6302, 5.3764, 11.4371, 10.6081, 11.2003, 24.3251, 17.9012,
    23.9297, 12.0339, 11.1897, 26.3667, 30.9244, 11.3851, 19.9309, 12.2992,
    10.3693, 14.8831, 19.3503, 12.0971, 18.3531, 14.1111, 13.0873, 12.5502,
    12.6871, 13.1372, 13.9349, 13.7991, 17.2310, 16.5926, 14.9529, 19.7318,
    21.1656, 21.2206, 12.6607, 25.1404, 21.6476, 13.3389, 14.3154, 13.3276,
    10.9947, 12.4785, 14.6896, 22.1553, 14.7235, 23.4476, 28.0281, 20.0339,
    21.5951, 23.6339, 16.1237, 18.6288, 15.7312, 20.8519, 12.5059, 19.9808,
    18.2515, 17.0170, 20.6200, 20.8647, 19.9650, 22.2677, 23.7775, 15.3446,
    18.6933, 17.1147, 15.9553, 16.3851, 19.3051, 17.4148, 17.5111, 18.1856,
    18.4908, 17.3507, 17.6921, 24.5380, 23.6277, 18.9482, 22.8998, 22.1589,
    23.1741, 23.6382, 22.6958, 20.4617, 20.1107, 19.5554, 15.2610, 15.6789,
    12.9256, 12.3304, 10.8737, 12.5970, 10.4525, 11.8328, 13.2201, 10.8211,
    9.2646, 16.5076, 8.3262, 8.0284, 13.9773, 12.5932, 12.0897, 16.4152,
    18.5662, 21.6787, 20.3199, 23.0927, 26.8810, 27.1753, 23.1437, 26.3078,
    31.4575, 17.7157, 21.3501, 24.7863, 26.3628, 27.3960, 32.0657, 29.4922,
    29.9385, 33.6926, 19.8105, 26.4101, 35.4568, 31.4915, 43.6109, 47.9223,
    40.6851, 45.2593, 48.3804, 44.9516, 35.2254, 36.6455, 48.5029, 26.6033,
    39.3546, 27.8334, 42.7042, 37.4589, 40.9658, 48.8458, 44.4630, 60.3632,
    28.6977, 51.3498, 55.4678, 38.8101, 33.5133, 45.4173, 40.1630, 28.7939,
    44.1696, 52.0883, 40.7846, 50.0490, 53.1513, 40.5564, 48.9634, 43.4693,
    30.4307, 21.7779, 44.4098, 49.1463, 45.9087, 47.2430, 44.6879, 66.5100,
    48.4753, 62.1430, 60.6388, 53.6482, 65.3009, 50.5679, 22.4783, 47.4513,
    49.1658, 48.7449, 21.9324, 22.1949, 32.8578, 45.4313, 54.1749, 61.4697,
    38.5452, 55.0423, 66.2657, 80.5402, 76.3423, 51.6202, 43.9717, 50.5399
])

# Staircase parameters for the final 49 months (2020-01 .. 2024-01):
# segment bounds (0-based offsets within the window), per-segment means
# expressed via jump sizes in noise-sd units, and the noise stream seed.
SLICE_SEED = 82
ANCHOR = 43.10393660599067   # mean of the first staircase segment
SCALE = 2.5343697440132047   # noise sd of the first staircase segment


def staircase(seed: int, sig1: float, mu1: float) -> np.ndarray:
    """Four-segment staircase with exact per-segment sample moments."""
    s2 = s3 = 1.2247 * sig1
    s4 = 0.6325 * s3
    d1, d2, d3 = 2.626 * sig1, 4.082 * s2, -1.612 * s3
    mus = (mu1, mu1 + d1, mu1 + d1 + d2, mu1 + d1 + d2 + d3)
    sigs = (sig1, s2, s3, s4)
    bounds = (0, 10, 24, 42, 49)
    rng = np.random.Generator(np.random.PCG64(seed))
    y = np.empty(49)
    for s in range(4):
        lo, hi = bounds[s], bounds[s + 1]
        e = rng.standard_normal(hi - lo)
        e -= e.mean()
        e *= sigs[s] / math.sqrt((e @ e) / (hi - lo))
        y[lo:hi] = mus[s] + e
    return y


def build() -> np.ndarray:
    shape = (staircase(SLICE_SEED, 3.0, 47.0) - 47.0) / 3.0
    tail = ANCHOR + SCALE * shape
    return np.round(np.concatenate([PRE, tail]), 4)


def main() -> None:
    default = (
        pathlib.Path(__file__).resolve().parent.parent
        / "src" / "tsbreak" / "data" / "trends_monthly.csv"
    )
    out = pathlib.Path(sys.argv[1]) if len(sys.argv) > 1 else default
    y = build()
    year, month = 2004, 1
    rows = ["month,value"]
    for v in y:
        rows.append(f"{year:04d}-{month:02d},{v:.4f}")
        month += 1
        if month == 13:
            year, month = year + 1, 1
    out.write_text("\n".join(rows) + "\n")
    print(f"wrote {len(y)} rows to {out}")


if __name__ == "__main__":
    main()
