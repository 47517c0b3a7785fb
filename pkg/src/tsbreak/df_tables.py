"""Hard-coded critical-value tables for the unit-root tests.

The Dickey-Fuller t-ratio tables are the published finite-sample tables
(rows for sample sizes 25, 50, 100, 250, 500 and the asymptotic limit,
columns for eight tail probabilities). The KPSS tables are the published
asymptotic critical values for the demeaned and detrended statistics plus
the zero-mean variant.
"""

from __future__ import annotations

import math

DF_PROBS = (0.01, 0.025, 0.05, 0.10, 0.90, 0.95, 0.975, 0.99)
DF_SIZES = (25, 50, 100, 250, 500, math.inf)

# rows follow DF_SIZES, columns follow DF_PROBS
DF_TABLE_NONE = (
    (-2.66, -2.26, -1.95, -1.60, 0.92, 1.33, 1.70, 2.16),
    (-2.62, -2.25, -1.95, -1.61, 0.91, 1.31, 1.66, 2.08),
    (-2.60, -2.24, -1.95, -1.61, 0.90, 1.29, 1.64, 2.03),
    (-2.58, -2.23, -1.95, -1.62, 0.89, 1.29, 1.63, 2.01),
    (-2.58, -2.23, -1.95, -1.62, 0.89, 1.28, 1.62, 2.00),
    (-2.58, -2.23, -1.95, -1.62, 0.89, 1.28, 1.62, 2.00),
)

DF_TABLE_DRIFT = (
    (-3.75, -3.33, -3.00, -2.63, -0.37, 0.00, 0.34, 0.72),
    (-3.58, -3.22, -2.93, -2.60, -0.40, -0.03, 0.29, 0.66),
    (-3.51, -3.17, -2.89, -2.58, -0.42, -0.05, 0.26, 0.63),
    (-3.46, -3.14, -2.88, -2.57, -0.42, -0.06, 0.24, 0.62),
    (-3.44, -3.13, -2.87, -2.57, -0.43, -0.07, 0.24, 0.61),
    (-3.43, -3.12, -2.86, -2.57, -0.44, -0.07, 0.23, 0.60),
)

DF_TABLE_DRIFT_TREND = (
    (-4.38, -3.95, -3.60, -3.24, -1.14, -0.80, -0.50, -0.15),
    (-4.15, -3.80, -3.50, -3.18, -1.19, -0.87, -0.58, -0.24),
    (-4.04, -3.73, -3.45, -3.15, -1.22, -0.90, -0.62, -0.28),
    (-3.99, -3.69, -3.43, -3.13, -1.23, -0.92, -0.64, -0.31),
    (-3.98, -3.68, -3.42, -3.13, -1.24, -0.93, -0.65, -0.32),
    (-3.96, -3.66, -3.41, -3.12, -1.25, -0.94, -0.66, -0.33),
)

# Upper-tail probabilities and the matching critical values of the KPSS
# statistic per deterministic specification.
KPSS_PROBS = (0.10, 0.05, 0.025, 0.01)

KPSS_TABLE_NONE = (1.196, 1.656, 2.135, 2.787)
KPSS_TABLE_DRIFT = (0.347, 0.463, 0.574, 0.739)
KPSS_TABLE_DRIFT_TREND = (0.119, 0.146, 0.176, 0.216)
