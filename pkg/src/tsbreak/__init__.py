"""Univariate time-series toolkit: unit-root tests and structural breaks."""

from .argmax_dist import cdf as break_argmax_cdf
from .argmax_dist import quantile as break_argmax_quantile
from .breaks import (
    BoundarySpec,
    BreakModel,
    BreakpointSet,
    BreaksError,
    ChowResult,
    FstatsPath,
    SupFPvalue,
    boundary,
    breakpoint_confint,
    chow_test,
    f_stats,
    optimal_breakpoints,
    sup_f_pvalue,
)
from .lags import RULES as LAG_RULES
from .lags import kpss_short, newey_west, schwert4, schwert12
from .ols import DesignMatrix, OlsError, OlsFit, fit
from .periods import Period, PeriodError
from .series import (
    DocTopicRecord,
    SeriesError,
    TimeSeries,
    aggregate_prevalence,
    load_csv,
    load_doc_topic_csv,
    write_csv,
)
from .simulate import ProcessKind, ProcessSpec, generate
from .unit_root import (
    AdfReport,
    KpssReport,
    TestCell,
    TrendSpec,
    UnitRootError,
    adf_stat,
    adf_test,
    interpolate_df_pvalue,
    kpss_stat,
    kpss_test,
    long_run_variance,
)

__version__ = "0.1.0"

__all__ = [
    "AdfReport",
    "BoundarySpec",
    "BreakModel",
    "BreakpointSet",
    "BreaksError",
    "ChowResult",
    "DesignMatrix",
    "DocTopicRecord",
    "FstatsPath",
    "KpssReport",
    "LAG_RULES",
    "OlsError",
    "OlsFit",
    "Period",
    "PeriodError",
    "ProcessKind",
    "ProcessSpec",
    "SeriesError",
    "SupFPvalue",
    "TestCell",
    "TimeSeries",
    "TrendSpec",
    "UnitRootError",
    "adf_stat",
    "adf_test",
    "aggregate_prevalence",
    "boundary",
    "break_argmax_cdf",
    "break_argmax_quantile",
    "breakpoint_confint",
    "chow_test",
    "f_stats",
    "fit",
    "generate",
    "interpolate_df_pvalue",
    "kpss_short",
    "kpss_stat",
    "kpss_test",
    "load_csv",
    "load_doc_topic_csv",
    "long_run_variance",
    "newey_west",
    "optimal_breakpoints",
    "schwert4",
    "schwert12",
    "sup_f_pvalue",
    "write_csv",
]
