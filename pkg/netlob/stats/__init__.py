"""
Stylized-fact statistics over event logs
"""

from .acf import (
    AcfResult,
    abs_return_acf,
    autocorrelation,
    average_acf,
    return_acf,
    trade_sign_acf,
)
from .diagnostics import RealizationDiagnostics, compute_diagnostics
from .distributions import (
    Histogram,
    excess_kurtosis,
    fano_factor,
    gaussian_density,
    gaussian_moment_fit,
    histogram,
    log_bin_edges,
    log_binned_histogram,
    pool_histograms,
    survival,
    waiting_tail_ratio,
    window_counts,
)
from .fits import FitMode, TailFit, loglog_linear_fit, semilog_linear_fit
from .series import (
    SampledSeries,
    TradeSignSeries,
    inter_event_times,
    log_returns,
    sample_midprice,
    trade_signs,
)

__all__ = [
    "AcfResult",
    "FitMode",
    "Histogram",
    "RealizationDiagnostics",
    "SampledSeries",
    "TailFit",
    "TradeSignSeries",
    "abs_return_acf",
    "autocorrelation",
    "average_acf",
    "compute_diagnostics",
    "excess_kurtosis",
    "fano_factor",
    "gaussian_density",
    "gaussian_moment_fit",
    "histogram",
    "inter_event_times",
    "log_bin_edges",
    "log_binned_histogram",
    "log_returns",
    "loglog_linear_fit",
    "pool_histograms",
    "return_acf",
    "sample_midprice",
    "semilog_linear_fit",
    "survival",
    "trade_sign_acf",
    "trade_signs",
    "waiting_tail_ratio",
    "window_counts",
]
