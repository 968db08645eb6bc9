"""
Autocorrelation estimator shared by the return and trade-sign diagnostics.

rho(tau) = sum_{t < n - tau} (x_{t+tau} - m)(x_t - m) / sum_t (x_t - m)^2

with m the mean over all n values: the numerator runs over the n - tau
available pairs while the denominator keeps all n terms.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from ..errors import ConstantSeriesError, TooFewTradesError, TooFewValuesError
from ..kernel.eventlog import EventLog
from .series import SampledSeries, trade_signs


@dataclass(frozen=True)
class AcfResult:
    lags: np.ndarray
    values: np.ndarray

    @property
    def max_lag(self) -> int:
        return int(self.lags[-1])

    def mean_over(self, lo: int, hi: int) -> float:
        """Mean value over lags lo..hi inclusive."""
        return float(self.values[lo : hi + 1].mean())


def autocorrelation(values: Sequence[float] | np.ndarray, max_lag: int) -> AcfResult:
    x = np.asarray(values, dtype=float)
    n = len(x)
    if max_lag < 0:
        raise ValueError(f"max_lag must be >= 0, got {max_lag}")
    if n <= max_lag:
        raise TooFewValuesError(f"series of length {n} is too short for max_lag {max_lag}")
    if np.ptp(x) == 0:
        raise ConstantSeriesError("series is constant: no variance to normalise by")

    dev = x - x.mean()
    denom = float(dev @ dev)
    out = np.empty(max_lag + 1)
    out[0] = 1.0
    for tau in range(1, max_lag + 1):
        out[tau] = float(dev[tau:] @ dev[:-tau]) / denom
    return AcfResult(lags=np.arange(max_lag + 1), values=out)


def return_acf(returns: SampledSeries, max_lag: int) -> AcfResult:
    return autocorrelation(returns.values, max_lag)


def abs_return_acf(returns: SampledSeries, max_lag: int) -> AcfResult:
    return autocorrelation(np.abs(returns.values), max_lag)


def trade_sign_acf(log: EventLog, max_lag: int, burn_in: float = 0.0) -> AcfResult:
    """Event-time acf: consecutive trades are one lag apart whatever their timestamps."""
    signs = trade_signs(log, burn_in).signs
    if len(signs) < max_lag + 1:
        raise TooFewTradesError(
            f"{len(signs)} trades after {burn_in} cannot support max_lag {max_lag}"
        )
    return autocorrelation(signs, max_lag)


def average_acf(results: Sequence[AcfResult]) -> AcfResult:
    """Per-lag arithmetic mean across realizations."""
    if not results:
        raise ValueError("nothing to average")
    lags = results[0].lags
    for result in results[1:]:
        if not np.array_equal(result.lags, lags):
            raise ValueError("acf results were computed on different lag grids")
    return AcfResult(lags=lags, values=np.mean([r.values for r in results], axis=0))
