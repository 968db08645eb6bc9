"""
The four stylized-fact diagnostics of one realization, computed together
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from ..contracts import StatsOptions
from ..kernel.eventlog import EventLog
from .acf import AcfResult, abs_return_acf, return_acf, trade_sign_acf
from .distributions import window_counts
from .series import inter_event_times, log_returns, sample_midprice


@dataclass(frozen=True)
class RealizationDiagnostics:
    seed: int
    returns: np.ndarray
    waiting_times: np.ndarray
    abs_return_acf: AcfResult
    return_acf: AcfResult
    sign_acf: AcfResult
    cascade_sizes: np.ndarray
    # events per burst_window after burn_in
    activity_counts: np.ndarray
    n_events: int
    n_trades: int


def compute_diagnostics(
    log: EventLog,
    options: StatsOptions,
    burn_in: Optional[float] = None,
    horizon: Optional[float] = None,
) -> RealizationDiagnostics:
    """Pure function of the log: a persisted and reloaded log gives identical results."""
    burn_in = log.meta.burn_in if burn_in is None else burn_in
    horizon = log.meta.horizon if horizon is None else horizon

    returns = log_returns(sample_midprice(log, options.delta, burn_in, horizon))
    kept = log.after(burn_in)
    return RealizationDiagnostics(
        seed=log.meta.seed,
        returns=returns.values,
        waiting_times=inter_event_times(log, burn_in),
        abs_return_acf=abs_return_acf(returns, options.acf_max_lag),
        return_acf=return_acf(returns, options.acf_max_lag),
        sign_acf=trade_sign_acf(log, options.sign_max_lag, burn_in),
        cascade_sizes=log.cascade_sizes(since=burn_in).to_numpy(dtype=np.int64),
        activity_counts=window_counts(
            kept.events["time"], options.burst_window, burn_in, horizon
        ),
        n_events=len(kept.events),
        n_trades=len(kept.trades),
    )
