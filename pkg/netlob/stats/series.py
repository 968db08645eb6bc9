"""
Series extracted from an EventLog: sampled mid-prices, log returns, trade
signs and inter-event times. Records before burn_in never contribute.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..core import Side
from ..errors import (
    EmptyInputError,
    NonFinitePriceError,
    NonPositivePriceError,
    TooFewEventsError,
    TooFewValuesError,
)
from ..kernel.eventlog import EventLog


@dataclass(frozen=True)
class SampledSeries:
    """Values on a uniform grid t0, t0 + delta, ..."""

    delta: float
    t0: float
    values: np.ndarray

    def __len__(self) -> int:
        return len(self.values)

    def times(self) -> np.ndarray:
        return self.t0 + self.delta * np.arange(len(self.values))


@dataclass(frozen=True)
class TradeSignSeries:
    """+1 buyer-initiated, -1 seller-initiated, in trade order."""

    signs: np.ndarray

    def __len__(self) -> int:
        return len(self.signs)


def sample_midprice(
    log: EventLog, delta: float, burn_in: float, horizon: float
) -> SampledSeries:
    """
    Mid-price at burn_in, burn_in + delta, ..., <= horizon, carrying the last
    two-sided mid forward. Before the first two-sided quote the reference
    price p_ref stands in.
    """
    if delta <= 0:
        raise ValueError(f"delta must be positive, got {delta}")
    events = log.events
    if events.empty:
        raise EmptyInputError("event log is empty")
    if horizon < burn_in:
        raise EmptyInputError(f"horizon {horizon} precedes burn_in {burn_in}")

    # small slack so that an exact multiple of delta lands on the horizon
    n_samples = int(np.floor((horizon - burn_in) / delta + 1e-9)) + 1
    sample_times = burn_in + delta * np.arange(n_samples)

    quoted = events[events["mid_after"].notna()]
    times = quoted["time"].to_numpy(dtype=float)
    mids = quoted["mid_after"].to_numpy(dtype=float)
    if len(mids) == 0:
        values = np.full(n_samples, float(log.meta.p_ref))
    else:
        idx = np.searchsorted(times, sample_times, side="right") - 1
        values = np.where(idx >= 0, mids[np.maximum(idx, 0)], float(log.meta.p_ref))
    return SampledSeries(delta=delta, t0=burn_in, values=values)


def log_returns(series: SampledSeries) -> SampledSeries:
    """r_t = log p_t - log p_{t-1}."""
    values = np.asarray(series.values, dtype=float)
    if len(values) < 2:
        raise TooFewValuesError("need at least two prices for a return")
    if not np.all(np.isfinite(values)):
        raise NonFinitePriceError("log returns need finite prices")
    if np.any(values <= 0):
        raise NonPositivePriceError("log returns need strictly positive prices")
    return SampledSeries(
        delta=series.delta, t0=series.t0 + series.delta, values=np.diff(np.log(values))
    )


def trade_signs(log: EventLog, burn_in: float = 0.0) -> TradeSignSeries:
    trades = log.trades
    aggressor = trades.loc[trades["time"] >= burn_in, "aggressor"]
    signs = np.where(aggressor.to_numpy() == Side.BID.value, 1, -1).astype(np.int64)
    return TradeSignSeries(signs=signs)


def inter_event_times(log: EventLog, burn_in: float = 0.0) -> np.ndarray:
    """
    Gaps between consecutive actions of any kind (orders of every origin and
    cancellations). Simultaneous actions give 0, which is kept.
    """
    times = log.events.loc[log.events["time"] >= burn_in, "time"].to_numpy(dtype=float)
    if len(times) < 2:
        raise TooFewEventsError(f"need at least two events after {burn_in}, got {len(times)}")
    return np.diff(times)
