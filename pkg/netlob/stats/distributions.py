"""
Histograms (linear and log-binned), pooling and moment summaries
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np
from scipy import stats as sps

from ..errors import (
    ConstantSeriesError,
    EmptyInputError,
    NonPositiveValueError,
    TooFewValuesError,
)


@dataclass(frozen=True)
class Histogram:
    """
    Counts per half-open bin [edges[i], edges[i+1]). Values below the first
    edge go to underflow, values at or above the last edge to overflow.
    """

    edges: np.ndarray
    counts: np.ndarray
    underflow: int = 0
    overflow: int = 0
    log_bins: bool = False

    @property
    def total(self) -> int:
        return int(self.counts.sum()) + self.underflow + self.overflow

    @property
    def widths(self) -> np.ndarray:
        return np.diff(self.edges)

    @property
    def centers(self) -> np.ndarray:
        if self.log_bins:
            return np.sqrt(self.edges[:-1] * self.edges[1:])
        return (self.edges[:-1] + self.edges[1:]) / 2

    def density(self) -> np.ndarray:
        """Counts normalised by the full sample count and the bin width."""
        total = self.total
        if total == 0:
            return np.zeros(len(self.counts))
        return self.counts / (total * self.widths)


def histogram(
    values: Sequence[float] | np.ndarray, edges: Sequence[float] | np.ndarray
) -> Histogram:
    x = np.asarray(values, dtype=float)
    edges = np.asarray(edges, dtype=float)
    if len(x) == 0:
        raise EmptyInputError("cannot histogram an empty sample")
    if len(edges) < 2 or np.any(np.diff(edges) <= 0):
        raise ValueError("edges must be strictly increasing with at least two entries")

    index = np.searchsorted(edges, x, side="right") - 1
    n_bins = len(edges) - 1
    inside = (index >= 0) & (index < n_bins)
    counts = np.bincount(index[inside], minlength=n_bins).astype(np.int64)
    return Histogram(
        edges=edges,
        counts=counts,
        underflow=int(np.count_nonzero(index < 0)),
        overflow=int(np.count_nonzero(index >= n_bins)),
    )


def log_bin_edges(lo: float, hi: float, bins_per_decade: int) -> np.ndarray:
    """Edges 10**(k / bins_per_decade) covering [lo, hi] with hi strictly inside."""
    if lo <= 0 or hi <= 0:
        raise NonPositiveValueError("log bins need positive bounds")
    if bins_per_decade < 1:
        raise ValueError(f"bins_per_decade must be >= 1, got {bins_per_decade}")
    k_lo = int(np.floor(np.log10(lo) * bins_per_decade))
    k_hi = int(np.ceil(np.log10(hi) * bins_per_decade))
    edges = 10.0 ** (np.arange(k_lo, k_hi + 1) / bins_per_decade)
    if edges[0] > lo:
        edges = np.concatenate([[10.0 ** ((k_lo - 1) / bins_per_decade)], edges])
    while edges[-1] <= hi:
        edges = np.append(edges, edges[-1] * 10.0 ** (1 / bins_per_decade))
    return edges


def log_binned_histogram(
    values: Sequence[float] | np.ndarray,
    bins_per_decade: int,
    edges: np.ndarray | None = None,
) -> Histogram:
    x = np.asarray(values, dtype=float)
    if len(x) == 0:
        raise EmptyInputError("cannot histogram an empty sample")
    if np.any(x <= 0):
        raise NonPositiveValueError("log binning needs strictly positive values")
    if edges is None:
        edges = log_bin_edges(float(x.min()), float(x.max()), bins_per_decade)
    hist = histogram(x, edges)
    return Histogram(
        edges=hist.edges,
        counts=hist.counts,
        underflow=hist.underflow,
        overflow=hist.overflow,
        log_bins=True,
    )


def pool_histograms(hists: Sequence[Histogram]) -> Histogram:
    """Sum counts of histograms sharing the same edges."""
    if not hists:
        raise EmptyInputError("nothing to pool")
    first = hists[0]
    for hist in hists[1:]:
        if not np.array_equal(hist.edges, first.edges):
            raise ValueError("pooled histograms must share bin edges")
    return Histogram(
        edges=first.edges,
        counts=np.sum([h.counts for h in hists], axis=0).astype(np.int64),
        underflow=sum(h.underflow for h in hists),
        overflow=sum(h.overflow for h in hists),
        log_bins=first.log_bins,
    )


def gaussian_moment_fit(values: Sequence[float] | np.ndarray) -> tuple[float, float]:
    """Mean and standard deviation of the Gaussian with the sample's first two moments."""
    x = np.asarray(values, dtype=float)
    if len(x) < 4:
        raise TooFewValuesError(f"need at least 4 values, got {len(x)}")
    return float(x.mean()), float(x.std())


def excess_kurtosis(values: Sequence[float] | np.ndarray) -> float:
    """m4 / m2**2 - 3 (population moments)."""
    x = np.asarray(values, dtype=float)
    if len(x) < 4:
        raise TooFewValuesError(f"need at least 4 values, got {len(x)}")
    if np.ptp(x) == 0:
        raise ConstantSeriesError("kurtosis of a constant sample is undefined")
    return float(sps.kurtosis(x, fisher=True, bias=True))


def gaussian_density(x: np.ndarray, mean: float, std: float) -> np.ndarray:
    return sps.norm.pdf(x, loc=mean, scale=std)


def survival(values: Sequence[float] | np.ndarray, threshold: float) -> float:
    """Empirical P(X > threshold)."""
    x = np.asarray(values, dtype=float)
    if len(x) == 0:
        raise EmptyInputError("empty sample")
    return float(np.count_nonzero(x > threshold)) / len(x)


def waiting_tail_ratio(
    waiting_times: Sequence[float] | np.ndarray, multiple: float = 10.0
) -> float:
    """Survival at `multiple` times the mean over the exponential benchmark exp(-multiple)."""
    x = np.asarray(waiting_times, dtype=float)
    return survival(x, multiple * float(x.mean())) / float(np.exp(-multiple))


def window_counts(
    times: Sequence[float] | np.ndarray, window: float, start: float, stop: float
) -> np.ndarray:
    """
    Events per consecutive window [start + k*window, start + (k+1)*window).
    Only windows that end at or before stop are counted.
    """
    if window <= 0:
        raise NonPositiveValueError(f"window must be positive, got {window}")
    n_windows = int(np.floor((stop - start) / window + 1e-9))
    if n_windows <= 0:
        return np.zeros(0, dtype=np.int64)
    edges = start + window * np.arange(n_windows + 1)
    counts, _ = np.histogram(np.asarray(times, dtype=float), bins=edges)
    return counts.astype(np.int64)


def fano_factor(counts: Sequence[int] | np.ndarray) -> float:
    """Variance over mean of window counts; 1 for a Poisson stream."""
    x = np.asarray(counts, dtype=float)
    if len(x) < 2:
        raise TooFewValuesError(f"need at least 2 windows, got {len(x)}")
    if x.mean() == 0:
        raise EmptyInputError("no events in any window")
    return float(x.var(ddof=1) / x.mean())
