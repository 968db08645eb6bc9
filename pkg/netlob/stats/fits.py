"""
Least-squares lines in log-log and semilog-y coordinates
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Union

import numpy as np
from scipy import stats as sps

from ..errors import NonPositivePointError, TooFewValuesError
from .acf import AcfResult
from .distributions import Histogram

FitInput = Union[AcfResult, Histogram, tuple[np.ndarray, np.ndarray]]


class FitMode(str, Enum):
    LOGLOG = "log-log"
    SEMILOG_Y = "semilog-y"


@dataclass(frozen=True)
class TailFit:
    slope: float
    intercept: float
    mode: FitMode
    x_range: tuple[float, float]
    n_points: int


def _points(data: FitInput) -> tuple[np.ndarray, np.ndarray]:
    if isinstance(data, AcfResult):
        return data.lags.astype(float), data.values
    if isinstance(data, Histogram):
        return data.centers, data.density()
    x, y = data
    return np.asarray(x, dtype=float), np.asarray(y, dtype=float)


def _select(data: FitInput, x_range: tuple[float, float]) -> tuple[np.ndarray, np.ndarray]:
    x, y = _points(data)
    lo, hi = x_range
    mask = (x >= lo) & (x <= hi)
    x, y = x[mask], y[mask]
    if len(x) < 2:
        raise TooFewValuesError(f"fit range {x_range} holds {len(x)} points, need 2")
    return x, y


def loglog_linear_fit(data: FitInput, x_range: tuple[float, float]) -> TailFit:
    """OLS of log y on log x; the slope estimates a power-law exponent."""
    x, y = _select(data, x_range)
    if np.any(x <= 0) or np.any(y <= 0):
        raise NonPositivePointError(
            f"non-positive point inside {x_range}; narrow the range to exclude it"
        )
    fit = sps.linregress(np.log(x), np.log(y))
    return TailFit(float(fit.slope), float(fit.intercept), FitMode.LOGLOG, x_range, len(x))


def semilog_linear_fit(data: FitInput, x_range: tuple[float, float]) -> TailFit:
    """OLS of log y on x; the slope is minus an exponential decay rate."""
    x, y = _select(data, x_range)
    if np.any(y <= 0):
        raise NonPositivePointError(
            f"non-positive point inside {x_range}; narrow the range to exclude it"
        )
    fit = sps.linregress(x, np.log(y))
    return TailFit(float(fit.slope), float(fit.intercept), FitMode.SEMILOG_Y, x_range, len(x))
