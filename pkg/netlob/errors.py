"""
Exception hierarchy for netlob.

Input-shaped failures also derive from ValueError so that callers written
against plain ValueError keep working.
"""

from __future__ import annotations


class NetlobError(Exception):
    """Base class for every error raised by netlob."""


# === MATCHING ENGINE ===


class InvalidOrderError(NetlobError, ValueError):
    """Order rejected before touching the book (bad volume or price)."""


class OrderGoneError(NetlobError, KeyError):
    """Order already fully executed or cancelled."""

    def __init__(self, order_id: int):
        super().__init__(order_id)
        self.order_id = order_id

    def __str__(self) -> str:
        return f"order {self.order_id} is no longer resting"


# === NETWORK ===


class NetworkParameterError(NetlobError, ValueError):
    """Generator parameters outside their admissible range."""


class NodeOutOfRangeError(NetlobError, IndexError):
    """Node index not in 0..n-1."""


# === KERNEL ===


class RunawayCascadeError(NetlobError, RuntimeError):
    """Event budget (max_events) exhausted before the horizon."""


# === STATS ===


class EmptyInputError(NetlobError, ValueError):
    pass


class ConstantSeriesError(NetlobError, ValueError):
    """Zero variance: the correlation estimator has no denominator."""


class NonPositivePriceError(NetlobError, ValueError):
    pass


class NonFinitePriceError(NetlobError, ValueError):
    pass


class NonPositiveValueError(NetlobError, ValueError):
    """Log binning needs strictly positive values."""


class NonPositivePointError(NetlobError, ValueError):
    """A point inside a log-scale fit range is not strictly positive."""


class TooFewTradesError(NetlobError, ValueError):
    pass


class TooFewEventsError(NetlobError, ValueError):
    pass


class TooFewValuesError(NetlobError, ValueError):
    pass


# === HARNESS ===


class ConfigParseError(NetlobError, ValueError):
    def __init__(self, message: str, line: int | None = None, key: str | None = None):
        self.line = line
        self.key = key
        where = []
        if line is not None:
            where.append(f"line {line}")
        if key is not None:
            where.append(f"key '{key}'")
        prefix = f"{', '.join(where)}: " if where else ""
        super().__init__(f"{prefix}{message}")


class ConfigValidationError(NetlobError, ValueError):
    pass


class IncompatibleStatsError(NetlobError, ValueError):
    """Scenario results were computed on different grids."""


class RealizationFailedError(NetlobError, RuntimeError):
    def __init__(self, realization: int, seed: int, cause: BaseException):
        self.realization = realization
        self.seed = seed
        self.cause = cause
        super().__init__(
            f"realization {realization} (seed {seed}) failed: "
            f"{type(cause).__name__}: {cause}"
        )
