"""
Per-event records of a realization and the columnar log they build
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from enum import Enum
from typing import Any, Optional

import numpy as np
import pandas as pd

from ..core import Side, TickPrice, Trade

EVENT_COLUMNS = [
    "time",
    "seq",
    "agent",
    "action",
    "side",
    "price",
    "volume",
    "trades",
    "mid_after",
    "cascade_id",
    "cascade_depth",
]
TRADE_COLUMNS = ["time", "price", "volume", "aggressor", "maker_order", "taker_agent"]

EVENT_DTYPES = {
    "time": "float64",
    "seq": "int64",
    "agent": "int64",
    "action": "object",
    "side": "object",
    "price": "Int64",
    "volume": "int64",
    "trades": "int64",
    "mid_after": "float64",
    "cascade_id": "Int64",
    "cascade_depth": "Int64",
}
TRADE_DTYPES = {
    "time": "float64",
    "price": "int64",
    "volume": "int64",
    "aggressor": "object",
    "maker_order": "int64",
    "taker_agent": "int64",
}


class Action(str, Enum):
    LIMIT_PLACED = "LimitPlaced"
    MARKET_PLACED = "MarketPlaced"
    CANCELLED = "Cancelled"
    FOLLOWUP_LIMIT = "FollowUpLimit"
    FOLLOWUP_MARKET = "FollowUpMarket"


ORDER_ACTIONS = frozenset(
    a.value for a in Action if a is not Action.CANCELLED
)
FOLLOWUP_ACTIONS = frozenset({Action.FOLLOWUP_LIMIT.value, Action.FOLLOWUP_MARKET.value})


@dataclass(frozen=True, slots=True)
class EventLogRecord:
    time: float
    seq: int
    agent: int
    action: Action
    # None on cancellations that found nothing to remove
    side: Optional[Side]
    price: Optional[TickPrice]
    volume: int
    trades_triggered: int
    mid_after: Optional[float]
    # None on cancellations: they open no cascade
    cascade_id: Optional[int]
    cascade_depth: Optional[int]


@dataclass
class RunCounters:
    source_market: int = 0
    source_limit: int = 0
    source_cancel: int = 0
    noop_cancels: int = 0
    followups_scheduled: int = 0
    followups_executed: int = 0
    trades: int = 0
    discarded_volume: int = 0
    events_processed: int = 0

    @property
    def source_events(self) -> int:
        return self.source_market + self.source_limit + self.source_cancel


@dataclass
class LogMeta:
    seed: int
    n_agents: int
    network: str
    q: float
    tick_size: float
    p_ref: float
    horizon: float
    burn_in: float
    counters: dict[str, int] = field(default_factory=dict)
    graph: Optional[dict[str, float]] = None
    final_resting_orders: int = 0

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> LogMeta:
        return cls(**data)


@dataclass
class EventLog:
    """Time-ordered action records plus the trades they triggered."""

    events: pd.DataFrame
    trades: pd.DataFrame
    meta: LogMeta
    # book at the horizon: side, price, volume, orders
    depth: Optional[pd.DataFrame] = None

    def __len__(self) -> int:
        return len(self.events)

    def after(self, burn_in: float) -> EventLog:
        """Records with time >= burn_in (both tables)."""
        return EventLog(
            events=self.events[self.events["time"] >= burn_in].reset_index(drop=True),
            trades=self.trades[self.trades["time"] >= burn_in].reset_index(drop=True),
            meta=self.meta,
            depth=self.depth,
        )

    def followups(self) -> pd.DataFrame:
        return self.events[self.events["action"].isin(FOLLOWUP_ACTIONS)]

    def cascade_sizes(self, since: float = 0.0) -> pd.Series:
        """
        Follow-up orders per cascade id; a source nobody followed counts 0.
        Only cascades whose source acted at or after `since` are kept, with
        every one of their follow-ups counted.
        """
        orders = self.events[self.events["action"].isin(ORDER_ACTIONS)]
        is_followup = orders["action"].isin(FOLLOWUP_ACTIONS)
        sizes = is_followup.groupby(orders["cascade_id"]).sum()
        roots = orders.loc[~is_followup & (orders["time"] >= since), "cascade_id"]
        return sizes.reindex(pd.Index(roots)).astype(np.int64)


class EventLogBuilder:
    """Columnar accumulator; cheaper than a DataFrame append per event."""

    def __init__(self) -> None:
        self._events: dict[str, list] = {name: [] for name in EVENT_COLUMNS}
        self._trades: dict[str, list] = {name: [] for name in TRADE_COLUMNS}

    def __len__(self) -> int:
        return len(self._events["seq"])

    def append(self, record: EventLogRecord) -> None:
        ev = self._events
        ev["time"].append(record.time)
        ev["seq"].append(record.seq)
        ev["agent"].append(record.agent)
        ev["action"].append(record.action.value)
        ev["side"].append(np.nan if record.side is None else record.side.value)
        ev["price"].append(record.price)
        ev["volume"].append(record.volume)
        ev["trades"].append(record.trades_triggered)
        ev["mid_after"].append(np.nan if record.mid_after is None else record.mid_after)
        ev["cascade_id"].append(record.cascade_id)
        ev["cascade_depth"].append(record.cascade_depth)

    def append_trades(self, trades: list[Trade]) -> None:
        tr = self._trades
        for trade in trades:
            tr["time"].append(trade.time)
            tr["price"].append(trade.price)
            tr["volume"].append(trade.volume)
            tr["aggressor"].append(trade.aggressor_side.value)
            tr["maker_order"].append(trade.maker_order)
            tr["taker_agent"].append(trade.taker_agent)

    def build(self, meta: LogMeta, depth: Optional[pd.DataFrame] = None) -> EventLog:
        events = pd.DataFrame(self._events, columns=EVENT_COLUMNS).astype(EVENT_DTYPES)
        trades = pd.DataFrame(self._trades, columns=TRADE_COLUMNS).astype(TRADE_DTYPES)
        return EventLog(events=events, trades=trades, meta=meta, depth=depth)
