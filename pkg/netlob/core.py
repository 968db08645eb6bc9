"""
Core domain types for netlob: sides, tick prices, orders, trades and quotes
"""

from __future__ import annotations

from dataclasses import dataclass, field
from decimal import Decimal
from enum import Enum
from typing import NamedTuple, Optional

# Prices inside the book are integer numbers of ticks.
TickPrice = int


class Side(str, Enum):
    BID = "bid"
    ASK = "ask"

    @property
    def sign(self) -> int:
        """+1 for buy, -1 for sell (trade-sign convention)."""
        return 1 if self is Side.BID else -1

    @property
    def opposite(self) -> Side:
        return Side.ASK if self is Side.BID else Side.BID


class OrderKind(str, Enum):
    MARKET = "market"
    LIMIT = "limit"


def to_ticks(price: float, tick_size: float) -> TickPrice:
    """Round a real price to the closest tick (half away from zero)."""
    return round_half_away(price / tick_size)


def from_ticks(ticks: TickPrice | float, tick_size: float) -> float:
    return ticks * tick_size


def format_price(ticks: TickPrice, tick_size: float) -> str:
    """Decimal string with exactly the tick's precision, e.g. 9825 @ 0.01 -> '98.25'."""
    step = Decimal(str(tick_size))
    return str((Decimal(ticks) * step).quantize(step))


def round_half_away(x: float) -> int:
    """Round to the closest integer, .5 boundaries away from zero."""
    if x >= 0:
        return int(x + 0.5)
    return -int(-x + 0.5)


@dataclass(slots=True)
class LimitOrder:
    id: int
    agent: int
    side: Side
    price: TickPrice
    remaining_volume: int
    entry_time: float
    entry_seq: int


@dataclass(frozen=True, slots=True)
class Trade:
    time: float
    price: TickPrice
    volume: int
    aggressor_side: Side
    maker_order: int
    taker_agent: int
    maker_agent: int


@dataclass(slots=True)
class ExecutionReport:
    trades: list[Trade] = field(default_factory=list)
    resting_order: Optional[int] = None
    discarded_volume: int = 0
    # makers consumed to zero by this order
    filled_orders: list[LimitOrder] = field(default_factory=list)

    @property
    def executed_volume(self) -> int:
        return sum(t.volume for t in self.trades)


@dataclass(frozen=True, slots=True)
class BookQuotes:
    best_bid: Optional[TickPrice] = None
    best_ask: Optional[TickPrice] = None
    mid: Optional[float] = None
    spread: Optional[float] = None

    @classmethod
    def from_best(
        cls, best_bid: Optional[TickPrice], best_ask: Optional[TickPrice], tick_size: float
    ) -> BookQuotes:
        if best_bid is None or best_ask is None:
            return cls(best_bid=best_bid, best_ask=best_ask)
        return cls(
            best_bid=best_bid,
            best_ask=best_ask,
            mid=from_ticks((best_bid + best_ask) / 2, tick_size),
            spread=from_ticks(best_ask - best_bid, tick_size),
        )

    @property
    def two_sided(self) -> bool:
        return self.mid is not None


class DepthLevel(NamedTuple):
    side: Side
    price: TickPrice
    volume: int
    orders: int
