"""
Continuous double-auction limit order book with price-time priority.

Each side keeps a dict of price levels (FIFO deques) and a heap of level
prices for O(log L) best-price access. Cancellation is lazy: the order is
zeroed and dropped from the id index, and its queue slot is skipped the next
time matching reaches it.
"""

from __future__ import annotations

import heapq
import logging
from collections import deque
from typing import Optional

from .core import (
    BookQuotes,
    DepthLevel,
    ExecutionReport,
    LimitOrder,
    Side,
    TickPrice,
    Trade,
)
from .errors import InvalidOrderError, OrderGoneError

logger = logging.getLogger(__name__)


class PriceLevel:
    __slots__ = ("price", "queue", "volume", "count")

    def __init__(self, price: TickPrice):
        self.price = price
        self.queue: deque[LimitOrder] = deque()
        self.volume = 0
        self.count = 0

    def append(self, order: LimitOrder) -> None:
        self.queue.append(order)
        self.volume += order.remaining_volume
        self.count += 1


class BookSide:
    """One side of the book; the heap key is -price on the bid side."""

    def __init__(self, side: Side):
        self.side = side
        self._sign = -1 if side is Side.BID else 1
        self._levels: dict[TickPrice, PriceLevel] = {}
        self._heap: list[int] = []

    def __len__(self) -> int:
        return sum(1 for level in self._levels.values() if level.volume > 0)

    def add(self, order: LimitOrder) -> None:
        level = self._levels.get(order.price)
        if level is None:
            level = PriceLevel(order.price)
            self._levels[order.price] = level
            heapq.heappush(self._heap, self._sign * order.price)
        level.append(order)

    def level(self, price: TickPrice) -> Optional[PriceLevel]:
        return self._levels.get(price)

    def best_level(self) -> Optional[PriceLevel]:
        heap = self._heap
        while heap:
            price = self._sign * heap[0]
            level = self._levels[price]
            if level.volume > 0:
                return level
            heapq.heappop(heap)
            del self._levels[price]
        return None

    def best_price(self) -> Optional[TickPrice]:
        level = self.best_level()
        return None if level is None else level.price

    def live_levels(self) -> list[PriceLevel]:
        return sorted(
            (level for level in self._levels.values() if level.volume > 0),
            key=lambda level: level.price,
        )


class OrderBook:
    """Single-instrument book. Not thread-safe; one writer per instance."""

    def __init__(self, tick_size: float = 0.01):
        self.tick_size = tick_size
        self._bids = BookSide(Side.BID)
        self._asks = BookSide(Side.ASK)
        self._orders: dict[int, LimitOrder] = {}
        self._next_id = 1

    def _side(self, side: Side) -> BookSide:
        return self._bids if side is Side.BID else self._asks

    # === OPERATIONS ===

    def submit_limit(
        self, agent: int, side: Side, price: TickPrice, volume: int, time: float
    ) -> ExecutionReport:
        if volume < 1:
            raise InvalidOrderError(f"limit volume must be >= 1, got {volume}")
        if price < 1:
            raise InvalidOrderError(f"limit price must be >= 1 tick, got {price}")

        report = ExecutionReport()
        remaining = self._match(report, agent, side, volume, price, time)
        if remaining > 0:
            order = LimitOrder(
                id=self._next_id,
                agent=agent,
                side=side,
                price=price,
                remaining_volume=remaining,
                entry_time=time,
                entry_seq=self._next_id,
            )
            self._next_id += 1
            self._orders[order.id] = order
            self._side(side).add(order)
            report.resting_order = order.id
        return report

    def submit_market(
        self, agent: int, side: Side, volume: int, time: float
    ) -> ExecutionReport:
        if volume < 1:
            raise InvalidOrderError(f"market volume must be >= 1, got {volume}")

        report = ExecutionReport()
        remaining = self._match(report, agent, side, volume, None, time)
        if remaining > 0:
            report.discarded_volume = remaining
            logger.debug(
                "market %s from agent %d: %d of %d shares found no liquidity",
                side.value,
                agent,
                remaining,
                volume,
            )
        return report

    def cancel(self, order_id: int) -> int:
        order = self._orders.pop(order_id, None)
        if order is None:
            raise OrderGoneError(order_id)
        level = self._side(order.side).level(order.price)
        cancelled = order.remaining_volume
        order.remaining_volume = 0
        level.volume -= cancelled
        level.count -= 1
        if level.count == 0:
            level.queue.clear()
        return cancelled

    def quotes(self) -> BookQuotes:
        return BookQuotes.from_best(
            self._bids.best_price(), self._asks.best_price(), self.tick_size
        )

    def depth_snapshot(self) -> list[DepthLevel]:
        """Per-level aggregate, ascending price (bids first, then asks)."""
        return [
            DepthLevel(book_side.side, level.price, level.volume, level.count)
            for book_side in (self._bids, self._asks)
            for level in book_side.live_levels()
        ]

    # === QUERIES ===

    def get_order(self, order_id: int) -> Optional[LimitOrder]:
        return self._orders.get(order_id)

    def __contains__(self, order_id: int) -> bool:
        return order_id in self._orders

    @property
    def resting_orders(self) -> int:
        return len(self._orders)

    def resting_volume(self, side: Optional[Side] = None) -> int:
        sides = [self._side(side)] if side is not None else [self._bids, self._asks]
        return sum(level.volume for s in sides for level in s.live_levels())

    # === MATCHING ===

    def _match(
        self,
        report: ExecutionReport,
        agent: int,
        side: Side,
        volume: int,
        limit: Optional[TickPrice],
        time: float,
    ) -> int:
        """Consume the opposite side in price-then-FIFO order; return the remainder."""
        opposite = self._side(side.opposite)
        remaining = volume
        while remaining > 0:
            level = opposite.best_level()
            if level is None:
                break
            if limit is not None:
                if side is Side.BID and level.price > limit:
                    break
                if side is Side.ASK and level.price < limit:
                    break
            queue = level.queue
            while remaining > 0 and level.volume > 0:
                maker = queue[0]
                if maker.remaining_volume == 0:
                    queue.popleft()
                    continue
                qty = min(remaining, maker.remaining_volume)
                report.trades.append(
                    Trade(
                        time=time,
                        price=level.price,
                        volume=qty,
                        aggressor_side=side,
                        maker_order=maker.id,
                        taker_agent=agent,
                        maker_agent=maker.agent,
                    )
                )
                maker.remaining_volume -= qty
                level.volume -= qty
                remaining -= qty
                if maker.remaining_volume == 0:
                    queue.popleft()
                    level.count -= 1
                    del self._orders[maker.id]
                    report.filled_orders.append(maker)
        return remaining
