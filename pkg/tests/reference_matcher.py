"""
Brute-force order matcher used as an oracle for netlob.book.

Every message rescans the whole order list; no levels, heaps or indexes.
Ids are handed out only to orders that come to rest, as in OrderBook.
"""

from __future__ import annotations

from dataclasses import dataclass

from netlob.core import Side


@dataclass
class RefOrder:
    id: int
    agent: int
    side: Side
    price: int
    remaining: int


class ReferenceBook:
    def __init__(self):
        self.orders: list[RefOrder] = []
        self.next_id = 1

    def _best(self, side: Side):
        live = [o for o in self.orders if o.side is side and o.remaining > 0]
        if not live:
            return None
        if side is Side.BID:
            return min(live, key=lambda o: (-o.price, o.id))
        return min(live, key=lambda o: (o.price, o.id))

    def _match(self, agent, side, volume, limit):
        trades = []
        remaining = volume
        while remaining > 0:
            maker = self._best(side.opposite)
            if maker is None:
                break
            if limit is not None:
                if side is Side.BID and maker.price > limit:
                    break
                if side is Side.ASK and maker.price < limit:
                    break
            qty = min(remaining, maker.remaining)
            trades.append((maker.price, qty, side, maker.id, agent))
            maker.remaining -= qty
            remaining -= qty
        return trades, remaining

    def submit_limit(self, agent, side, price, volume):
        trades, remaining = self._match(agent, side, volume, price)
        order_id = None
        if remaining > 0:
            order_id = self.next_id
            self.next_id += 1
            self.orders.append(RefOrder(order_id, agent, side, price, remaining))
        return trades, order_id

    def submit_market(self, agent, side, volume):
        return self._match(agent, side, volume, None)

    def cancel(self, order_id):
        for order in self.orders:
            if order.id == order_id and order.remaining > 0:
                cancelled = order.remaining
                order.remaining = 0
                return cancelled
        raise KeyError(order_id)

    def best(self, side):
        order = self._best(side)
        return None if order is None else order.price

    def depth(self):
        levels = {}
        for o in self.orders:
            if o.remaining > 0:
                volume, count = levels.get((o.side, o.price), (0, 0))
                levels[(o.side, o.price)] = (volume + o.remaining, count + 1)
        return [
            (side, price, volume, count)
            for side in (Side.BID, Side.ASK)
            for (s, price), (volume, count) in sorted(levels.items(), key=lambda kv: kv[0][1])
            if s is side
        ]
