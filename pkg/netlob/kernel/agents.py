"""
Zero-intelligence order sampling: waiting times, direction, volume, limit
price and cancellation target.

Every sampler takes an explicit numpy Generator and keeps no state of its
own. Passing `size` returns an array of draws instead of a scalar.
"""

from __future__ import annotations

import math
from typing import Optional, Union

import numpy as np

from ..contracts import AgentParams
from ..core import Side, TickPrice, round_half_away

ArrayOrInt = Union[int, np.ndarray]


def sample_waiting_time(
    mean: float, rng: np.random.Generator, size: Optional[int] = None
) -> Union[float, np.ndarray]:
    if mean <= 0:
        raise ValueError(f"mean waiting time must be positive, got {mean}")
    return rng.exponential(mean, size)


def sample_direction(
    rng: np.random.Generator, size: Optional[int] = None
) -> Union[Side, np.ndarray]:
    """Bid or Ask with probability 1/2. Arrays come back as +1/-1 signs."""
    if size is None:
        return Side.BID if rng.random() < 0.5 else Side.ASK
    return np.where(rng.random(size) < 0.5, 1, -1)


def volume_from_draw(g: float) -> int:
    return max(1, round_half_away(g))


def sample_volume(
    params: AgentParams, rng: np.random.Generator, size: Optional[int] = None
) -> ArrayOrInt:
    """round(Normal(m_s, d_s)), never below one share."""
    if size is None:
        return volume_from_draw(rng.normal(params.m_s, params.d_s))
    g = rng.normal(params.m_s, params.d_s, size)
    rounded = np.sign(g) * np.floor(np.abs(g) + 0.5)
    return np.maximum(rounded, 1).astype(np.int64)


def price_from_draw(reference_mid: float, g: float, tick_size: float) -> TickPrice:
    return max(1, round_half_away(reference_mid * math.exp(g) / tick_size))


def sample_limit_price(
    reference_mid: float,
    params: AgentParams,
    rng: np.random.Generator,
    *,
    tick_size: float = 0.01,
    p_ref: float = 100.0,
    size: Optional[int] = None,
) -> ArrayOrInt:
    """
    reference_mid * exp(g), g ~ Normal(0, d_p / p_ref), rounded to the tick.
    The same law serves both sides.
    """
    if reference_mid <= 0:
        raise ValueError(f"reference mid must be positive, got {reference_mid}")
    sigma_log = params.d_p / p_ref
    if size is None:
        return price_from_draw(reference_mid, rng.normal(0.0, sigma_log), tick_size)
    x = reference_mid * np.exp(rng.normal(0.0, sigma_log, size)) / tick_size
    return np.maximum(np.floor(x + 0.5), 1).astype(np.int64)


class ActiveOrders:
    """Resting order ids of one agent with O(1) insert, remove and uniform pick."""

    __slots__ = ("_ids", "_pos")

    def __init__(self) -> None:
        self._ids: list[int] = []
        self._pos: dict[int, int] = {}

    def __len__(self) -> int:
        return len(self._ids)

    def __contains__(self, order_id: int) -> bool:
        return order_id in self._pos

    def __iter__(self):
        return iter(self._ids)

    def add(self, order_id: int) -> None:
        if order_id in self._pos:
            return
        self._pos[order_id] = len(self._ids)
        self._ids.append(order_id)

    def discard(self, order_id: int) -> None:
        pos = self._pos.pop(order_id, None)
        if pos is None:
            return
        last = self._ids.pop()
        if last != order_id:
            self._ids[pos] = last
            self._pos[last] = pos

    def pick(self, rng: np.random.Generator) -> Optional[int]:
        if not self._ids:
            return None
        return self._ids[int(rng.integers(len(self._ids)))]


class AgentState:
    __slots__ = ("agent", "active_orders")

    def __init__(self, agent: int):
        self.agent = agent
        self.active_orders = ActiveOrders()


def pick_cancellation_target(state: AgentState, rng: np.random.Generator) -> Optional[int]:
    """Uniform over the agent's resting orders; None when it has none."""
    return state.active_orders.pick(rng)
