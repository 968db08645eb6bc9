"""Simulation events and the (time, seq) ordered event list."""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import NamedTuple, Optional, Union

from ..core import OrderKind, Side


@dataclass(frozen=True, slots=True)
class SourceMarket:
    agent: int


@dataclass(frozen=True, slots=True)
class SourceLimit:
    agent: int


@dataclass(frozen=True, slots=True)
class SourceCancel:
    agent: int


@dataclass(frozen=True, slots=True)
class FollowUp:
    agent: int
    order_kind: OrderKind
    direction: Side
    sender: int
    cascade_id: int
    depth: int


SourcePayload = Union[SourceMarket, SourceLimit, SourceCancel]
EventPayload = Union[SourceMarket, SourceLimit, SourceCancel, FollowUp]


class Event(NamedTuple):
    time: float
    seq: int
    payload: EventPayload


class EventQueue:
    """
    Priority queue of events in lexicographic (time, seq) order.

    seq is handed out at scheduling time and never reused, so two events
    never compare equal and payloads are never compared.
    """

    def __init__(self) -> None:
        self._heap: list[Event] = []
        self._next_seq = 0
        self.last_time = float("-inf")

    def __len__(self) -> int:
        return len(self._heap)

    def schedule(self, time: float, payload: EventPayload) -> Event:
        if time < self.last_time:
            raise ValueError(
                f"cannot schedule at {time}: clock already at {self.last_time}"
            )
        event = Event(time, self._next_seq, payload)
        self._next_seq += 1
        heapq.heappush(self._heap, event)
        return event

    def peek_time(self) -> Optional[float]:
        return self._heap[0].time if self._heap else None

    def pop(self) -> Event:
        event = heapq.heappop(self._heap)
        self.last_time = event.time
        return event

    def snapshot(self) -> list[Event]:
        """Pending events in execution order (for inspection and tests)."""
        return sorted(self._heap)
