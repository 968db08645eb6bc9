"""
Message-driven event loop: source actions, order execution and cascades
"""

from __future__ import annotations

import logging
import time as wallclock
from dataclasses import asdict, dataclass
from typing import Optional

import pandas as pd

from .. import network_api
from ..book import OrderBook
from ..contracts import NetworkKind, SimConfig
from ..core import BookQuotes, ExecutionReport, OrderKind, Side
from ..errors import OrderGoneError, RunawayCascadeError
from ..networks import Graph, Topology
from .agents import (
    AgentState,
    pick_cancellation_target,
    sample_direction,
    sample_limit_price,
    sample_volume,
    sample_waiting_time,
)
from .eventlog import Action, EventLog, EventLogBuilder, EventLogRecord, LogMeta, RunCounters
from .events import (
    Event,
    EventQueue,
    FollowUp,
    SourceCancel,
    SourceLimit,
    SourceMarket,
)
from .spreading import Spreader
from .streams import RealizationStreams, spawn_streams

logger = logging.getLogger(__name__)

PROGRESS_EVERY = 50_000


@dataclass
class MidTracker:
    """Last two-sided mid; limit prices fall back to it on a one-sided book."""

    last_valid_mid: float

    def update(self, quotes: BookQuotes) -> Optional[float]:
        if quotes.mid is not None:
            self.last_valid_mid = quotes.mid
        return quotes.mid


def init_schedule(config: SimConfig, streams: RealizationStreams) -> EventQueue:
    """First market, limit and cancel action of every agent, on independent clocks."""
    params = config.agent_params
    queue = EventQueue()
    for agent, s in enumerate(streams.agents):
        queue.schedule(sample_waiting_time(params.lambda_m, s.market), SourceMarket(agent))
        queue.schedule(sample_waiting_time(params.lambda_l, s.limit), SourceLimit(agent))
        queue.schedule(sample_waiting_time(params.lambda_c, s.cancel), SourceCancel(agent))
    return queue


class Simulation:
    """One realization: book, agents, network and clock. Strictly single-threaded."""

    def __init__(
        self,
        config: SimConfig,
        graph: Optional[Topology] = None,
        streams: Optional[RealizationStreams] = None,
    ):
        self.config = config
        self.params = config.agent_params
        self.streams = streams or spawn_streams(config.seed, config.n_agents)
        if graph is None and config.network is not NetworkKind.NONE:
            graph = network_api.build_for_config(config, self.streams.network)
        self.graph = graph
        self.book = OrderBook(config.tick_size)
        self.agents = [AgentState(i) for i in range(config.n_agents)]
        self.mid = MidTracker(config.p_ref)
        self.queue = init_schedule(config, self.streams)
        self.counters = RunCounters()
        self.log = EventLogBuilder()
        self.spreader = (
            Spreader(graph, config.q, self.params.lambda_f, self.streams.spread, self.queue)
            if graph is not None
            else None
        )

    # === HANDLERS ===

    def handle_source_action(self, event: Event) -> list[EventLogRecord]:
        payload = event.payload
        if isinstance(payload, SourceMarket):
            return self._source_order(event, OrderKind.MARKET)
        elif isinstance(payload, SourceLimit):
            return self._source_order(event, OrderKind.LIMIT)
        elif isinstance(payload, SourceCancel):
            return self._source_cancel(event)
        else:
            raise TypeError(f"not a source action: {payload!r}")

    def handle_followup(self, event: Event) -> list[EventLogRecord]:
        payload = event.payload
        if not isinstance(payload, FollowUp):
            raise TypeError(f"not a follow-up: {payload!r}")
        rng = self.streams.spread
        self.counters.followups_executed += 1
        record = self._place(
            event,
            payload.agent,
            payload.order_kind,
            payload.direction,
            rng,
            action=(
                Action.FOLLOWUP_MARKET
                if payload.order_kind is OrderKind.MARKET
                else Action.FOLLOWUP_LIMIT
            ),
            cascade_id=payload.cascade_id,
            depth=payload.depth,
        )
        self.propagate(
            payload.agent,
            payload.order_kind,
            payload.direction,
            payload.sender,
            payload.cascade_id,
            payload.depth,
            event.time,
        )
        return [record]

    def propagate(
        self,
        origin_agent: int,
        order_kind: OrderKind,
        direction: Side,
        excluded_sender: Optional[int],
        cascade_id: int,
        depth: int,
        now: float,
    ) -> int:
        if self.spreader is None:
            return 0
        scheduled = self.spreader.propagate(
            origin_agent, order_kind, direction, excluded_sender, cascade_id, depth, now
        )
        self.counters.followups_scheduled += scheduled
        return scheduled

    def _source_order(self, event: Event, kind: OrderKind) -> list[EventLogRecord]:
        agent = event.payload.agent
        agent_streams = self.streams.agents[agent]
        if kind is OrderKind.MARKET:
            rng, mean = agent_streams.market, self.params.lambda_m
            self.counters.source_market += 1
            action = Action.MARKET_PLACED
        else:
            rng, mean = agent_streams.limit, self.params.lambda_l
            self.counters.source_limit += 1
            action = Action.LIMIT_PLACED

        direction = sample_direction(rng)
        record = self._place(
            event, agent, kind, direction, rng, action=action, cascade_id=event.seq, depth=0
        )
        self.queue.schedule(
            event.time + sample_waiting_time(mean, rng), type(event.payload)(agent)
        )
        self.propagate(agent, kind, direction, None, event.seq, 0, event.time)
        return [record]

    def _source_cancel(self, event: Event) -> list[EventLogRecord]:
        agent = event.payload.agent
        rng = self.streams.agents[agent].cancel
        self.counters.source_cancel += 1
        state = self.agents[agent]

        side, price, volume = None, None, 0
        target = pick_cancellation_target(state, rng)
        if target is None:
            self.counters.noop_cancels += 1
        else:
            order = self.book.get_order(target)
            state.active_orders.discard(target)
            try:
                volume = self.book.cancel(target)
            except OrderGoneError:
                logger.debug("agent %d: order %d already gone", agent, target)
                self.counters.noop_cancels += 1
            else:
                side, price = order.side, order.price

        # every cancel decision is an event, removing an order or not
        record = EventLogRecord(
            time=event.time,
            seq=event.seq,
            agent=agent,
            action=Action.CANCELLED,
            side=side,
            price=price,
            volume=volume,
            trades_triggered=0,
            mid_after=self.mid.update(self.book.quotes()),
            cascade_id=None,
            cascade_depth=None,
        )
        self.queue.schedule(
            event.time + sample_waiting_time(self.params.lambda_c, rng), SourceCancel(agent)
        )
        return [record]

    def _place(
        self,
        event: Event,
        agent: int,
        kind: OrderKind,
        direction: Side,
        rng,
        *,
        action: Action,
        cascade_id: int,
        depth: int,
    ) -> EventLogRecord:
        volume = sample_volume(self.params, rng)
        price = None
        if kind is OrderKind.MARKET:
            report = self.book.submit_market(agent, direction, volume, event.time)
            self.counters.discarded_volume += report.discarded_volume
        else:
            price = sample_limit_price(
                self.mid.last_valid_mid,
                self.params,
                rng,
                tick_size=self.config.tick_size,
                p_ref=self.config.p_ref,
            )
            report = self.book.submit_limit(agent, direction, price, volume, event.time)
            if report.resting_order is not None:
                self.agents[agent].active_orders.add(report.resting_order)
        self._settle(report)
        return EventLogRecord(
            time=event.time,
            seq=event.seq,
            agent=agent,
            action=action,
            side=direction,
            price=price,
            volume=volume,
            trades_triggered=len(report.trades),
            mid_after=self.mid.update(self.book.quotes()),
            cascade_id=cascade_id,
            cascade_depth=depth,
        )

    def _settle(self, report: ExecutionReport) -> None:
        for maker in report.filled_orders:
            self.agents[maker.agent].active_orders.discard(maker.id)
        if report.trades:
            self.counters.trades += len(report.trades)
            self.log.append_trades(report.trades)

    # === LOOP ===

    def step(self) -> list[EventLogRecord]:
        event = self.queue.pop()
        self.counters.events_processed += 1
        if isinstance(event.payload, FollowUp):
            records = self.handle_followup(event)
        else:
            records = self.handle_source_action(event)
        for record in records:
            self.log.append(record)
        return records

    def run(self) -> EventLog:
        config = self.config
        max_events = config.max_events
        started = wallclock.perf_counter()
        while self.queue:
            if self.queue.peek_time() > config.horizon:
                break
            if max_events is not None and self.counters.events_processed >= max_events:
                raise RunawayCascadeError(
                    f"seed {config.seed}: max_events={max_events} reached at "
                    f"t={self.queue.last_time:.3f} of {config.horizon}"
                )
            self.step()
            if self.counters.events_processed % PROGRESS_EVERY == 0:
                logger.debug(
                    "seed %d: %d events, t=%.1f, queue=%d",
                    config.seed,
                    self.counters.events_processed,
                    self.queue.last_time,
                    len(self.queue),
                )
        logger.debug(
            "seed %d: finished %d events in %.2fs",
            config.seed,
            self.counters.events_processed,
            wallclock.perf_counter() - started,
        )
        return self.log.build(self._meta(), depth=self.depth_frame())

    def depth_frame(self) -> pd.DataFrame:
        rows = [
            (level.side.value, level.price, level.volume, level.orders)
            for level in self.book.depth_snapshot()
        ]
        return pd.DataFrame(rows, columns=["side", "price", "volume", "orders"]).astype(
            {"side": "object", "price": "int64", "volume": "int64", "orders": "int64"}
        )

    def _meta(self) -> LogMeta:
        config = self.config
        return LogMeta(
            seed=config.seed,
            n_agents=config.n_agents,
            network=config.network.value,
            q=config.q,
            tick_size=config.tick_size,
            p_ref=config.p_ref,
            horizon=config.horizon,
            burn_in=config.burn_in,
            counters={**asdict(self.counters), "source_events": self.counters.source_events},
            graph=self.graph.summary() if isinstance(self.graph, Graph) else None,
            final_resting_orders=self.book.resting_orders,
        )


def run(config: SimConfig, graph: Optional[Topology] = None) -> EventLog:
    """Simulate one realization up to config.horizon."""
    return Simulation(config, graph=graph).run()
