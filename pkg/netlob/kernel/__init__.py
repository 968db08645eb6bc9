"""
Discrete-event kernel: agents, events, spreading and the simulation loop
"""

from .agents import (
    ActiveOrders,
    AgentState,
    pick_cancellation_target,
    sample_direction,
    sample_limit_price,
    sample_volume,
    sample_waiting_time,
)
from .eventlog import Action, EventLog, EventLogRecord, LogMeta, RunCounters
from .events import Event, EventQueue, FollowUp, SourceCancel, SourceLimit, SourceMarket
from .simulation import MidTracker, Simulation, init_schedule, run
from .spreading import Spreader
from .streams import RealizationStreams, spawn_streams

__all__ = [
    "Action",
    "ActiveOrders",
    "AgentState",
    "Event",
    "EventLog",
    "EventLogRecord",
    "EventQueue",
    "FollowUp",
    "LogMeta",
    "MidTracker",
    "RealizationStreams",
    "RunCounters",
    "Simulation",
    "SourceCancel",
    "SourceLimit",
    "SourceMarket",
    "Spreader",
    "init_schedule",
    "pick_cancellation_target",
    "run",
    "sample_direction",
    "sample_limit_price",
    "sample_volume",
    "sample_waiting_time",
    "spawn_streams",
]
