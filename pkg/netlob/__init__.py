"""
netlob - continuous double auction with zero-intelligence agents whose
order decisions cascade over an interaction network
"""

from .__version__ import __version__
from .book import OrderBook
from .contracts import AgentParams, NetworkKind, RunConfig, SimConfig, StatsOptions
from .core import BookQuotes, DepthLevel, ExecutionReport, LimitOrder, OrderKind, Side, Trade
from .harness import (
    ScenarioResult,
    compare_scenarios,
    load_config,
    read_event_log,
    run_scenario,
    write_event_log,
)
from .kernel import EventLog, Simulation, run
from .network_api import build as build_network
from .networks import Graph
from .stats import compute_diagnostics

__all__ = [
    "__version__",
    "AgentParams",
    "BookQuotes",
    "DepthLevel",
    "EventLog",
    "ExecutionReport",
    "Graph",
    "LimitOrder",
    "NetworkKind",
    "OrderBook",
    "OrderKind",
    "RunConfig",
    "ScenarioResult",
    "Side",
    "SimConfig",
    "Simulation",
    "StatsOptions",
    "Trade",
    "build_network",
    "compare_scenarios",
    "compute_diagnostics",
    "load_config",
    "read_event_log",
    "run",
    "run_scenario",
    "write_event_log",
]
