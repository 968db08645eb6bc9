"""
Run documents, scenario orchestration, persistence and comparison
"""

from .compare import Comparison, compare_scenarios, summary_table, write_comparison
from .config import config_from_mapping, load_config, parse_config, parse_document
from .gnuplot import plot_script
from .persistence import (
    acf_frame,
    hist_frame,
    parse_price,
    read_acf,
    read_event_log,
    read_hist,
    read_summary,
    write_csv,
    write_event_log,
    write_json,
)
from .scenario import (
    Aggregate,
    ScenarioResult,
    aggregate_diagnostics,
    return_edges,
    run_realization,
    run_scenario,
    write_aggregate,
)

__all__ = [
    "Aggregate",
    "Comparison",
    "ScenarioResult",
    "acf_frame",
    "aggregate_diagnostics",
    "compare_scenarios",
    "config_from_mapping",
    "hist_frame",
    "load_config",
    "parse_config",
    "parse_document",
    "parse_price",
    "plot_script",
    "read_acf",
    "read_event_log",
    "read_hist",
    "read_summary",
    "return_edges",
    "run_realization",
    "run_scenario",
    "summary_table",
    "write_aggregate",
    "write_comparison",
    "write_csv",
    "write_event_log",
    "write_json",
]
