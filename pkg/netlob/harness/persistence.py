"""
CSV and JSON persistence of event logs and aggregated statistics.

Prices are written as decimal strings with exactly the tick's precision and
parsed back to integer ticks; every other float is written with the shortest
repr that round-trips and read with float_precision="round_trip", so a
reloaded log is bit-identical to the in-memory one.
"""

from __future__ import annotations

import json
import logging
from decimal import Decimal
from pathlib import Path
from typing import Any, Mapping, Optional

import numpy as np
import pandas as pd

from ..core import format_price
from ..kernel.eventlog import (
    EVENT_COLUMNS,
    EVENT_DTYPES,
    TRADE_COLUMNS,
    TRADE_DTYPES,
    EventLog,
    LogMeta,
)
from ..stats import AcfResult, Histogram

logger = logging.getLogger(__name__)

EVENTS_FILE = "events.csv"
TRADES_FILE = "trades.csv"
DEPTH_FILE = "depth.csv"
META_FILE = "meta.json"

ACF_COLUMNS = ["lag", "value", "realization", "series"]
HIST_COLUMNS = ["bin_left", "bin_right", "count"]
SUMMARY_COLUMNS = ["scenario", "metric", "value"]

_READ_OPTIONS: dict[str, Any] = {
    "float_precision": "round_trip",
    "keep_default_na": False,
    "na_values": [""],
    "encoding": "utf-8",
}


# === LOW LEVEL ===


def write_csv(frame: pd.DataFrame, path: str | Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    frame.to_csv(path, index=False, lineterminator="\n", encoding="utf-8")
    return path


def write_json(data: Mapping[str, Any], path: str | Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(data, indent=2, sort_keys=True) + "\n", encoding="utf-8")
    return path


def read_json(path: str | Path) -> dict[str, Any]:
    return json.loads(Path(path).read_text(encoding="utf-8"))


def parse_price(text: str, tick_size: float) -> int:
    """'98.25' at tick 0.01 -> 9825; a price off the tick grid is an error."""
    ticks = Decimal(text) / Decimal(str(tick_size))
    if ticks != ticks.to_integral_value():
        raise ValueError(f"price {text} is not a multiple of tick {tick_size}")
    return int(ticks)


def _format_prices(column: pd.Series, tick_size: float) -> pd.Series:
    return column.map(lambda p: "" if pd.isna(p) else format_price(int(p), tick_size))


def _parse_prices(column: pd.Series, tick_size: float) -> pd.Series:
    return column.map(lambda p: pd.NA if pd.isna(p) else parse_price(str(p), tick_size))


# === EVENT LOGS ===


def write_event_log(log: EventLog, directory: str | Path) -> dict[str, Path]:
    """events.csv, trades.csv, depth.csv (if present) and meta.json into `directory`."""
    directory = Path(directory)
    tick = log.meta.tick_size

    events = log.events.copy()
    events["price"] = _format_prices(events["price"], tick)
    trades = log.trades.copy()
    trades["price"] = _format_prices(trades["price"], tick)

    paths = {
        "events": write_csv(events, directory / EVENTS_FILE),
        "trades": write_csv(trades, directory / TRADES_FILE),
        "meta": write_json(log.meta.to_dict(), directory / META_FILE),
    }
    if log.depth is not None:
        depth = log.depth.copy()
        depth["price"] = _format_prices(depth["price"], tick)
        paths["depth"] = write_csv(depth, directory / DEPTH_FILE)
    return paths


def read_event_log(
    events_path: str | Path,
    trades_path: Optional[str | Path] = None,
    meta: Optional[LogMeta | str | Path] = None,
    *,
    tick_size: float = 0.01,
    p_ref: float = 100.0,
) -> EventLog:
    """
    Reload a persisted log. trades.csv and meta.json default to the files next
    to events.csv; without metadata, burn-in is 0, the horizon is the last
    event time and tick_size and p_ref come from the keywords.
    """
    events_path = Path(events_path)
    if trades_path is None and (events_path.parent / TRADES_FILE).exists():
        trades_path = events_path.parent / TRADES_FILE
    if meta is None and (events_path.parent / META_FILE).exists():
        meta = events_path.parent / META_FILE
    if isinstance(meta, (str, Path)):
        meta = LogMeta.from_dict(read_json(meta))

    tick = meta.tick_size if meta is not None else tick_size
    events = pd.read_csv(
        events_path, dtype={"action": str, "side": str, "price": str}, **_READ_OPTIONS
    )
    missing = set(EVENT_COLUMNS) - set(events.columns)
    if missing:
        raise ValueError(f"{events_path}: missing columns {sorted(missing)}")
    events["price"] = _parse_prices(events["price"], tick)
    events = events[EVENT_COLUMNS].astype(EVENT_DTYPES)

    if trades_path is not None:
        trades = pd.read_csv(trades_path, dtype={"price": str, "aggressor": str}, **_READ_OPTIONS)
        trades["price"] = _parse_prices(trades["price"], tick)
        trades = trades[TRADE_COLUMNS].astype(TRADE_DTYPES)
    else:
        trades = pd.DataFrame({c: [] for c in TRADE_COLUMNS}).astype(TRADE_DTYPES)

    if meta is None:
        horizon = float(events["time"].iloc[-1]) if len(events) else 0.0
        meta = LogMeta(
            seed=0,
            n_agents=int(events["agent"].max()) + 1 if len(events) else 0,
            network="unknown",
            q=float("nan"),
            tick_size=tick,
            p_ref=p_ref,
            horizon=horizon,
            burn_in=0.0,
        )
    return EventLog(events=events, trades=trades, meta=meta)


# === STATISTICS ===


def acf_frame(acfs: Mapping[str, AcfResult], realization: str | int) -> pd.DataFrame:
    """Long rows lag,value,realization,series for each named acf curve."""
    frames = [
        pd.DataFrame(
            {
                "lag": acf.lags.astype(np.int64),
                "value": acf.values,
                "realization": str(realization),
                "series": series,
            }
        )
        for series, acf in acfs.items()
    ]
    return pd.concat(frames, ignore_index=True)[ACF_COLUMNS]


def read_acf(path: str | Path) -> pd.DataFrame:
    return pd.read_csv(path, dtype={"realization": str, "series": str}, **_READ_OPTIONS)


def hist_frame(hist: Histogram) -> pd.DataFrame:
    return pd.DataFrame(
        {"bin_left": hist.edges[:-1], "bin_right": hist.edges[1:], "count": hist.counts}
    )


def read_hist(path: str | Path) -> pd.DataFrame:
    return pd.read_csv(path, **_READ_OPTIONS)


def summary_frame(scenario: str, metrics: Mapping[str, float]) -> pd.DataFrame:
    return pd.DataFrame(
        {
            "scenario": scenario,
            "metric": list(metrics),
            "value": [float(v) for v in metrics.values()],
        },
        columns=SUMMARY_COLUMNS,
    )


def read_summary(path: str | Path) -> pd.DataFrame:
    return pd.read_csv(path, dtype={"scenario": str, "metric": str}, **_READ_OPTIONS)
