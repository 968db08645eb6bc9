"""
Side-by-side comparison of scenario results
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

import numpy as np
import pandas as pd

from ..errors import IncompatibleStatsError
from . import persistence as io
from .gnuplot import plot_script
from .scenario import ScenarioResult

logger = logging.getLogger(__name__)

COMPARISON_COLUMNS = ["scenario", "diagnostic", "x", "value", "diff_vs_baseline"]

# options that must agree for curves to be overlaid
GRID_KEYS = (
    "delta",
    "acf_max_lag",
    "sign_max_lag",
    "return_bins",
    "waiting_bins_per_decade",
    "burst_window",
    "sign_fit_lo",
    "sign_fit_hi",
    "abs_fit_lo",
    "abs_fit_hi",
)


@dataclass
class Comparison:
    frame: pd.DataFrame
    summary_table: pd.DataFrame

    def diagnostic(self, name: str) -> pd.DataFrame:
        return self.frame[self.frame["diagnostic"] == name].reset_index(drop=True)


def check_compatible(results: Sequence[ScenarioResult]) -> None:
    baseline = results[0]
    base_config = baseline.meta.get("config", {})
    for other in results[1:]:
        config = other.meta.get("config", {})
        differing = [k for k in GRID_KEYS if config.get(k) != base_config.get(k)]
        if differing:
            raise IncompatibleStatsError(
                f"{other.name} vs {baseline.name}: stats options differ in {', '.join(differing)}"
            )
        for series in ("abs_return", "sign"):
            if not np.array_equal(
                baseline.mean_acf(series)["lag"], other.mean_acf(series)["lag"]
            ):
                raise IncompatibleStatsError(
                    f"{other.name} vs {baseline.name}: {series} acf lag grids differ"
                )


def _hist_density(hist: pd.DataFrame, log_bins: bool) -> pd.DataFrame:
    left, right = hist["bin_left"].to_numpy(float), hist["bin_right"].to_numpy(float)
    counts = hist["count"].to_numpy(float)
    total = counts.sum()
    x = np.sqrt(left * right) if log_bins else (left + right) / 2
    value = counts / (total * (right - left)) if total > 0 else np.zeros(len(counts))
    return pd.DataFrame({"x": x, "value": value})


def diagnostic_rows(result: ScenarioResult) -> pd.DataFrame:
    """Every plotted curve of one scenario as long rows (diagnostic, x, value)."""
    parts: list[tuple[str, pd.DataFrame]] = []
    for series in ("abs_return", "return", "sign"):
        curve = result.mean_acf(series).rename(columns={"lag": "x"})
        parts.append((f"{series}_acf", curve))
    parts.append(("returns_density", _hist_density(result.returns_hist, log_bins=False)))
    parts.append(("waiting_density", _hist_density(result.waiting_hist, log_bins=True)))
    parts.append(
        ("gaussian_density", result.gaussian.rename(columns={"density": "value"}))
    )
    counts = result.cascades["count"].to_numpy(float)
    parts.append(
        (
            "cascade_size",
            pd.DataFrame(
                {
                    "x": result.cascades["size"],
                    "value": counts / counts.sum() if counts.sum() > 0 else counts,
                }
            ),
        )
    )
    frames = [
        frame[["x", "value"]].astype(float).assign(diagnostic=name) for name, frame in parts
    ]
    rows = pd.concat(frames, ignore_index=True)
    rows.insert(0, "scenario", result.name)
    return rows


def summary_table(results: Sequence[ScenarioResult]) -> pd.DataFrame:
    """One row per scenario, one column per summary metric."""
    return pd.DataFrame([{"scenario": r.name, **r.metrics()} for r in results])


def compare_scenarios(results: Sequence[ScenarioResult]) -> Comparison:
    """Long-format overlay table; differences are taken against the first result."""
    if len(results) < 2:
        raise ValueError(f"need at least two scenario results, got {len(results)}")
    check_compatible(results)

    baseline = diagnostic_rows(results[0])[["diagnostic", "x", "value"]].rename(
        columns={"value": "baseline"}
    )
    frames = []
    for result in results:
        rows = diagnostic_rows(result).merge(baseline, on=["diagnostic", "x"], how="left")
        rows["diff_vs_baseline"] = rows["value"] - rows["baseline"]
        frames.append(rows[COMPARISON_COLUMNS])
    frame = pd.concat(frames, ignore_index=True)
    return Comparison(frame=frame, summary_table=summary_table(results))


def write_comparison(
    results: Sequence[ScenarioResult], out_dir: str | Path, gnuplot: bool = False
) -> dict[str, Path]:
    out_dir = Path(out_dir)
    comparison = compare_scenarios(results)
    paths = {
        "comparison": io.write_csv(comparison.frame, out_dir / "comparison.csv"),
        "summary_table": io.write_csv(comparison.summary_table, out_dir / "summary_table.csv"),
    }
    if gnuplot:
        script = plot_script([(r.name, r.directory) for r in results])
        paths["plots"] = out_dir / "plots.gp"
        paths["plots"].write_text(script, encoding="utf-8")
    for name, path in paths.items():
        logger.info("wrote %s: %s", name, path)
    return paths
