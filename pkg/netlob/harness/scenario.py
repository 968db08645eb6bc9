"""
Scenario orchestration: realizations, aggregation and the result directory
"""

from __future__ import annotations

import logging
import time as wallclock
from dataclasses import dataclass, field
from multiprocessing import Pool
from pathlib import Path
from typing import Any, Callable, Optional, Sequence

import networkx as nx
import numpy as np
import pandas as pd
import pydantic
import scipy

from ..__version__ import __version__
from ..contracts import RunConfig, StatsOptions
from ..errors import NetlobError, RealizationFailedError
from ..kernel import Simulation
from ..stats import (
    Histogram,
    RealizationDiagnostics,
    average_acf,
    compute_diagnostics,
    excess_kurtosis,
    fano_factor,
    gaussian_density,
    gaussian_moment_fit,
    histogram,
    log_bin_edges,
    log_binned_histogram,
    loglog_linear_fit,
    pool_histograms,
    semilog_linear_fit,
    waiting_tail_ratio,
)
from . import persistence as io

logger = logging.getLogger(__name__)

ACF_SERIES = ("abs_return", "return", "sign")
# lags over which the summary acf means are taken
SUMMARY_LAGS = (1, 50)


@dataclass
class Aggregate:
    """Pooled and averaged statistics over one or more realizations."""

    acf: pd.DataFrame
    returns_hist: Histogram
    waiting_hist: Optional[Histogram]
    gaussian: pd.DataFrame
    cascades: pd.DataFrame
    metrics: dict[str, float]


@dataclass
class ScenarioResult:
    name: str
    directory: Path
    meta: dict[str, Any]
    acf: pd.DataFrame
    returns_hist: pd.DataFrame
    waiting_hist: pd.DataFrame
    gaussian: pd.DataFrame
    cascades: pd.DataFrame
    summary: pd.DataFrame
    event_logs: list[Path] = field(default_factory=list)
    # not persisted: outputs stay byte-identical across reruns
    wall_time: Optional[float] = None

    def metrics(self) -> dict[str, float]:
        return dict(zip(self.summary["metric"], self.summary["value"].astype(float)))

    def metric(self, name: str) -> float:
        return self.metrics()[name]

    def mean_acf(self, series: str) -> pd.DataFrame:
        rows = self.acf[(self.acf["realization"] == "mean") & (self.acf["series"] == series)]
        return rows[["lag", "value"]].reset_index(drop=True)

    @classmethod
    def load(cls, directory: str | Path) -> ScenarioResult:
        directory = Path(directory)
        meta = io.read_json(directory / io.META_FILE)
        return cls(
            name=meta["scenario"],
            directory=directory,
            meta=meta,
            acf=io.read_acf(directory / "acf.csv"),
            returns_hist=io.read_hist(directory / "returns_hist.csv"),
            waiting_hist=io.read_hist(directory / "waiting_hist.csv"),
            gaussian=pd.read_csv(directory / "gaussian.csv", float_precision="round_trip"),
            cascades=pd.read_csv(directory / "cascades.csv"),
            summary=io.read_summary(directory / "summary.csv"),
            event_logs=sorted(directory.glob("realization_*/events.csv")),
        )


# === AGGREGATION ===


def return_edges(samples: Sequence[np.ndarray], bins: int) -> np.ndarray:
    """Symmetric linear edges spanning every pooled return, the maximum included."""
    half = max((float(np.abs(s).max()) for s in samples if len(s)), default=0.0)
    half = half or 1e-12
    edges = np.linspace(-half, half, bins + 1)
    edges[-1] = np.nextafter(half, np.inf)
    return edges


def _optional_metric(label: str, compute: Callable[[], Any]) -> Any:
    """Metrics that are undefined on this sample are reported as NaN."""
    try:
        return compute()
    except NetlobError as exc:
        logger.warning("%s undefined: %s", label, exc)
        return float("nan")


def aggregate_diagnostics(
    diagnostics: Sequence[RealizationDiagnostics],
    options: StatsOptions,
    labels: Optional[Sequence[str]] = None,
) -> Aggregate:
    """Histograms are summed over realizations, acf curves averaged per lag."""
    labels = list(labels) if labels is not None else [str(i) for i in range(len(diagnostics))]

    frames = []
    averaged = {}
    for series in ACF_SERIES:
        curves = [_curve(d, series) for d in diagnostics]
        averaged[series] = average_acf(curves)
        for label, curve in zip(labels, curves):
            frames.append(io.acf_frame({series: curve}, label))
    frames.append(io.acf_frame(averaged, "mean"))
    acf = pd.concat(frames, ignore_index=True)

    returns = [d.returns for d in diagnostics]
    pooled_returns = np.concatenate(returns)
    edges = return_edges(returns, options.return_bins)
    returns_hist = pool_histograms([histogram(r, edges) for r in returns if len(r)])

    waits = np.concatenate([d.waiting_times for d in diagnostics])
    positive = waits[waits > 0]
    waiting_hist = None
    if len(positive):
        w_edges = log_bin_edges(
            float(positive.min()), float(positive.max()), options.waiting_bins_per_decade
        )
        waiting_hist = pool_histograms(
            [
                log_binned_histogram(w[w > 0], options.waiting_bins_per_decade, w_edges)
                for w in (d.waiting_times for d in diagnostics)
                if np.any(w > 0)
            ]
        )

    mean, std = gaussian_moment_fit(pooled_returns)
    centers = returns_hist.centers
    gaussian = pd.DataFrame(
        {"x": centers, "density": gaussian_density(centers, mean, std) if std > 0 else np.nan}
    )

    counts = np.concatenate([d.activity_counts for d in diagnostics])

    sizes = np.concatenate([d.cascade_sizes for d in diagnostics])
    size_values, size_counts = np.unique(sizes, return_counts=True)
    cascades = pd.DataFrame({"size": size_values.astype(np.int64), "count": size_counts})

    sign, abs_r = averaged["sign"], averaged["abs_return"]
    lo, hi = SUMMARY_LAGS
    metrics: dict[str, float] = {
        "realizations": float(len(diagnostics)),
        "events_mean": float(np.mean([d.n_events for d in diagnostics])),
        "trades_mean": float(np.mean([d.n_trades for d in diagnostics])),
        "returns": float(len(pooled_returns)),
        "return_mean": mean,
        "return_std": std,
        "excess_kurtosis": _optional_metric(
            "excess kurtosis", lambda: excess_kurtosis(pooled_returns)
        ),
        "sign_acf_mean_1_50": sign.mean_over(lo, min(hi, sign.max_lag)),
        "abs_acf_mean_1_50": abs_r.mean_over(lo, min(hi, abs_r.max_lag)),
        "waiting_mean": float(waits.mean()) if len(waits) else float("nan"),
        "waiting_tail_ratio": (
            waiting_tail_ratio(waits) if len(waits) and waits.mean() > 0 else float("nan")
        ),
        "zero_waiting_times": float(len(waits) - len(positive)),
        "activity_fano": _optional_metric("activity fano factor", lambda: fano_factor(counts)),
        "cascade_mean": float(sizes.mean()) if len(sizes) else 0.0,
        "cascade_max": float(sizes.max()) if len(sizes) else 0.0,
        "followups": float(sizes.sum()),
    }
    sign_fit = _optional_metric(
        "sign acf fit",
        lambda: loglog_linear_fit(sign, (options.sign_fit_lo, options.sign_fit_hi)),
    )
    abs_fit = _optional_metric(
        "|r| acf fit",
        lambda: semilog_linear_fit(abs_r, (options.abs_fit_lo, options.abs_fit_hi)),
    )
    for prefix, fit in (("sign_fit", sign_fit), ("abs_fit", abs_fit)):
        metrics[f"{prefix}_slope"] = fit if isinstance(fit, float) else fit.slope
        metrics[f"{prefix}_intercept"] = fit if isinstance(fit, float) else fit.intercept

    return Aggregate(
        acf=acf,
        returns_hist=returns_hist,
        waiting_hist=waiting_hist,
        gaussian=gaussian,
        cascades=cascades,
        metrics=metrics,
    )


def _curve(diag: RealizationDiagnostics, series: str):
    return {
        "abs_return": diag.abs_return_acf,
        "return": diag.return_acf,
        "sign": diag.sign_acf,
    }[series]


def write_aggregate(name: str, agg: Aggregate, directory: str | Path) -> pd.DataFrame:
    """Scenario-level CSVs; returns the summary frame."""
    directory = Path(directory)
    io.write_csv(agg.acf, directory / "acf.csv")
    io.write_csv(io.hist_frame(agg.returns_hist), directory / "returns_hist.csv")
    waiting = (
        io.hist_frame(agg.waiting_hist)
        if agg.waiting_hist is not None
        else pd.DataFrame(columns=io.HIST_COLUMNS)
    )
    io.write_csv(waiting, directory / "waiting_hist.csv")
    io.write_csv(agg.gaussian, directory / "gaussian.csv")
    io.write_csv(agg.cascades, directory / "cascades.csv")
    summary = io.summary_frame(name, agg.metrics)
    io.write_csv(summary, directory / "summary.csv")
    return summary


# === REALIZATIONS ===


def run_realization(
    config: RunConfig, realization: int, directory: Path
) -> tuple[dict[str, Any], RealizationDiagnostics]:
    """Simulate, persist and analyse one realization; runs inside worker processes too."""
    sim_config = config.sim_config(realization)
    started = wallclock.perf_counter()
    logger.info("realization %d (seed %d) started", realization, sim_config.seed)

    log = Simulation(sim_config).run()
    out = directory / f"realization_{realization}"
    io.write_event_log(log, out)
    diag = compute_diagnostics(log, config.stats_options())
    io.write_csv(
        io.acf_frame(
            {s: _curve(diag, s) for s in ACF_SERIES},
            realization,
        ),
        out / "acf.csv",
    )
    logger.info(
        "realization %d (seed %d): %d events, %d trades in %.2fs -> %s",
        realization,
        sim_config.seed,
        len(log.events),
        len(log.trades),
        wallclock.perf_counter() - started,
        out,
    )
    return log.meta.to_dict(), diag


def _run_all(
    config: RunConfig, directory: Path
) -> list[tuple[dict[str, Any], RealizationDiagnostics]]:
    seeds = config.seeds()
    if config.jobs == 1 or config.realizations == 1:
        outputs = []
        for r, seed in enumerate(seeds):
            try:
                outputs.append(run_realization(config, r, directory))
            except Exception as exc:
                raise RealizationFailedError(r, seed, exc) from exc
        return outputs

    with Pool(processes=min(config.jobs, config.realizations)) as pool:
        pending = [
            pool.apply_async(run_realization, (config, r, directory))
            for r in range(config.realizations)
        ]
        outputs = []
        for r, (seed, job) in enumerate(zip(seeds, pending)):
            try:
                outputs.append(job.get())
            except Exception as exc:
                pool.terminate()
                raise RealizationFailedError(r, seed, exc) from exc
        return outputs


def scenario_meta(config: RunConfig, realization_meta: list[dict[str, Any]]) -> dict[str, Any]:
    return {
        "scenario": config.scenario_name,
        "config": config.model_dump(mode="json"),
        "versions": {
            "netlob": __version__,
            "numpy": np.__version__,
            "scipy": scipy.__version__,
            "pandas": pd.__version__,
            "networkx": nx.__version__,
            "pydantic": pydantic.VERSION,
        },
        "seeds": config.seeds(),
        "realizations": realization_meta,
    }


def run_scenario(config: RunConfig) -> ScenarioResult:
    """All realizations of one scenario, persisted under <output_dir>/<scenario>/."""
    directory = Path(config.output_dir) / config.scenario_name
    directory.mkdir(parents=True, exist_ok=True)
    started = wallclock.perf_counter()
    logger.info(
        "scenario %s: %d realization(s), network=%s, q=%s, jobs=%d",
        config.scenario_name,
        config.realizations,
        config.network.value,
        config.q,
        config.jobs,
    )

    outputs = _run_all(config, directory)
    metas = [meta for meta, _ in outputs]
    agg = aggregate_diagnostics(
        [diag for _, diag in outputs],
        config.stats_options(),
        labels=[str(r) for r in range(len(outputs))],
    )
    counters = [m["counters"] for m in metas]
    agg.metrics["source_events_mean"] = float(np.mean([c["source_events"] for c in counters]))
    agg.metrics["noop_cancels"] = float(sum(c["noop_cancels"] for c in counters))
    agg.metrics["discarded_volume"] = float(sum(c["discarded_volume"] for c in counters))

    summary = write_aggregate(config.scenario_name, agg, directory)
    meta = scenario_meta(config, metas)
    io.write_json(meta, directory / io.META_FILE)

    elapsed = wallclock.perf_counter() - started
    logger.info("scenario %s finished in %.2fs -> %s", config.scenario_name, elapsed, directory)
    return ScenarioResult(
        name=config.scenario_name,
        directory=directory,
        meta=meta,
        acf=agg.acf,
        returns_hist=io.hist_frame(agg.returns_hist),
        waiting_hist=(
            io.hist_frame(agg.waiting_hist)
            if agg.waiting_hist is not None
            else pd.DataFrame(columns=io.HIST_COLUMNS)
        ),
        gaussian=agg.gaussian,
        cascades=agg.cascades,
        summary=summary,
        event_logs=[directory / f"realization_{r}" / io.EVENTS_FILE for r in range(len(outputs))],
        wall_time=elapsed,
    )
