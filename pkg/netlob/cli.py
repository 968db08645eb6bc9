"""
Command-line interface for netlob
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Optional, Sequence

from pydantic import ValidationError

from . import network_api
from .__version__ import __version__
from .contracts import NetworkKind, StatsOptions
from .errors import ConfigParseError, ConfigValidationError, NetworkParameterError
from .harness import (
    ScenarioResult,
    aggregate_diagnostics,
    load_config,
    plot_script,
    read_event_log,
    run_scenario,
    write_aggregate,
    write_comparison,
)
from .kernel.streams import network_rng
from .stats import compute_diagnostics

logger = logging.getLogger("netlob")

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_RUNTIME = 2

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


class _ArgumentParser(argparse.ArgumentParser):
    """argparse exits 2 on usage errors; runtime failures own that code here."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog="netlob",
        description="Limit order book simulator with order cascades over agent networks",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  netlob run --config presets/ba.cfg
  netlob run --config presets/none.cfg --realizations 2 --seed 100 --out /tmp/runs
  netlob stats --log results/ba/realization_0/events.csv --out /tmp/ba0
  netlob compare results/none results/lattice results/er results/ba --gnuplot
  netlob network --kind ba --n 1000 --m-attach 4 --seed 7 --export ba.edges
        """,
    )
    parser.add_argument("--version", action="version", version=f"netlob {__version__}")
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    verbosity.add_argument("-q", "--quiet", action="store_true", help="warnings only")

    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    run = sub.add_parser("run", help="simulate every realization of a scenario")
    run.add_argument("--config", required=True, type=Path, help="key = value run document")
    run.add_argument("--out", help="output directory (overrides output_dir)")
    run.add_argument("--realizations", type=int, help="overrides realizations")
    run.add_argument("--seed", type=int, help="overrides base_seed")
    run.add_argument("--jobs", type=int, help="worker processes (default: serial)")
    run.add_argument("--gnuplot", action="store_true", help="also write plots.gp")

    stats = sub.add_parser("stats", help="recompute statistics from a persisted event log")
    stats.add_argument("--log", required=True, type=Path, help="events.csv")
    stats.add_argument("--trades", type=Path, help="trades.csv (default: next to --log)")
    stats.add_argument("--meta", type=Path, help="meta.json (default: next to --log)")
    stats.add_argument("--out", type=Path, default=Path("stats"), help="output directory")
    stats.add_argument("--name", help="scenario label in summary.csv")
    stats.add_argument("--label", default="0", help="realization label in acf.csv")
    stats.add_argument("--burn-in", type=float, help="overrides the logged burn-in")
    stats.add_argument("--horizon", type=float, help="overrides the logged horizon")
    stats.add_argument("--tick-size", type=float, default=0.01, help="when no meta.json")
    stats.add_argument("--p-ref", type=float, default=100.0, help="when no meta.json")
    for name, field in StatsOptions.model_fields.items():
        stats.add_argument(
            f"--{name.replace('_', '-')}",
            type=field.annotation if field.annotation in (int, float) else float,
            help=f"{field.description or name} (default: {field.default})",
        )

    compare = sub.add_parser("compare", help="overlay scenario results")
    compare.add_argument("results", nargs="+", type=Path, metavar="RESULT_DIR")
    compare.add_argument("--out", type=Path, default=Path("."), help="output directory")
    compare.add_argument("--gnuplot", action="store_true", help="also write plots.gp")

    network = sub.add_parser("network", help="generate a network and dump its edge list")
    network.add_argument(
        "--kind",
        required=True,
        choices=[k for k in network_api.known_kinds() if k != NetworkKind.NONE.value],
    )
    network.add_argument("--n", type=int, default=1000, help="nodes (er, ba)")
    network.add_argument("--rows", type=int, default=25, help="lattice rows")
    network.add_argument("--cols", type=int, default=40, help="lattice columns")
    network.add_argument("--m", type=int, default=4000, help="edge count (er)")
    network.add_argument("--m-attach", type=int, default=4, help="edges per arrival (ba)")
    network.add_argument(
        "--seed", type=int, default=0, help="realization seed whose network to build"
    )
    network.add_argument("--export", type=Path, help="edge list output path")
    return parser


# === COMMANDS ===


def cmd_run(args: argparse.Namespace) -> int:
    overrides: dict[str, Any] = {
        "output_dir": args.out,
        "realizations": args.realizations,
        "base_seed": args.seed,
        "jobs": args.jobs,
    }
    if args.gnuplot:
        overrides["gnuplot"] = True
    config = load_config(args.config, overrides)
    result = run_scenario(config)
    if config.gnuplot:
        script = plot_script([(result.name, result.directory)], output=f"{result.name}.png")
        (result.directory / "plots.gp").write_text(script, encoding="utf-8")
    print(result.directory)
    return EXIT_OK


def cmd_stats(args: argparse.Namespace) -> int:
    chosen = {
        name: getattr(args, name)
        for name in StatsOptions.model_fields
        if getattr(args, name) is not None
    }
    try:
        options = StatsOptions(**chosen)
    except ValidationError as exc:
        raise ConfigValidationError(str(exc)) from exc

    log = read_event_log(
        args.log, args.trades, args.meta, tick_size=args.tick_size, p_ref=args.p_ref
    )
    diag = compute_diagnostics(log, options, burn_in=args.burn_in, horizon=args.horizon)
    agg = aggregate_diagnostics([diag], options, labels=[args.label])
    write_aggregate(args.name or log.meta.network, agg, args.out)
    logger.info("statistics of %s written to %s", args.log, args.out)
    print(args.out)
    return EXIT_OK


def cmd_compare(args: argparse.Namespace) -> int:
    results = [ScenarioResult.load(path) for path in args.results]
    paths = write_comparison(results, args.out, gnuplot=args.gnuplot)
    for path in paths.values():
        print(path)
    return EXIT_OK


def cmd_network(args: argparse.Namespace) -> int:
    graph = network_api.build(
        args.kind,
        rows=args.rows,
        cols=args.cols,
        n=args.n,
        m=args.m,
        m_attach=args.m_attach,
        rng=network_rng(args.seed),
    )
    if args.export is not None:
        graph.export_edge_list(args.export)
        logger.info("edge list written to %s", args.export)
    print(json.dumps(graph.summary(), sort_keys=True))
    return EXIT_OK


COMMANDS = {
    "run": cmd_run,
    "stats": cmd_stats,
    "compare": cmd_compare,
    "network": cmd_network,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Main CLI entry point; returns the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    level = logging.DEBUG if args.verbose else logging.WARNING if args.quiet else logging.INFO
    logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr)

    try:
        return COMMANDS[args.command](args)
    except (ConfigParseError, ConfigValidationError, NetworkParameterError) as e:
        logger.warning("invalid configuration: %s", e)
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as e:
        logger.debug("command %s failed", args.command, exc_info=True)
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_RUNTIME


if __name__ == "__main__":
    sys.exit(main())
