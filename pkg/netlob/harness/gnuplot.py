"""
gnuplot script builder for comparison plots
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any


@dataclass
class GP:
    """gnuplot source emitter"""

    code: list[str] = field(default_factory=list)

    def w(self, s: str = "") -> None:
        self.code.append(s)

    def set(self, option: str, *values: Any) -> None:
        tail = " ".join(literal(v) if not isinstance(v, str) else v for v in values)
        self.w(f"set {option} {tail}".rstrip())

    def render(self) -> str:
        return "\n".join(self.code) + "\n"


def literal(v: Any) -> str:
    """Python value -> gnuplot literal"""
    if isinstance(v, bool):
        return "1" if v else "0"
    elif isinstance(v, str):
        return '"' + v.replace("\\", "\\\\").replace('"', '\\"') + '"'
    elif isinstance(v, float):
        return repr(v)
    elif isinstance(v, int):
        return str(v)
    else:
        raise NotImplementedError(f"Unsupported literal type: {type(v)}")


# (title, file, using, x log, y log, series filter)
_PANELS: list[tuple[str, str, str, bool, bool, str | None]] = [
    ("return distribution", "returns_hist.csv", "(($1+$2)/2):3", False, True, None),
    ("waiting times", "waiting_hist.csv", "(sqrt($1*$2)):3", True, True, None),
    ("trade-sign acf", "acf.csv", "1:2", False, False, "sign"),
    ("trade-sign acf (log-log)", "acf.csv", "1:2", True, True, "sign"),
    ("|r| acf", "acf.csv", "1:2", False, False, "abs_return"),
    ("|r| acf (log y)", "acf.csv", "1:2", False, True, "abs_return"),
]


def _using(spec: str, series: str | None) -> str:
    if series is None:
        return spec
    x, y = spec.split(":")
    # averaged rows only: realization == "mean" and the wanted series
    return f'{x}:((strcol(3) eq "mean" && strcol(4) eq {literal(series)}) ? ${y} : 1/0)'


def plot_script(
    scenario_dirs: Sequence[tuple[str, Path]],
    output: str = "comparison.png",
) -> str:
    """Six-panel overlay of the scenario diagnostics, one curve per scenario."""
    gp = GP()
    gp.w("# generated by netlob compare --gnuplot")
    gp.set("datafile separator", literal(","))
    gp.set("terminal pngcairo size 1500,900")
    gp.set("output", literal(output))
    gp.set("multiplot layout 2,3")
    for title, filename, spec, logx, logy, series in _PANELS:
        gp.w()
        gp.set("title", literal(title))
        gp.w("unset logscale")
        if logx:
            gp.set("logscale x")
        if logy:
            gp.set("logscale y")
        parts = [
            f"{literal(str(directory / filename))} skip 1 using {_using(spec, series)}"
            f" with linespoints title {literal(name)}"
            for name, directory in scenario_dirs
        ]
        gp.w("plot " + ", \\\n     ".join(parts))
    gp.w()
    gp.w("unset multiplot")
    return gp.render()
