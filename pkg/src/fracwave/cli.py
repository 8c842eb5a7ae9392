"""Command-line harness: single runs, refinement sweeps and stability reports.

Exit codes: 0 success (diverged runs included), 2 usage error, 3 numerical
setup error.
"""
from __future__ import annotations

import argparse
import csv
import json
import math
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

from . import __version__
from .analysis import stability_report
from .exceptions import NumericalSetupError
from .problems import PROBLEMS, get_problem
from .solver import Scheme, error_norms, solve

__all__ = [
    "RunConfig",
    "RunReport",
    "SweepRow",
    "SweepResult",
    "observed_order",
    "run_solve",
    "run_sweep",
    "run_stability_report",
    "main",
]

AXES = ("time", "space", "coupled")


class UsageError(ValueError):
    pass


@dataclass(frozen=True)
class RunConfig:
    problem: str
    scheme: str
    beta: float
    N: int
    n_T: int

    def validate(self) -> "RunConfig":
        if self.problem not in PROBLEMS:
            raise UsageError(f"unknown problem {self.problem!r}; choose from {sorted(PROBLEMS)}")
        try:
            scheme = Scheme.parse(self.scheme)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        if not (1.0 < self.beta <= 2.0):
            raise UsageError(f"--beta must satisfy 1 < beta <= 2, got {self.beta}")
        if self.N < 2 or self.n_T < 2:
            raise UsageError("--nx and --nt must be at least 2")
        spec = get_problem(self.problem, self.beta).spec
        if spec.has_reaction_advection and not scheme.allows_reaction_advection:
            raise UsageError(f"{self.problem} has reaction/advection terms; use scheme III1 or III2")
        return self


@dataclass
class RunReport:
    config: RunConfig
    max_l2: float
    final_l2: float
    diverged: bool
    wall_time: float
    errors: list = field(default_factory=list, repr=False)

    def metric(self, name: str) -> float:
        return {"max": self.max_l2, "final": self.final_l2}[name]


@dataclass(frozen=True)
class SweepRow:
    level: int
    error: float
    order: Optional[float]


@dataclass
class SweepResult:
    axis: str
    metric: str
    rows: list

    def to_csv(self, path) -> None:
        with open(path, "w", newline="", encoding="ascii") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(["level", "error", "order"])
            for row in self.rows:
                order = "" if row.order is None else repr(row.order)
                writer.writerow([row.level, repr(row.error), order])

    @staticmethod
    def read_csv(path) -> list:
        with open(path, newline="", encoding="ascii") as fh:
            reader = csv.DictReader(fh)
            return [
                SweepRow(int(r["level"]), float(r["error"]), float(r["order"]) if r["order"] else None)
                for r in reader
            ]


def observed_order(err1: float, err2: float, step1: float, step2: float) -> float:
    """``log(e1 / e2) / log(s1 / s2)``."""
    if err1 == err2:
        return 0.0
    if not (err1 > 0 and err2 > 0 and math.isfinite(err1) and math.isfinite(err2)):
        return math.nan
    return math.log(err1 / err2) / math.log(step1 / step2)


def run_solve(config: RunConfig) -> RunReport:
    config.validate()
    problem = get_problem(config.problem, config.beta)
    start = time.perf_counter()
    hist = solve(problem, config.N, config.n_T, config.scheme)
    errs = error_norms(hist)
    wall = time.perf_counter() - start
    with np.errstate(invalid="ignore"):
        max_l2 = float(np.max(errs)) if np.all(np.isfinite(errs)) else math.inf
    final = float(errs[-1]) if math.isfinite(errs[-1]) else math.inf
    return RunReport(config, max_l2, final, hist.diverged, wall, errs.tolist())


def _level_config(base: RunConfig, axis: str, level: int) -> RunConfig:
    if axis == "time":
        return RunConfig(base.problem, base.scheme, base.beta, base.N, level)
    if axis == "space":
        return RunConfig(base.problem, base.scheme, base.beta, level, base.n_T)
    if axis == "coupled":
        return RunConfig(base.problem, base.scheme, base.beta, level, level)
    raise UsageError(f"unknown axis {axis!r}; choose from {AXES}")


def run_sweep(
    base: RunConfig, axis: str, levels: Sequence[int], metric: str = "max", jobs: int = 1
) -> SweepResult:
    """Refine along one axis; orders from adjacent levels (step = 1/level)."""
    if len(levels) < 2:
        raise UsageError("a sweep needs at least two levels")
    if metric not in ("max", "final"):
        raise UsageError(f"unknown metric {metric!r}")
    configs = [_level_config(base, axis, int(lv)).validate() for lv in levels]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(run_solve, configs))
    else:
        reports = [run_solve(c) for c in configs]
    rows = []
    prev = None
    for lv, rep in zip(levels, reports):
        err = rep.metric(metric)
        order = None if prev is None else observed_order(prev[1], err, 1.0 / prev[0], 1.0 / lv)
        rows.append(SweepRow(int(lv), err, order))
        prev = (lv, err)
    return SweepResult(axis, metric, rows)


def run_stability_report(scheme, beta, mu=1.0, tau=None, h=None) -> str:
    return stability_report(scheme, beta, mu, tau, h).render()


def _fmt(x: float) -> str:
    return f"{x:.4e}" if math.isfinite(x) else "*"


def _steps_to_count(value: Optional[float], count: Optional[int], length: float, flag: str):
    if count is not None:
        return count
    if value is None:
        return None
    n = round(length / value)
    if n < 1 or abs(n * value - length) > 1e-9 * length:
        raise UsageError(f"{flag}={value} does not divide the interval of length {length}")
    return n


def _parse_levels(text: str) -> list:
    try:
        levels = [int(tok) for tok in text.replace(",", " ").split()]
    except ValueError:
        raise UsageError(f"--levels must be a comma-separated list of integers, got {text!r}") from None
    return levels


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fracwave", description="Second-order schemes for the time-fractional diffusion-wave equation."
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, grid=True):
        p.add_argument("--problem", default="example1", help="example1 or example2")
        p.add_argument("--scheme", default="I", help="I, NG, II, III1 or III2")
        p.add_argument("--beta", type=float, required=True)
        if grid:
            p.add_argument("--nx", type=int, help="spatial intervals N")
            p.add_argument("--nt", type=int, help="time steps n_T")
            p.add_argument("--tau", type=float, help="time step (alternative to --nt)")
            p.add_argument("--h", type=float, help="space step (alternative to --nx)")
        p.add_argument("--json", type=Path, help="write a JSON run manifest")

    p_solve = sub.add_parser("solve", help="single run")
    common(p_solve)
    p_solve.add_argument("--metric", choices=("max", "final"), help="print only this error")
    p_solve.add_argument("--csv", type=Path, help="per-time-level errors as CSV")

    p_sweep = sub.add_parser("sweep", help="refinement study with observed orders")
    common(p_sweep)
    p_sweep.add_argument("--axis", choices=AXES, required=True)
    p_sweep.add_argument("--levels", required=True, help="e.g. 16,32,64")
    p_sweep.add_argument("--metric", choices=("max", "final"), help="default: final for coupled, else max")
    p_sweep.add_argument("--csv", type=Path)
    p_sweep.add_argument("--jobs", type=int, default=1)

    p_stab = sub.add_parser("stability", help="stability verdict and CFL ratio")
    p_stab.add_argument("--scheme", default="I")
    p_stab.add_argument("--beta", type=float, required=True)
    p_stab.add_argument("--mu", type=float, default=1.0)
    p_stab.add_argument("--tau", type=float)
    p_stab.add_argument("--h", type=float)
    p_stab.add_argument("--json", type=Path)
    return parser


def _grid_counts(args, need_nx=True, need_nt=True):
    spec = get_problem(args.problem, args.beta).spec if args.problem in PROBLEMS else None
    length = (spec.domain[1] - spec.domain[0]) if spec else 1.0
    horizon = spec.T if spec else 1.0
    N = _steps_to_count(args.h, args.nx, length, "--h")
    n_T = _steps_to_count(args.tau, args.nt, horizon, "--tau")
    if need_nx and N is None:
        raise UsageError("give --nx or --h")
    if need_nt and n_T is None:
        raise UsageError("give --nt or --tau")
    return N, n_T


def _json_safe(obj):
    # strict JSON has no inf/nan: diverged results become null
    if isinstance(obj, float) and not math.isfinite(obj):
        return None
    if isinstance(obj, dict):
        return {k: _json_safe(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_json_safe(v) for v in obj]
    return obj


def _write_json(path: Path, payload: dict) -> None:
    payload = _json_safe({"fracwave_version": __version__, **payload})
    text = json.dumps(payload, indent=2, default=str, allow_nan=False)
    path.write_text(text + "\n", encoding="ascii")


def _cmd_solve(args) -> int:
    if args.problem not in PROBLEMS:
        raise UsageError(f"unknown problem {args.problem!r}; choose from {sorted(PROBLEMS)}")
    N, n_T = _grid_counts(args)
    config = RunConfig(args.problem, args.scheme, args.beta, N, n_T)
    rep = run_solve(config)
    if args.metric:
        print(_fmt(rep.metric(args.metric)))
    else:
        print(f"problem={config.problem} scheme={config.scheme} beta={config.beta:g} N={N} n_T={n_T}")
        print(f"max-l2    {_fmt(rep.max_l2)}")
        print(f"final-l2  {_fmt(rep.final_l2)}")
        print(f"diverged  {'yes' if rep.diverged else 'no'}")
        print(f"wall      {rep.wall_time:.3f} s")
    if args.csv:
        rows = [SweepRow(n, e, None) for n, e in enumerate(rep.errors)]
        SweepResult("level", "l2", rows).to_csv(args.csv)
    if args.json:
        _write_json(
            args.json,
            {
                "command": "solve",
                "config": asdict(config),
                "results": {
                    "max_l2": rep.max_l2,
                    "final_l2": rep.final_l2,
                    "diverged": rep.diverged,
                    "wall_time": rep.wall_time,
                },
            },
        )
    return 0


def _cmd_sweep(args) -> int:
    if args.problem not in PROBLEMS:
        raise UsageError(f"unknown problem {args.problem!r}; choose from {sorted(PROBLEMS)}")
    levels = _parse_levels(args.levels)
    need_nx = args.axis == "time"
    need_nt = args.axis == "space"
    N, n_T = _grid_counts(args, need_nx, need_nt)
    base = RunConfig(args.problem, args.scheme, args.beta, N or levels[0], n_T or levels[0])
    metric = args.metric or ("final" if args.axis == "coupled" else "max")
    result = run_sweep(base, args.axis, levels, metric, jobs=args.jobs)

    fixed = {"time": f"N={N}", "space": f"n_T={n_T}", "coupled": "tau=h=1/N"}[args.axis]
    head = {"time": "1/tau", "space": "N", "coupled": "N"}[args.axis]
    print(f"{args.problem} scheme={args.scheme} beta={args.beta:g} {fixed} metric={metric}")
    print(f"{head:>8}  {'error':>10}  {'order':>7}")
    for row in result.rows:
        order = "" if row.order is None else f"{row.order:.4f}"
        print(f"{row.level:>8}  {_fmt(row.error):>10}  {order:>7}")
    if args.csv:
        result.to_csv(args.csv)
    if args.json:
        _write_json(
            args.json,
            {
                "command": "sweep",
                "config": asdict(base),
                "axis": args.axis,
                "levels": levels,
                "metric": metric,
                "rows": [asdict(r) for r in result.rows],
            },
        )
    return 0


def _cmd_stability(args) -> int:
    try:
        Scheme.parse(args.scheme)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if not (1.0 < args.beta <= 2.0):
        raise UsageError(f"--beta must satisfy 1 < beta <= 2, got {args.beta}")
    report = stability_report(args.scheme, args.beta, args.mu, args.tau, args.h)
    print(report.render())
    if args.json:
        _write_json(
            args.json,
            {
                "command": "stability",
                "scheme": report.scheme.value,
                "beta": report.beta,
                "mu": args.mu,
                "tau": args.tau,
                "h": args.h,
                "r": report.r,
                "verdict": report.verdict.value,
                "negative_axis_bound": report.negative_axis_bound,
            },
        )
    return 0


_COMMANDS = {"solve": _cmd_solve, "sweep": _cmd_sweep, "stability": _cmd_stability}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"fracwave: error: {exc}", file=sys.stderr)
        return 2
    except NumericalSetupError as exc:
        print(f"fracwave: numerical setup error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
