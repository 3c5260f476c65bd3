import sys
import json
import logging
import time
from typing import *
import click
import pandas as pd
import latticeqm as lqm

COMPARISONS = {"le": lambda d, t: d <= t, "lt": lambda d, t: d < t, "gt": lambda d, t: d > t}


class Check:
    """One measured deviation compared with its threshold"""
    __slots__ = ["name", "deviation", "threshold", "comparison"]

    def __init__(self, name: str, deviation: float, threshold: float, comparison: str="le") -> None:
        if comparison not in COMPARISONS:
            raise ValueError(f"unknown comparison {comparison!r}")
        self.name = name
        self.deviation = float(deviation)
        self.threshold = float(threshold)
        self.comparison = comparison

    @property
    def passed(self) -> bool:
        return bool(COMPARISONS[self.comparison](self.deviation, self.threshold))

    def to_dict(self) -> Dict[str, Any]:
        return {"name": self.name, "deviation": self.deviation, "threshold": self.threshold,
                "comparison": self.comparison, "passed": self.passed}

    @classmethod
    def from_dict(cls, d: Dict[str, Any]) -> "Check":
        return cls(d["name"], d["deviation"], d["threshold"], d.get("comparison", "le"))


class RunReport:
    """Outcome of one CLI run: the checks performed, the data produced and the wall time

    Note
    ----
    The run passes iff every check passes
    """
    __slots__ = ["command", "dims", "scales", "checks", "data", "wall_time", "_start"]

    def __init__(self, command: str, dims: Sequence[int], scales: Optional[List[Dict[str, float]]]=None) -> None:
        self.command = command
        self.dims = [int(n) for n in dims]
        self.scales = scales if scales is not None else []
        self.checks: List[Check] = []
        self.data: Dict[str, Any] = {}
        self.wall_time = 0.0
        self._start = time.perf_counter()

    def add_check(self, name: str, deviation: float, threshold: float, comparison: str="le") -> Check:
        check = Check(name, deviation, threshold, comparison)
        if not check.passed:
            logging.warning(f"{self.command}: check {name} failed, deviation {check.deviation:.3g} against threshold {check.threshold:.3g}")
        else:
            logging.debug(f"{self.command}: check {name} passed with deviation {check.deviation:.3g}")
        self.checks.append(check)
        return check

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def exit_code(self) -> int:
        return 0 if self.passed else 1

    def stop_clock(self) -> None:
        self.wall_time = time.perf_counter() - self._start

    def to_dict(self) -> Dict[str, Any]:
        return {"command": self.command, "dims": self.dims, "scales": self.scales,
                "checks": [c.to_dict() for c in self.checks], "passed": self.passed,
                "wall_time": self.wall_time, "data": self.data}

    @classmethod
    def from_dict(cls, d: Dict[str, Any]) -> "RunReport":
        report = cls(d["command"], d["dims"], d.get("scales"))
        report.checks = [Check.from_dict(c) for c in d["checks"]]
        report.data = d.get("data", {})
        report.wall_time = d.get("wall_time", 0.0)
        return report

    def to_json(self, indent: Optional[int]=None) -> str:
        return json.dumps(self.to_dict(), indent=indent)


def setup_logging(verbose: int) -> None:
    logging.basicConfig(stream=sys.stderr, format='%(asctime)s - %(levelname)s - %(message)s',
                        level=[logging.ERROR, logging.WARNING, logging.INFO, logging.DEBUG][min(verbose, 3)])


def resolve_scales(dim: lqm.Dim, scale_a: Optional[float]) -> lqm.LatticeScales:
    if scale_a is None:
        return lqm.LatticeScales.default(dim)
    try:
        return lqm.LatticeScales.from_a(dim, scale_a)
    except lqm.DomainError as e:
        raise click.BadParameter(str(e), param_hint="--scale-a")


def make_dim(n: int) -> lqm.Dim:
    try:
        return lqm.Dim(n)
    except lqm.DomainError as e:
        raise click.BadParameter(str(e), param_hint="--dim")


def threshold(tol: Optional[float], default: float) -> float:
    return default if tol is None else tol


def finish(report: RunReport, json_path: Optional[str]=None, echo: bool=True) -> None:
    """Print and optionally save the report, then exit with 0 when every check passes and 1 otherwise"""
    report.stop_clock()
    if echo:
        click.echo(report.to_json())
    if json_path is not None:
        with open(json_path, "w") as f:
            f.write(report.to_json(indent=1))
        logging.info(f"Report written to {json_path}")
    sys.exit(report.exit_code)


def write_table(table: pd.DataFrame, csv_path: Optional[str]) -> None:
    """CSV to ``csv_path``, or to stdout when no path is given"""
    if csv_path is None:
        click.echo(table.to_csv(index=False), nl=False)
    else:
        table.to_csv(csv_path, index=False)
        logging.info(f"Table with {len(table)} rows written to {csv_path}")


dim_option = click.option("--dim", "-n", "dim", help="Lattice dimension N (at least 2)",
                          type=click.IntRange(min=2), required=True)
scale_a_option = click.option("--scale-a", "-a", help="Position step a, g follows from a*g*N = 2*pi (default: a = g = sqrt(2*pi/N))",
                              type=float, default=None)
tol_option = click.option("--tol", help="Override every check threshold (default: per check)", type=float, default=None)
json_option = click.option("--json", "json_path", help="Also write the JSON report to this file",
                           type=click.Path(dir_okay=False, writable=True), default=None)
csv_option = click.option("--csv", "csv_path", help="Write the table to this CSV file",
                          type=click.Path(dir_okay=False, writable=True), default=None)
seed_option = click.option("--seed", help="Seed of the random sampling", type=int, default=lqm.DEFAULT_SEED, show_default=True)
verbose_option = click.option('--verbose', '-v',
                              help="Set the verbosity level: -v (only warnings) -vv (warnings and info) -vvv (warnings, info and debug)",
                              count=True, default=1)
