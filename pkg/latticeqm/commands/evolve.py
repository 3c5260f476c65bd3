from typing import *
import click
import numpy as np
import pandas as pd
import latticeqm as lqm
from ._report import RunReport, setup_logging, resolve_scales, make_dim, threshold, finish, write_table,\
    dim_option, scale_a_option, tol_option, json_option, csv_option, verbose_option

PRESETS = ("delta", "gaussian-probe", "uniform")


def preset_state(dim: lqm.Dim, name: str) -> lqm.State:
    """Named initial states: phi at the central site, the Gaussian probe, or the uniform superposition"""
    if name == "delta":
        amp = np.zeros(dim.n, dtype=complex)
        amp[dim.n // 2] = 1.0
        return lqm.State(dim, amp)
    elif name == "gaussian-probe":
        return lqm.gaussian_probe(dim)
    elif name == "uniform":
        return lqm.State.normalized_from(dim, np.ones(dim.n))
    raise lqm.DomainError(f"unknown preset {name!r}")


def parse_times(times: Optional[str], until: Optional[str], steps: int, cfg: lqm.EvolutionConfig) -> np.ndarray:
    """Absolute times from a comma separated list or from a final time, both in units of tau"""
    if times is not None and until is not None:
        raise click.UsageError("--times and --until are mutually exclusive")
    if times is not None:
        try:
            values = np.array([float(t) for t in times.split(",")])
        except ValueError:
            raise click.BadParameter(f"cannot read {times!r} as comma separated numbers", param_hint="--times")
        if not np.all(np.isfinite(values)):
            raise click.BadParameter(f"times must be finite, got {times!r}", param_hint="--times")
        return values * cfg.tau
    if until is None:
        return np.zeros(1)
    if until == "revival":
        final = lqm.revival_period(cfg)
    else:
        try:
            final = float(until)
        except ValueError:
            raise click.BadParameter(f"expected 'revival' or a number, got {until!r}", param_hint="--until")
        if not np.isfinite(final):
            raise click.BadParameter(f"the final time must be finite, got {until!r}", param_hint="--until")
        final *= cfg.tau
    return np.linspace(0, final, steps + 1)


@click.command(short_help="Free evolution of a lattice state, outputs the position distribution over time")
@dim_option
@scale_a_option
@click.option("--preset", help="Named initial state", type=click.Choice(PRESETS), default=None)
@click.option("--state-file", help="JSON array of [re, im] pairs in storage order, the initial state",
              type=click.Path(exists=True, dir_okay=False, readable=True), default=None)
@click.option("--times", help="Comma separated times in units of tau", default=None)
@click.option("--until", help="Final time in units of tau, or 'revival' for the revival period", default=None)
@click.option("--steps", help="Number of intervals between 0 and --until", type=click.IntRange(min=1), default=16, show_default=True)
@click.option("--mass", "-m", help="Particle mass", type=click.FloatRange(min=0, min_open=True), default=lqm.DEFAULT_MASS, show_default=True)
@tol_option
@csv_option
@json_option
@verbose_option
def evolve(dim: int, scale_a: Optional[float], preset: Optional[str], state_file: Optional[str], times: Optional[str],
           until: Optional[str], steps: int, mass: float, tol: Optional[float], csv_path: Optional[str],
           json_path: Optional[str], verbose: int) -> None:
    """Evolves the initial state under H = P**2/2m and writes |c_x(t)|**2 as CSV (columns: t, x, probability),
    to stdout when --csv is not given. The initial state is --preset (default: delta) or --state-file.

    With --until revival the final snapshot is compared with the initial one and the exit code is 1
    if they differ by more than the tolerance.
    """
    setup_logging(verbose)
    d = make_dim(dim)
    cfg = lqm.EvolutionConfig(d, resolve_scales(d, scale_a), mass)
    if preset is not None and state_file is not None:
        raise click.UsageError("--preset and --state-file are mutually exclusive")
    if state_file is not None:
        try:
            c0 = lqm.load_state(state_file, d)
        except lqm.DomainError as e:
            raise click.BadParameter(str(e), param_hint="--state-file")
    else:
        c0 = preset_state(d, preset or "delta")
    ts = parse_times(times, until, steps, cfg)
    probabilities = lqm.time_series(cfg, c0, ts)

    table = pd.DataFrame({"t": np.repeat(ts, d.n), "x": np.tile(d.labels, len(ts)), "probability": probabilities.ravel()})
    write_table(table, csv_path)

    report = RunReport("evolve", [dim], [cfg.scales.to_dict()])
    report.data["tau"] = cfg.tau
    report.data["mass"] = cfg.mass
    if until == "revival":
        report.add_check("revival_distribution", float(np.abs(probabilities[-1] - probabilities[0]).max()),
                         threshold(tol, lqm.REVIVAL_TOL))
        report.add_check("revival_state", lqm.revival_deviation(cfg, c0), threshold(tol, lqm.REVIVAL_TOL))
        report.data["revival_period"] = lqm.revival_period(cfg)
    finish(report, json_path, echo=False)
