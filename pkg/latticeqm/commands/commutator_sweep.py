import logging
import multiprocessing
from typing import *
import click
import pandas as pd
import latticeqm as lqm
from ._report import RunReport, setup_logging, threshold, finish, write_table, tol_option, json_option,\
    csv_option, verbose_option


def _probe_deviation(n: int) -> float:
    return lqm.probe_deviation(lqm.Dim(n))


@click.command(short_help="Distance of <[X,P]> from i on a Gaussian probe across dimensions")
@click.option("--dim", "-n", "dims", help="Lattice dimensions to sweep, repeat the flag for several",
              type=click.IntRange(min=2), multiple=True, default=lqm.SWEEP_DIMS, show_default=True)
@click.option("--processes", "-p", help="Number of worker processes (default: 1)", type=click.IntRange(min=1), default=1)
@tol_option
@csv_option
@json_option
@verbose_option
def commutator_sweep(dims: Tuple[int, ...], processes: int, tol: Optional[float], csv_path: Optional[str],
                     json_path: Optional[str], verbose: int) -> None:
    """Evaluates |<probe,[X,P] probe> - i| with a = g = sqrt(2*pi/N) for every N, the probe being
    proportional to exp(-pi x**2/N). With more than one N the deviation must strictly decrease
    and a sweep reaching N=64 must end within the limit tolerance.

    CSV columns: N, deviation
    """
    setup_logging(verbose)
    dims = sorted(set(dims))
    report = RunReport("commutator-sweep", dims)
    if processes > 1 and len(dims) > 1:
        n_workers = min(processes, multiprocessing.cpu_count(), len(dims))
        logging.info(f"Sweeping {len(dims)} dimensions with {n_workers} processes")
        with multiprocessing.Pool(n_workers) as pool:
            deviations = pool.map(_probe_deviation, dims)
    else:
        deviations = [_probe_deviation(n) for n in dims]
    table = pd.DataFrame({"N": dims, "deviation": deviations})
    if len(dims) > 1:
        report.add_check("strict_decrease", lqm.decrease_violation(deviations), 0.0, "lt")
    if dims[-1] >= lqm.SWEEP_DIMS[-1]:
        report.add_check(f"limit_at_N={dims[-1]}", deviations[-1], threshold(tol, lqm.COMMUTATOR_LIMIT_TOL))
    report.data["table"] = {"N": list(dims), "deviation": [float(v) for v in deviations]}
    report.data["at_rounding_floor"] = [n for n, v in zip(dims, deviations) if v <= lqm.ROUNDING_FLOOR]
    if csv_path is not None:
        write_table(table, csv_path)
    finish(report, json_path)
