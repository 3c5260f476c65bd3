from typing import *
import click
import pandas as pd
import latticeqm as lqm
from ._report import RunReport, setup_logging, make_dim, threshold, finish, write_table,\
    dim_option, tol_option, json_option, csv_option, seed_option, verbose_option


@click.command(short_help="Closed-form lattice sums against their direct evaluation")
@dim_option
@click.option("--n-random", help="Number of random real exponents", type=click.IntRange(min=0), default=lqm.N_RANDOM_R, show_default=True)
@seed_option
@tol_option
@csv_option
@json_option
@verbose_option
def sums(dim: int, n_random: int, seed: int, tol: Optional[float], csv_path: Optional[str],
         json_path: Optional[str], verbose: int) -> None:
    """Evaluates the geometric, omega, case-form and k-weighted sums at integer, half-odd and random
    real r in (-2N, 2N) and compares each with the direct sum over k = -j..j.

    CSV columns: variant, r, closed_re, closed_im, brute_re, brute_im, residual, status.
    Points where the closed form is replaced by its exact value or is singular are marked as skipped.
    """
    setup_logging(verbose)
    d = make_dim(dim)
    rows = lqm.verify_sums(d, n_random=n_random, seed=seed)
    table = pd.DataFrame([{"variant": row["variant"], "r": row["r"],
                           "closed_re": row["closed"].real, "closed_im": row["closed"].imag,
                           "brute_re": row["brute"].real, "brute_im": row["brute"].imag,
                           "residual": row["residual"], "status": row["status"]} for row in rows])
    report = RunReport("sums", [dim])
    for variant in lqm.SUM_VARIANTS:
        report.add_check(f"{variant}_residual", lqm.max_sum_residual(rows, variant), threshold(tol, lqm.SUM_TOL))
    report.data["counts"] = {status: int(count) for status, count in table["status"].value_counts().items()}
    if csv_path is not None:
        write_table(table, csv_path)
    finish(report, json_path)
