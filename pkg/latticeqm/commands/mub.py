import logging
from typing import *
import click
import numpy as np
import pandas as pd
import latticeqm as lqm
from ._report import RunReport, setup_logging, resolve_scales, make_dim, threshold, finish,\
    dim_option, scale_a_option, tol_option, json_option, verbose_option


@click.command(short_help="Checks the eta basis of TB, the quadratic-phase DFT identities and the S operator")
@dim_option
@scale_a_option
@tol_option
@json_option
@click.option("--csv", "csv_path", help="Write the |<phi_x, eta_s>| grid to this CSV file (rows: x, columns: s)",
              type=click.Path(dir_okay=False, writable=True), default=None)
@verbose_option
def mub(dim: int, scale_a: Optional[float], tol: Optional[float], json_path: Optional[str],
        csv_path: Optional[str], verbose: int) -> None:
    """Verifies that position, momentum and eta bases are mutually unbiased, fits the phase of the
    DFT identity for every admitted b, rebuilds TB from exp(iS), checks the exchange identity of
    exp(-iaP) exp(igX) and reports how far the eigenbasis of gX - aP is from being unbiased.
    """
    setup_logging(verbose)
    d = make_dim(dim)
    scales = resolve_scales(d, scale_a)
    report = RunReport("mub", [dim], [scales.to_dict()])
    cset = lqm.build_canonical_set(d, scales)

    reports = lqm.triple_unbiasedness(d)
    for pair, rep in reports.items():
        report.add_check(f"unbiased_{pair}", rep.max_deviation, threshold(tol, lqm.DEFAULT_TOL))
        report.add_check(f"completeness_{pair}", rep.completeness_error, threshold(tol, lqm.DEFAULT_TOL))
    eta = lqm.eta_basis_position(d)
    tb = lqm.build_TB(d)
    report.add_check("eta_orthonormality", eta.orthonormality_error(), threshold(tol, lqm.DEFAULT_TOL))
    residual = np.linalg.norm(tb.entries @ eta.matrix - eta.matrix * lqm.omega_pow(d, d.labels)[None, :], axis=0).max()
    report.add_check("eta_eigen_residual", residual, threshold(tol, lqm.DEFAULT_TOL))
    report.add_check("tb_spectrum", lqm.spectrum_deviation(lqm.eig_normal(tb).values, lqm.omega_pow(d, d.labels)),
                     threshold(tol, lqm.DEFAULT_TOL))
    report.add_check("eta_eigensolver_crosscheck", lqm.eta_eigensolver_crosscheck(d), threshold(tol, lqm.EIG_RESIDUAL_TOL))

    phases = []
    for form in ("symmetric", "asymmetric"):
        for b in lqm.valid_b(d, form):
            phase_report = lqm.gauss_identity_check(d, b, form)
            phases.append(phase_report.to_dict())
            report.add_check(f"gauss_{form}_b={b:g}", phase_report.residual, threshold(tol, lqm.DEFAULT_TOL))
    report.data["gauss_phases"] = phases
    report.data["eta_phase_ratios"] = lqm.complex_to_pairs(lqm.eta_phase_ratios(d))

    report.add_check("s_reconstruction", lqm.s_reconstruction_deviation(d, scales), threshold(tol, lqm.DEFAULT_TOL))
    report.add_check("weyl_swap", lqm.weyl_swap_check(cset), threshold(tol, lqm.DEFAULT_TOL))

    against_position, against_momentum = lqm.xp_difference_unbiasedness(cset)
    report.add_check("xp_not_unbiased", against_position.max_deviation, lqm.XP_BIAS_THRESHOLD, "gt")
    report.data["xp_difference"] = {
        "position": {k: v for k, v in against_position.to_dict().items() if k != "grid"},
        "momentum": {k: v for k, v in against_momentum.to_dict().items() if k != "grid"},
    }

    if csv_path is not None:
        grid = pd.DataFrame(reports["position-eta"].grid, index=pd.Index(d.labels, name="x"), columns=[f"s={s:g}" for s in d.labels])
        grid.to_csv(csv_path)
        logging.info(f"Overlap grid written to {csv_path}")
    finish(report, json_path)
