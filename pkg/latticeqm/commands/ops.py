from typing import *
import click
import latticeqm as lqm
from ._report import RunReport, setup_logging, resolve_scales, make_dim, threshold, finish,\
    dim_option, scale_a_option, tol_option, json_option, verbose_option


@click.command(short_help="Checks the algebra of X, P, T and B for one lattice")
@dim_option
@scale_a_option
@tol_option
@json_option
@click.option("--hdf5", "hdf5_path", help="Save the operators and bases to this hdf5 file",
              type=click.Path(dir_okay=False, writable=True), default=None)
@verbose_option
def ops(dim: int, scale_a: Optional[float], tol: Optional[float], json_path: Optional[str],
        hdf5_path: Optional[str], verbose: int) -> None:
    """Builds the canonical set (X, P, T, B) and checks unitarity, hermiticity, spectra,
    exponential forms, DFT consistency and the commutator trace.

    The JSON report on stdout carries the four matrices as rows of [re, im] pairs.
    """
    setup_logging(verbose)
    d = make_dim(dim)
    scales = resolve_scales(d, scale_a)
    report = RunReport("ops", [dim], [scales.to_dict()])
    cset = lqm.build_canonical_set(d, scales)
    for name, deviation in lqm.check_canonical_set(cset).items():
        report.add_check(name, deviation, threshold(tol, lqm.CANONICAL_THRESHOLDS[name]))
    report.data["operators"] = {"X": lqm.op_to_json(cset.x_op), "P": lqm.op_to_json(cset.p_op),
                                "T": lqm.op_to_json(cset.t_op), "B": lqm.op_to_json(cset.b_op)}
    if hdf5_path is not None:
        lqm.dump_hdf5(cset, hdf5_path)
    finish(report, json_path)
