import sys
import json
import logging
from typing import *
import click
import pandas as pd
import latticeqm as lqm
from ._report import setup_logging, write_table, csv_option, json_option, verbose_option


def _write_json(payload: Dict[str, Any], json_path: Optional[str]) -> None:
    if json_path is None:
        return
    with open(json_path, "w") as f:
        json.dump(payload, f, indent=1, allow_nan=False)
    logging.info(f"Result written to {json_path}")


@click.command(short_help="Phase reconstruction of a two-site state from its position and momentum data")
@click.option("--rho-sq", help="Probability of the lower site in the position basis", type=click.FloatRange(0, 1), default=None)
@click.option("--varpi-sq", help="Probability of the lower site in the momentum basis", type=click.FloatRange(0, 1), default=None)
@click.option("--sweep", help="Instead of reconstructing, emit a K x K compatibility grid over the unit square",
              type=click.IntRange(min=2), default=None)
@csv_option
@json_option
@verbose_option
def pauli(rho_sq: Optional[float], varpi_sq: Optional[float], sweep: Optional[int], csv_path: Optional[str],
          json_path: Optional[str], verbose: int) -> None:
    """Prints the reconstruction as JSON: compatibility with the uncertainty disk and the phases alpha
    (zero, one, or the pair alpha, pi - alpha). Exit code 1 when the data are incompatible.

    With --sweep K the CSV columns are rho_sq, varpi_sq, compatible (stdout unless --csv is given)
    and --json receives the grid size and the number of compatible points.
    """
    setup_logging(verbose)
    if sweep is not None:
        rho, varpi, inside = lqm.compatibility_grid(sweep)
        write_table(pd.DataFrame({"rho_sq": rho, "varpi_sq": varpi, "compatible": inside}), csv_path)
        _write_json({"k": sweep, "points": int(inside.size), "compatible": int(inside.sum())}, json_path)
        return
    if rho_sq is None or varpi_sq is None:
        raise click.UsageError("--rho-sq and --varpi-sq are both required unless --sweep is used")
    reconstruction = lqm.reconstruct(lqm.PauliData(rho_sq, varpi_sq))
    payload = {"rho_sq": rho_sq, "varpi_sq": varpi_sq, **reconstruction.to_dict()}
    click.echo(json.dumps(payload, allow_nan=False))
    _write_json(payload, json_path)
    sys.exit(0 if reconstruction.compatible else 1)
