import click
from typing import Any
from collections import OrderedDict
from .ops import ops
from .commutator_sweep import commutator_sweep
from .mub import mub
from .evolve import evolve
from .sums import sums
from .pauli import pauli
import latticeqm._version


class NaturalOrderGroup(click.Group):
    """Command group listing subcommands in the order they were added

    Initialize ``self.commands`` with an OrderedDict::

        @click.group(cls=NaturalOrderGroup, commands=OrderedDict())
    """

    def list_commands(self, ctx: Any) -> Any:
        return self.commands.keys()


@click.version_option(version=latticeqm._version.__version__)
@click.group(cls=NaturalOrderGroup, commands=OrderedDict(), context_settings=dict(max_content_width=300, terminal_width=300))
def cli() -> None:
    """Verification suites for position and momentum on a finite cyclic lattice

    Exit codes: 0 all checks pass, 1 a check failed or the data are incompatible, 2 usage or input error.
    """
    return


cli.add_command(ops)
cli.add_command(commutator_sweep, name="commutator-sweep")
cli.add_command(mub)
cli.add_command(evolve)
cli.add_command(sums)
cli.add_command(pauli)
