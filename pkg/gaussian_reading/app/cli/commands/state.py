"""Subcomando `state`: momentos y propiedades de un estado de una familia."""

import argparse

import pandas as pd

from app.cli.dependencies import (
    add_output_flags,
    add_state_flags,
    get_family,
    get_run_config,
    get_state_params,
    params_row,
)
from app.experiments.tables import write_table
from app.gaussian.states import make_state, purity, total_photons
from app.gaussian.williamson import is_physical, symplectic_spectrum
from app.schemas.run import Subcommand


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser(
        "state", help="covariance, displacement and invariants of a state"
    )
    add_state_flags(parser)
    add_output_flags(parser)
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace) -> int:
    """Emitir una fila con los momentos (VacuumOne), N_T, pureza y espectro."""
    config = get_run_config(args, Subcommand.STATE)
    params, family = get_state_params(args), get_family(args)
    state = make_state(params, family)
    nu = symplectic_spectrum(state)
    row = params_row(params, family)
    row.update(
        {
            "n_total": total_photons(state),
            "purity": purity(state),
            "nu1": nu[0],
            "nu2": nu[1],
            "physical": is_physical(state),
        }
    )
    row.update({f"disp_{i}": state.disp[i] for i in range(4)})
    row.update({f"cov_{i}_{j}": state.cov[i, j] for i in range(4) for j in range(4)})
    write_table(pd.DataFrame([row]), config, config.output_path, config.format)
    return 0
