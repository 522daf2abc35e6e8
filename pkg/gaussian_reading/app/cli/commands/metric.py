"""Subcomando `metric`: fidelidad, QCB y cotas de Helstrom de una codificación."""

import argparse
import math

import pandas as pd

from app.cli.dependencies import (
    add_output_flags,
    add_state_flags,
    get_family,
    get_run_config,
    get_state_params,
    params_row,
)
from app.distinguishability.bounds import helstrom_bounds
from app.experiments.tables import write_table
from app.gaussian.states import apply_local, make_state
from app.gaussian.symplectic import euler_traceless, phase_shift
from app.schemas.run import Subcommand


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser(
        "metric", help="distinguishability of a state and its locally transformed image"
    )
    add_state_flags(parser)
    parser.add_argument("--theta", type=float, help="Euler angle of the traceless coding")
    parser.add_argument("--xi", type=float, help="squeezing factor of the traceless coding")
    parser.add_argument("--copies", type=int, default=1)
    add_output_flags(parser)
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace) -> int:
    """Evaluar el par (ρ, SρS^T); por defecto S = F_{π/2}."""
    config = get_run_config(args, Subcommand.METRIC)
    params, family = get_state_params(args), get_family(args)
    state = make_state(params, family)
    if args.theta is None and args.xi is None:
        coding = phase_shift(math.pi / 2)
    else:
        coding = euler_traceless(args.theta or 0.0, args.xi if args.xi is not None else 1.0)
    report = helstrom_bounds(state, apply_local(state, coding), args.copies)
    row = params_row(params, family)
    theta, xi, phi = coding.euler
    row.update({"theta": theta, "xi": xi, "phi": phi})
    row.update(report.model_dump())
    write_table(pd.DataFrame([row]), config, config.output_path, config.format)
    return 0
