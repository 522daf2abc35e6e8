"""Subcomando `validate`: comparación contra el oráculo de Fock."""

import argparse
import logging

import pandas as pd

from app.cli.dependencies import add_grid_flag, add_output_flags, get_run_config
from app.experiments.tables import write_table
from app.experiments.validate import DEFAULT_BOX, METRICS, run_validate
from app.schemas.run import Subcommand
from app.schemas.state import Family

logger = logging.getLogger(__name__)


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser(
        "validate", help="check Gaussian formulas against the Fock oracle"
    )
    parser.add_argument("--cutoff", type=int, default=40)
    parser.add_argument(
        "--family",
        dest="families",
        action="append",
        choices=[family.value for family in Family],
        help="family to validate (repeatable, default: all)",
    )
    add_grid_flag(parser)
    add_output_flags(parser)
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace) -> int:
    """Emitir una fila por punto; devolver 3 si alguna desviación supera la tolerancia."""
    families = [Family(value) for value in args.families] if args.families else None
    config = get_run_config(args, Subcommand.VALIDATE)
    report = run_validate(config.grids or DEFAULT_BOX, config.cutoff, families)
    rows = []
    for point in report.points:
        row = {"family": point.family, **point.params}
        row.update({metric: point.deviations.get(metric) for metric in METRICS})
        row.update(
            {
                "sandwich_ok": point.sandwich_ok,
                "truncated": point.truncated,
                "tail_mass": point.tail_mass,
            }
        )
        rows.append(row)
    write_table(pd.DataFrame(rows), config, config.output_path, config.format)
    logger.info(
        "max deviations %s, %d sandwich violations, %d truncated points",
        report.max_deviation, report.sandwich_violations, report.truncated,
    )
    return 0 if report.passed else 3
