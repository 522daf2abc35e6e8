"""Subcomando `figure`: datos de las figuras 1 a 9."""

import argparse

from app.cli.dependencies import add_grid_flag, add_output_flags, get_run_config
from app.experiments.figures import run_figure
from app.experiments.tables import write_table
from app.schemas.run import Subcommand


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("figure", help="regenerate the data behind a figure")
    parser.add_argument("--id", type=int, required=True, choices=range(1, 10), metavar="{1..9}")
    for flag in ("--r", "--nth1", "--nth2", "--nth", "--ns"):
        parser.add_argument(flag, type=float, help="fixed parameter of the figure")
    add_grid_flag(parser)
    add_output_flags(parser)
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace) -> int:
    config = get_run_config(args, Subcommand.FIGURE)
    write_table(run_figure(config), config, config.output_path, config.format)
    return 0
