"""Subcomando `copies`: copias necesarias para una probabilidad de error objetivo."""

import argparse

import pandas as pd

from app.cli.dependencies import add_output_flags, get_run_config
from app.experiments.copies import run_copies
from app.experiments.tables import write_table
from app.schemas.run import Subcommand
from app.schemas.state import Family


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("copies", help="copies needed to reach a target error")
    parser.add_argument("--family", choices=[Family.STS.value, Family.TSS.value], required=True)
    parser.add_argument("--ns", type=float, required=True)
    parser.add_argument("--nth", type=float, required=True)
    parser.add_argument("--target", type=float, default=0.125)
    add_output_flags(parser)
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace) -> int:
    config = get_run_config(args, Subcommand.COPIES)
    family = Family(args.family)
    copies = run_copies(family, args.ns, args.nth, args.target)
    row = {
        "family": family.value,
        "ns": args.ns,
        "nth": args.nth,
        "target": args.target,
        "side": "upper" if family is Family.STS else "lower",
        "copies": copies,
    }
    write_table(pd.DataFrame([row]), config, config.output_path, config.format)
    return 0
