"""Subcomando `threshold`: ruido N_th1 a partir del cual un STS supera a un TMSV."""

import argparse
import logging

import pandas as pd

from app.cli.dependencies import add_output_flags, get_run_config
from app.core.errors import NotFoundError, UsageError
from app.experiments.tables import write_table
from app.experiments.thresholds import ThresholdReference, run_threshold
from app.schemas.run import Subcommand

logger = logging.getLogger(__name__)


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser(
        "threshold", help="noise threshold against two-mode squeezed vacuum"
    )
    parser.add_argument("--r", type=float, required=True)
    parser.add_argument("--nth2", type=float, default=0.0)
    parser.add_argument("--reff", type=float, help="effective squeezing of the reference TMSV")
    add_output_flags(parser)
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace) -> int:
    config = get_run_config(args, Subcommand.THRESHOLD)
    if args.reff is not None and args.reff <= 0:
        raise UsageError("--reff must be positive")
    reference = ThresholdReference.TMSVS_SAME_R
    if args.reff is not None:
        reference = ThresholdReference.TMSVS_EFFECTIVE
    closed = run_threshold(args.r, args.nth2, reference, args.reff)
    try:
        exact = run_threshold(args.r, args.nth2, reference, args.reff, closed_form=False)
    except NotFoundError as exc:
        logger.warning("numeric threshold not found: %s", exc.detail)
        exact = float("nan")
    row = {
        "r": args.r,
        "nth2": args.nth2,
        "reference": reference.value,
        "r_eff": args.reff if args.reff is not None else args.r,
        "nth1_threshold": exact,
        "nth1_threshold_closed": closed,
    }
    write_table(pd.DataFrame([row]), config, config.output_path, config.format)
    return 0
