"""Subcomando `discord`: discord gaussiano de respuesta y cotas de P_err^max."""

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
from app.discord.response import discord_response
from app.experiments.tables import write_table
from app.fock.discord import oracle_trace_discord
from app.gaussian.states import make_state
from app.schemas.discord import DiscordMetric
from app.schemas.run import Subcommand


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("discord", help="Gaussian discord of response")
    add_state_flags(parser)
    parser.add_argument(
        "--metric",
        choices=["hellinger", "bures", "trace", "both"],
        default="both",
        help="'trace' uses the Fock oracle",
    )
    parser.add_argument("--cutoff", type=int, help="Fock cutoff for --metric trace")
    add_output_flags(parser)
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace) -> int:
    config = get_run_config(args, Subcommand.DISCORD)
    params, family = get_state_params(args), get_family(args)
    if args.metric == "trace":
        results = [oracle_trace_discord(params, family, args.cutoff)]
    else:
        state = make_state(params, family)
        metrics = (
            [DiscordMetric.HELLINGER, DiscordMetric.BURES]
            if args.metric == "both"
            else [DiscordMetric(args.metric)]
        )
        results = [discord_response(state, metric) for metric in metrics]
    rows = []
    for result in results:
        row = params_row(params, family)
        row.update(result.model_dump(mode="json"))
        rows.append(row)
    write_table(pd.DataFrame(rows), config, config.output_path, config.format)
    return 0
