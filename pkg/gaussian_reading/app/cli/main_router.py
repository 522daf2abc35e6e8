"""Parser principal que incluye los subcomandos de la CLI.

Este módulo centraliza el registro de los subcomandos de estados,
métricas, discord, figuras, umbrales, copias y validación.
"""

import argparse

from app.cli.commands import copies, discord, figure, metric, state, threshold, validate
from app.core.config import settings


def build_parser() -> argparse.ArgumentParser:
    """Construir el parser con un subparser por subcomando."""
    parser = argparse.ArgumentParser(
        prog="gaussian-reading",
        description=(
            f"{settings.PROJECT_NAME}: distinguishability of two-mode Gaussian transmitters"
        ),
    )
    parser.add_argument("--log-level", default=None, help="override READING_LOG_LEVEL")
    subparsers = parser.add_subparsers(dest="subcommand", required=True)
    for command in (state, metric, discord, figure, threshold, copies, validate):
        command.register(subparsers)
    return parser
