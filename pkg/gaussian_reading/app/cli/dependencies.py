"""Dependencias compartidas por los subcomandos de la CLI.

Resuelven, a partir de los argumentos parseados, la configuración de la
corrida, los parámetros del estado y la familia pedida.
"""

import argparse
from typing import Dict, List

from pydantic import ValidationError

from app.core.errors import UsageError
from app.schemas.run import GridSpec, OutputFormat, RunConfig, Subcommand
from app.schemas.state import Family, StateParams

# flag destination -> name used by sweeps and provenance
FIXED_FLAGS = {
    "r": "r",
    "nth1": "nth1",
    "nth2": "nth2",
    "nth": "nth",
    "ns": "ns",
    "rprime": "rprime",
}


def parse_alpha(text: str) -> complex:
    """Interpretar `--alpha` como número complejo (`1.2`, `0.5+0.3j`)."""
    try:
        return complex(text.replace(" ", ""))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"invalid complex amplitude '{text}'") from exc


def add_state_flags(parser: argparse.ArgumentParser, family_required: bool = True) -> None:
    """Flags que describen un estado de una familia."""
    parser.add_argument(
        "--family",
        choices=[family.value for family in Family],
        required=family_required,
        help="state family",
    )
    parser.add_argument("--r", type=float, help="two-mode squeezing r")
    parser.add_argument("--ns", type=float, help="squeezed photons n_s = sinh^2 r")
    parser.add_argument("--nth1", type=float, help="thermal photons on mode A")
    parser.add_argument("--nth2", type=float, help="thermal photons on mode B")
    parser.add_argument("--nth", type=float, help="symmetric thermal photons (sets both modes)")
    parser.add_argument("--alpha", type=parse_alpha, help="coherent amplitude on mode A")
    parser.add_argument("--rprime", type=float, help="inner squeezing r' of STSDS")


def add_output_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--out", help="output file (default: stdout)")
    parser.add_argument(
        "--format", choices=[fmt.value for fmt in OutputFormat], default=OutputFormat.CSV.value
    )


def add_grid_flag(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--grid",
        action="append",
        default=[],
        metavar="NAME:MIN:MAX:STEPS",
        help="swept parameter (repeatable)",
    )


def get_fixed(args: argparse.Namespace) -> Dict[str, float]:
    """Parámetros fijos presentes en la línea de comandos."""
    fixed = {}
    for dest, name in FIXED_FLAGS.items():
        value = getattr(args, dest, None)
        if value is not None:
            fixed[name] = float(value)
    return fixed


def get_grids(args: argparse.Namespace) -> List[GridSpec]:
    return [GridSpec.parse(text) for text in getattr(args, "grid", [])]


def get_run_config(args: argparse.Namespace, subcommand: Subcommand) -> RunConfig:
    """Construir la `RunConfig` de la corrida o lanzar `UsageError`."""
    try:
        return RunConfig(
            subcommand=subcommand,
            figure_id=getattr(args, "id", None),
            family=getattr(args, "family", None),
            grids=get_grids(args),
            fixed=get_fixed(args),
            output_path=getattr(args, "out", None),
            format=OutputFormat(getattr(args, "format", OutputFormat.CSV.value)),
            cutoff=getattr(args, "cutoff", None),
        )
    except ValidationError as exc:
        raise UsageError(f"invalid run configuration: {exc}") from exc


def get_family(args: argparse.Namespace) -> Family:
    if args.family is None:
        raise UsageError("--family is required")
    return Family(args.family)


def get_state_params(args: argparse.Namespace) -> StateParams:
    """Parámetros del estado a partir de los flags; `--nth` fija ambos modos."""
    nth1 = args.nth1 if args.nth1 is not None else args.nth
    nth2 = args.nth2 if args.nth2 is not None else args.nth
    alpha = args.alpha or 0j
    try:
        return StateParams(
            r=args.r,
            n_s=args.ns,
            n_th1=nth1 or 0.0,
            n_th2=nth2 or 0.0,
            alpha=(alpha.real, alpha.imag),
            r_prime=args.rprime or 0.0,
        )
    except ValidationError as exc:
        raise UsageError(f"invalid state parameters: {exc}") from exc


def params_row(params: StateParams, family: Family) -> Dict[str, object]:
    """Columnas comunes que identifican el estado en las tablas."""
    return {
        "family": family.value,
        "r": params.r,
        "ns": params.n_s,
        "nth1": params.n_th1,
        "nth2": params.n_th2,
        "alpha_re": params.alpha[0],
        "alpha_im": params.alpha[1],
        "rprime": params.r_prime,
    }
