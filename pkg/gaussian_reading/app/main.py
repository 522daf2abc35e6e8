"""Punto de entrada de la CLI del proyecto (subcomandos principales)."""

import logging
import sys
from typing import List, Optional

from pydantic import ValidationError

from app.cli.main_router import build_parser
from app.core.errors import ReadingError, UsageError
from app.core.log_config import configure_logging

logger = logging.getLogger(__name__)


def main(argv: Optional[List[str]] = None) -> int:
    """Parsear argumentos, ejecutar el subcomando y traducir errores a códigos de salida.

    Devuelve: 0 si todo salió bien, 2 para errores de uso y 3 para fallos
    numéricos o de validación.
    """
    args = build_parser().parse_args(argv)
    configure_logging(args.log_level)
    try:
        return args.handler(args)
    except ReadingError as exc:
        logger.error("%s: %s", type(exc).__name__, exc.detail)
        return exc.exit_code
    except ValidationError as exc:
        logger.error("invalid parameters: %s", exc)
        return UsageError.exit_code


if __name__ == "__main__":
    sys.exit(main())
