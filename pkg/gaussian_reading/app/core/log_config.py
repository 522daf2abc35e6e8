"""Configuración del logging de la aplicación."""

import logging
import sys
from typing import Optional

from app.core.config import settings

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


def configure_logging(level: Optional[str] = None) -> None:
    """Configurar el logger raíz una sola vez, escribiendo en stderr.

    Args:
        level: nivel de log; por defecto `settings.LOG_LEVEL`.
    """
    logging.basicConfig(
        level=(level or settings.LOG_LEVEL).upper(),
        format=LOG_FORMAT,
        stream=sys.stderr,
        force=True,
    )
