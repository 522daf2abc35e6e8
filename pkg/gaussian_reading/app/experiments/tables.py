"""Escritura de tablas de resultados en CSV o JSON.

El CSV lleva primero líneas `#` con la configuración de la corrida y luego
la tabla con encabezado snake_case y 12 cifras significativas. El JSON
guarda `{"config": ..., "rows": [...]}` con NaN como null.
"""

import json
import sys
from typing import Optional

import pandas as pd

from app.core.config import settings
from app.schemas.run import OutputFormat, RunConfig


def render_table(
    frame: pd.DataFrame, config: RunConfig, fmt: OutputFormat = OutputFormat.CSV
) -> str:
    """Serializar la tabla; la misma entrada produce siempre el mismo texto."""
    if fmt is OutputFormat.JSON:
        rows = frame.to_json(orient="records", double_precision=12)
        header = json.dumps(config.model_dump(mode="json"), sort_keys=True)
        return f'{{"config": {header}, "rows": {rows}}}\n'
    lines = [f"# {line}" for line in config.provenance()]
    body = frame.to_csv(index=False, float_format=settings.CSV_FLOAT_FORMAT, lineterminator="\n")
    return "\n".join(lines) + "\n" + body


def write_table(
    frame: pd.DataFrame,
    config: RunConfig,
    path: Optional[str] = None,
    fmt: OutputFormat = OutputFormat.CSV,
) -> None:
    """Escribir la tabla en `path` o en stdout si no se indica archivo."""
    text = render_table(frame, config, fmt)
    if path is None:
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8", newline="") as handle:
        handle.write(text)
