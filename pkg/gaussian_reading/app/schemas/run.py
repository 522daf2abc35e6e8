"""Schemas Pydantic para la configuración de una corrida de la CLI.

`RunConfig` agrupa subcomando, grillas de barrido, parámetros fijos y
destino de la salida; se serializa en el encabezado de cada tabla.
"""

import enum
from typing import Dict, List, Optional

import numpy as np
from pydantic import BaseModel, Field, model_validator

from app.core.errors import UsageError


class Subcommand(str, enum.Enum):
    """Subcomandos disponibles en la CLI."""
    STATE = "state"
    METRIC = "metric"
    DISCORD = "discord"
    FIGURE = "figure"
    THRESHOLD = "threshold"
    COPIES = "copies"
    VALIDATE = "validate"


class OutputFormat(str, enum.Enum):
    CSV = "csv"
    JSON = "json"


class GridSpec(BaseModel):
    """Eje de barrido lineal `name:min:max:steps` (extremos incluidos)."""
    name: str = Field(..., min_length=1)
    min: float
    max: float
    steps: int = Field(..., ge=1)

    class Config:
        frozen = True

    @model_validator(mode="after")
    def _check_range(self) -> "GridSpec":
        if self.steps > 1 and not self.max > self.min:
            raise ValueError(f"grid '{self.name}' needs max > min")
        return self

    @classmethod
    def parse(cls, text: str) -> "GridSpec":
        """Construir un `GridSpec` desde el texto `name:min:max:steps`."""
        parts = text.split(":")
        if len(parts) != 4:
            raise UsageError(f"grid '{text}' must look like name:min:max:steps")
        name, low, high, steps = parts
        try:
            return cls(name=name, min=float(low), max=float(high), steps=int(steps))
        except ValueError as exc:
            raise UsageError(f"invalid grid '{text}': {exc}") from exc

    def values(self) -> np.ndarray:
        return np.linspace(self.min, self.max, self.steps)


class RunConfig(BaseModel):
    """Configuración completa de una ejecución de la CLI."""
    subcommand: Subcommand
    figure_id: Optional[int] = Field(None, ge=1, le=9)
    family: Optional[str] = None
    grids: List[GridSpec] = []
    fixed: Dict[str, float] = {}
    output_path: Optional[str] = None
    format: OutputFormat = OutputFormat.CSV
    cutoff: Optional[int] = Field(None, ge=1)

    class Config:
        frozen = True

    @model_validator(mode="after")
    def _check_subcommand(self) -> "RunConfig":
        if self.subcommand is Subcommand.FIGURE and self.figure_id is None:
            raise ValueError("figure subcommand requires a figure id")
        names = [grid.name for grid in self.grids]
        if len(set(names)) != len(names):
            raise ValueError("grid names must be unique")
        return self

    def grid(self, name: str) -> Optional[GridSpec]:
        for spec in self.grids:
            if spec.name == name:
                return spec
        return None

    def provenance(self) -> List[str]:
        """Líneas de comentario que registran la configuración en las tablas."""
        lines = [f"subcommand={self.subcommand.value}"]
        if self.figure_id is not None:
            lines.append(f"figure={self.figure_id}")
        if self.family is not None:
            lines.append(f"family={self.family}")
        for spec in self.grids:
            lines.append(f"grid={spec.name}:{spec.min!r}:{spec.max!r}:{spec.steps}")
        for key in sorted(self.fixed):
            lines.append(f"fixed={key}:{self.fixed[key]!r}")
        if self.cutoff is not None:
            lines.append(f"cutoff={self.cutoff}")
        return lines
