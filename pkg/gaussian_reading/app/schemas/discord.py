"""Schemas Pydantic para el discord gaussiano de respuesta."""

import enum
from typing import Optional

from pydantic import BaseModel, Field


class DiscordMetric(str, enum.Enum):
    """Distancia usada para medir la respuesta del estado."""
    HELLINGER = "hellinger"
    BURES = "bures"
    TRACE = "trace"


class DiscordResult(BaseModel):
    """Valor normalizado del discord, su minimizador (θ, ξ) y cotas de P_err^max.

    Hellinger aporta la cota superior, Bures la inferior y la traza
    (solo en el oráculo) ambas, porque da P_err^max exacta.
    """
    value: float = Field(..., ge=0.0, le=1.0)
    argmin_theta: float
    argmin_xi: float = Field(..., gt=0.0)
    metric: DiscordMetric
    perr_max_lower: Optional[float] = None
    perr_max_upper: Optional[float] = None

    class Config:
        frozen = True
