"""Schemas Pydantic para los reportes de distinguibilidad."""

from typing import Tuple

import numpy as np
from pydantic import BaseModel, Field, model_validator

from app.core.errors import ContractError


class MetricReport(BaseModel):
    """Fidelidad, afinidad, QCB y cotas de Helstrom para n copias."""
    fidelity: float = Field(..., ge=0.0, le=1.0)
    affinity: float = Field(..., ge=0.0, le=1.0)
    t_star: float = Field(..., gt=0.0, lt=1.0)
    qcb: float = Field(..., ge=0.0, le=0.5)
    lbp: float = Field(..., ge=0.0, le=0.5)
    ubp: float = Field(..., ge=0.0, le=0.5)
    copies: int = Field(1, ge=1)

    class Config:
        frozen = True

    @model_validator(mode="after")
    def _check_sandwich(self) -> "MetricReport":
        if self.lbp > self.ubp + 1e-9:
            raise ContractError(f"lower bound {self.lbp} exceeds upper bound {self.ubp}")
        return self


class ChernoffAux(BaseModel):
    """Cantidades auxiliares de la fidelidad y del funcional Q_t.

    Δ, Γ, Λ son los determinantes de la fórmula de fidelidad; `g_p` es el
    producto de núcleos G y `lambda_p` los cuatro valores Λ_p usados para
    construir V1 y V2.
    """
    delta_big: float = Field(..., ge=0.0)
    gamma_big: float = Field(..., ge=0.0)
    lambda_big: float = Field(..., ge=0.0)
    g_p: float
    lambda_p: Tuple[float, float, float, float]
    v1: np.ndarray
    v2: np.ndarray

    class Config:
        arbitrary_types_allowed = True
        frozen = True
