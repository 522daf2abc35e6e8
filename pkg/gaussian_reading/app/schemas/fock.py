"""Schema del operador densidad truncado en la base de Fock."""

from typing import Any

import numpy as np
from pydantic import BaseModel, Field, field_validator, model_validator

from app.core.errors import ContractError


class FockOperator(BaseModel):
    """Matriz densidad de dos modos en la base |j,k>, índice j*dim + k."""
    dim: int = Field(..., ge=1)
    mat: np.ndarray
    tail_mass: float = 0.0

    class Config:
        arbitrary_types_allowed = True
        frozen = True

    @field_validator("mat", mode="before")
    @classmethod
    def _as_complex(cls, value: Any) -> np.ndarray:
        arr = np.array(value, dtype=complex)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise ContractError(f"density matrix must be square, got {arr.shape}")
        return arr

    @model_validator(mode="after")
    def _check_shape(self) -> "FockOperator":
        if self.mat.shape != (self.dim ** 2, self.dim ** 2):
            raise ContractError(
                f"density matrix shape {self.mat.shape} does not match cutoff {self.dim}"
            )
        return self

    @property
    def tensor(self) -> np.ndarray:
        """Vista (j, k, j', k') de la matriz."""
        return self.mat.reshape(self.dim, self.dim, self.dim, self.dim)
