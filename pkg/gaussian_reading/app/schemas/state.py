"""Schemas Pydantic para estados gaussianos de dos modos y transformaciones.

Contiene el registro inmutable `GaussianState` (vector de desplazamiento y
matriz de covarianza en una convención de vacío explícita), los parámetros
de las familias de estados y las transformaciones simplécticas locales.
"""

import enum
import math
from typing import Any, Dict, Optional, Tuple

import numpy as np
from pydantic import BaseModel, Field, field_validator, model_validator

from app.core.config import settings
from app.core.errors import ContractError

OMEGA_1 = np.array([[0.0, 1.0], [-1.0, 0.0]])


class Convention(str, enum.Enum):
    """Convención de normalización de cuadraturas (varianza del vacío)."""
    VACUUM_HALF = "vacuum_half"
    VACUUM_ONE = "vacuum_one"

    @property
    def vacuum_variance(self) -> float:
        """Varianza de cada cuadratura del vacío en esta convención."""
        return 0.5 if self is Convention.VACUUM_HALF else 1.0


class Family(str, enum.Enum):
    """Familias de transmisores soportadas."""
    STS = "sts"
    TSS = "tss"
    COHERENT_THERMAL = "coherent-thermal"
    SDTS = "sdts"
    STSDS = "stsds"


def _frozen_array(value: Any, shape: Tuple[int, ...], name: str) -> np.ndarray:
    arr = np.array(value, dtype=float)
    if arr.shape != shape:
        raise ContractError(f"{name} must have shape {shape}, got {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ContractError(f"{name} contains non-finite entries")
    arr.setflags(write=False)
    return arr


class GaussianState(BaseModel):
    """Estado gaussiano de dos modos, ordenamiento (x1, p1, x2, p2).

    La covarianza debe ser simétrica; la fisicalidad (principio de
    incertidumbre) se verifica aparte con `ensure_physical`.
    """
    disp: np.ndarray
    cov: np.ndarray
    convention: Convention = Convention.VACUUM_ONE

    class Config:
        arbitrary_types_allowed = True
        frozen = True

    @field_validator("disp", mode="before")
    @classmethod
    def _check_disp(cls, value: Any) -> np.ndarray:
        return _frozen_array(value, (4,), "disp")

    @field_validator("cov", mode="before")
    @classmethod
    def _check_cov(cls, value: Any) -> np.ndarray:
        arr = np.array(value, dtype=float)
        if arr.shape != (4, 4):
            raise ContractError(f"cov must have shape (4, 4), got {arr.shape}")
        scale = max(1.0, float(np.max(np.abs(arr))))
        if np.max(np.abs(arr - arr.T)) > settings.SYMMETRY_TOL * scale:
            raise ContractError("cov is not symmetric")
        return _frozen_array(0.5 * (arr + arr.T), (4, 4), "cov")

    @property
    def block_a(self) -> np.ndarray:
        return self.cov[:2, :2]

    @property
    def block_b(self) -> np.ndarray:
        return self.cov[2:, 2:]

    @property
    def block_c(self) -> np.ndarray:
        """Bloque cruzado A-B de la covarianza."""
        return self.cov[:2, 2:]


class StateParams(BaseModel):
    """Parámetros de una familia de estados.

    `r` y `n_s` describen el mismo squeezing (n_s = sinh²r); basta con dar
    uno de los dos. `alpha` es el par (Re α, Im α) aplicado al modo A.
    """
    r: Optional[float] = None
    n_s: Optional[float] = None
    n_th1: float = Field(0.0, ge=0.0)
    n_th2: float = Field(0.0, ge=0.0)
    alpha: Tuple[float, float] = (0.0, 0.0)
    r_prime: float = 0.0

    class Config:
        frozen = True

    @model_validator(mode="before")
    @classmethod
    def _fill_squeezing(cls, data: Any) -> Any:
        if not isinstance(data, dict):
            return data
        values: Dict[str, Any] = dict(data)
        r, n_s = values.get("r"), values.get("n_s")
        if n_s is not None and n_s < 0:
            raise ValueError("n_s must be non-negative")
        if r is None and n_s is None:
            values["r"], values["n_s"] = 0.0, 0.0
        elif n_s is None:
            values["n_s"] = math.sinh(r) ** 2
        elif r is None:
            values["r"] = math.asinh(math.sqrt(n_s))
        elif abs(math.sinh(r) ** 2 - n_s) > 1e-12 * max(1.0, n_s):
            raise ValueError("r and n_s are inconsistent (n_s must equal sinh^2 r)")
        return values

    @property
    def alpha_complex(self) -> complex:
        return complex(self.alpha[0], self.alpha[1])


class SympTransform(BaseModel):
    """Matriz simpléctica real (2x2 local o 4x4 global).

    `euler` guarda (θ, ξ, φ) con M = R(φ)·diag(ξ, 1/ξ)·R(θ) cuando la
    transformación es local y se conoce su descomposición.
    """
    mat: np.ndarray
    traceless: bool = False
    euler: Optional[Tuple[float, float, float]] = None

    class Config:
        arbitrary_types_allowed = True
        frozen = True

    @field_validator("mat", mode="before")
    @classmethod
    def _check_symplectic(cls, value: Any) -> np.ndarray:
        arr = np.array(value, dtype=float)
        if arr.shape not in ((2, 2), (4, 4)):
            raise ContractError(f"symplectic matrix must be 2x2 or 4x4, got {arr.shape}")
        omega = np.kron(np.eye(arr.shape[0] // 2), OMEGA_1)
        scale = max(1.0, float(np.max(np.abs(arr))) ** 2)
        if np.max(np.abs(arr.T @ omega @ arr - omega)) > settings.SYMPLECTIC_TOL * scale:
            raise ContractError("matrix is not symplectic")
        arr.setflags(write=False)
        return arr

    @model_validator(mode="after")
    def _check_traceless(self) -> "SympTransform":
        if self.traceless and abs(float(np.trace(self.mat))) > 1e-12 * max(
            1.0, float(np.max(np.abs(self.mat)))
        ):
            raise ContractError("transform flagged traceless has non-zero trace")
        return self
