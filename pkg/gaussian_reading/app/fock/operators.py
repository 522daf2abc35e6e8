"""Operadores de un modo y de dos modos en la base de Fock truncada.

Convención de fase: x = a + a†, p = -i(a - a†) (VacuumOne). Con ella
    exp(-iφ n)                  ↔ F_φ
    exp(s/2 (a² - a†²))         ↔ diag(e^{-s}, e^{s})
    exp(r (a1†a2† - a1 a2))     ↔ S(r) de dos modos
    D(α)                        ↔ desplazamiento 2(Re α, Im α).
Los squeezers se obtienen exponenciando el generador en un espacio con
relleno y recortando, para limitar el error de truncamiento.
"""

import logging
import math

import numpy as np
from scipy.linalg import expm
from scipy.special import eval_genlaguerre, gammaln

from app.core.errors import ContractError
from app.schemas.state import SympTransform

logger = logging.getLogger(__name__)

UNITARITY_TOL = 1e-8


def annihilation(dim: int) -> np.ndarray:
    """Operador de aniquilación a truncado a `dim` niveles."""
    return np.diag(np.sqrt(np.arange(1, dim, dtype=float)), k=1)


def thermal_distribution(n_mean: float, dim: int) -> np.ndarray:
    """Probabilidades p(m) = n^m / (1+n)^{m+1} para m < dim."""
    levels = np.arange(dim)
    if n_mean == 0:
        return (levels == 0).astype(float)
    ratio = n_mean / (1.0 + n_mean)
    return ratio ** levels / (1.0 + n_mean)


def displacement(alpha: complex, dim: int) -> np.ndarray:
    """Matriz de D(α) por la fórmula exacta de Cahill con polinomios de Laguerre."""
    rows, cols = np.meshgrid(np.arange(dim), np.arange(dim), indexing="ij")
    high, low = np.maximum(rows, cols), np.minimum(rows, cols)
    x = abs(alpha) ** 2
    # alpha^(m-n) above the diagonal, (-alpha*)^(n-m) below
    base = np.where(rows >= cols, alpha, -np.conj(alpha))
    power = (high - low).astype(float)
    prefactor = np.exp(0.5 * (gammaln(low + 1) - gammaln(high + 1)) - 0.5 * x)
    phase = np.where(power == 0, 1.0 + 0j, base ** power)
    return prefactor * phase * eval_genlaguerre(low, high - low, x)


def phase_rotation(phi: float, dim: int) -> np.ndarray:
    """exp(-iφ n)."""
    return np.diag(np.exp(-1j * phi * np.arange(dim)))


def _check_columns(columns: np.ndarray, label: str) -> None:
    defect = float(np.max(np.abs(columns.conj().T @ columns - np.eye(columns.shape[1]))))
    if defect > UNITARITY_TOL:
        logger.warning("%s not unitary on low-photon block: defect %.3e", label, defect)


def single_mode_squeezer(xi: float, dim: int, pad: int) -> np.ndarray:
    """Squeezer de un modo con acción diag(ξ, 1/ξ) sobre (x, p)."""
    s = -math.log(xi)
    size = dim + pad
    lowering_sq = np.diag(np.sqrt(np.arange(2, size) * np.arange(1, size - 1)), k=2)
    generator = 0.5 * s * (lowering_sq - lowering_sq.T)
    unitary = expm(generator)[:dim, :dim]
    _check_columns(unitary[:, : max(dim // 2, 1)], "single-mode squeezer")
    return unitary


def two_mode_squeezer(r: float, dim: int, pad: int) -> np.ndarray:
    """Squeezer de dos modos en la base |j,k>, índice j*dim + k.

    El generador conserva j - k, así que se exponencia cada cadena por
    separado con `pad` niveles extra.
    """
    unitary = np.zeros((dim * dim, dim * dim))
    for diff in range(-(dim - 1), dim):
        j0, k0 = max(diff, 0), max(-diff, 0)
        length = dim - abs(diff)
        size = length + pad
        steps = np.arange(size - 1)
        coupling = r * np.sqrt((j0 + steps + 1.0) * (k0 + steps + 1.0))
        generator = np.diag(coupling, k=-1) - np.diag(coupling, k=1)
        block = expm(generator)[:length, :length]
        index = (j0 + np.arange(length)) * dim + (k0 + np.arange(length))
        unitary[np.ix_(index, index)] = block
    low = [j * dim + k for j in range(max(dim // 2, 1)) for k in range(max(dim // 2, 1))]
    _check_columns(unitary[:, low], "two-mode squeezer")
    return unitary


def local_unitary(transform: SympTransform, dim: int, pad: int) -> np.ndarray:
    """Imagen de Fock de una simpléctica local R(φ)·diag(ξ, 1/ξ)·R(θ)."""
    if transform.mat.shape != (2, 2) or transform.euler is None:
        raise ContractError("local unitary needs a 2x2 transform with Euler parameters")
    theta, xi, phi = transform.euler
    unitary = phase_rotation(theta, dim)
    if abs(xi - 1.0) > 1e-15:
        unitary = single_mode_squeezer(xi, dim, pad) @ unitary
    return phase_rotation(phi, dim) @ unitary


def apply_mode_unitary(rho: np.ndarray, unitary: np.ndarray, dim: int) -> np.ndarray:
    """(U ⊗ 1) ρ (U ⊗ 1)† sobre el modo A."""
    tensor = rho.reshape(dim, dim, dim, dim)
    out = np.einsum("ab,bkcl,dc->akdl", unitary, tensor, unitary.conj(), optimize=True)
    return out.reshape(dim * dim, dim * dim)
