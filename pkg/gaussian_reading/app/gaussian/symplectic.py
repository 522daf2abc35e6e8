"""Transformaciones simplécticas de uno y dos modos.

Convenciones: ordenamiento (x1, p1, x2, p2), forma simpléctica
Ω = ω ⊕ ω con ω = [[0, 1], [-1, 0]], rotación de fase
F_φ = [[cos φ, sin φ], [-sin φ, cos φ]].
"""

import math

import numpy as np
from scipy.linalg import block_diag

from app.core.errors import DomainError
from app.schemas.state import OMEGA_1, SympTransform

Z_PAULI = np.diag([1.0, -1.0])


def symplectic_form(modes: int = 2) -> np.ndarray:
    """Forma simpléctica Ω para `modes` modos."""
    return block_diag(*([OMEGA_1] * modes))


def rotation(phi: float) -> np.ndarray:
    return np.array([[math.cos(phi), math.sin(phi)], [-math.sin(phi), math.cos(phi)]])


def phase_shift(phi: float) -> SympTransform:
    """Rotación de fase local F_φ; sin traza cuando φ = π/2 (mod π)."""
    mat = rotation(phi)
    return SympTransform(
        mat=mat,
        traceless=abs(float(np.trace(mat))) <= 1e-12,
        euler=(0.0, 1.0, phi),
    )


def euler_traceless(theta: float, xi: float) -> SympTransform:
    """Transformación local sin traza R(π/2 - θ)·diag(ξ, 1/ξ)·R(θ).

    Cubre todas las simplécticas 2x2 de traza nula; para ξ = 1 coincide
    con F_{π/2} para cualquier θ.

    Args:
        theta: ángulo de la rotación interior.
        xi: factor de squeezing, estrictamente positivo.

    Returns:
        La transformación con su descomposición de Euler registrada.
    """
    if not xi > 0 or not math.isfinite(xi):
        raise DomainError(f"xi must be positive, got {xi}")
    phi = math.pi / 2 - theta
    mat = rotation(phi) @ np.diag([xi, 1.0 / xi]) @ rotation(theta)
    return SympTransform(mat=mat, traceless=True, euler=(theta, xi, phi))


def two_mode_squeeze(r: float) -> SympTransform:
    """Squeezer de dos modos S(r) = [[ch I, sh Z], [sh Z, ch I]]."""
    ch, sh = math.cosh(r), math.sinh(r)
    mat = np.block([[ch * np.eye(2), sh * Z_PAULI], [sh * Z_PAULI, ch * np.eye(2)]])
    return SympTransform(mat=mat)


def embed_local(local: SympTransform) -> np.ndarray:
    """Matriz 4x4 de `local` actuando sobre el modo A."""
    return block_diag(local.mat, np.eye(2))


def embed_remote(local: SympTransform) -> np.ndarray:
    """Matriz 4x4 de `local` actuando sobre el modo B."""
    return block_diag(np.eye(2), local.mat)


def is_symplectic(mat: np.ndarray, tol: float = 1e-10) -> bool:
    """Verificar M^T Ω M = Ω con tolerancia relativa a la escala de M."""
    omega = symplectic_form(mat.shape[0] // 2)
    scale = max(1.0, float(np.max(np.abs(mat))) ** 2)
    return bool(np.max(np.abs(mat.T @ omega @ mat - omega)) <= tol * scale)
