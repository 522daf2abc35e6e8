"""Fidelidad de Uhlmann entre estados gaussianos de dos modos.

Se usa la fórmula cerrada en VacuumHalf:
    F = exp(-½ δ^T (σ1+σ2)^{-1} δ) · (X + sqrt(X² - Δ)) / Δ,  X = √Γ + √Λ,
con Δ = det(σ1+σ2), Γ = 16 det(Ωσ1Ωσ2 - ¼I), Λ = 16 det(σ1 + i/2 Ω) det(σ2 + i/2 Ω).
"""

import math
from typing import Tuple

import numpy as np

from app.core.config import settings
from app.core.errors import NumericError
from app.gaussian.states import convert
from app.gaussian.symplectic import symplectic_form
from app.gaussian.williamson import ensure_physical
from app.schemas.state import Convention, GaussianState

OMEGA = symplectic_form()


def _uncertainty_det(cov: np.ndarray) -> float:
    """det(σ + i/2 Ω) = Π (ν_k² - ¼) con ν_k en VacuumHalf.

    Un modo puro (2ν_k - 1 bajo PURE_MODE_TOL) aporta un factor exactamente nulo.
    """
    moduli = np.sort(np.abs(np.linalg.eigvals(OMEGA @ cov).imag))[::-1][::2]
    factors = [
        0.0 if 2.0 * nu - 1.0 < settings.PURE_MODE_TOL else nu * nu - 0.25
        for nu in moduli
    ]
    return math.prod(factors)


def fidelity_determinants(cov1: np.ndarray, cov2: np.ndarray) -> Tuple[float, float, float]:
    """Determinantes (Δ, Γ, Λ) para covarianzas en VacuumHalf.

    Λ se arma con los espectros simplécticos, de modo que vale cero exacto si
    algún estado es puro. Γ se recorta a cero cuando el redondeo lo deja
    apenas negativo.
    """
    delta_big = float(np.linalg.det(cov1 + cov2))
    gamma_big = 16.0 * float(np.linalg.det(OMEGA @ cov1 @ OMEGA @ cov2 - 0.25 * np.eye(4)))
    lambda_big = 16.0 * _uncertainty_det(cov1) * _uncertainty_det(cov2)
    return delta_big, max(gamma_big, 0.0), max(lambda_big, 0.0)


def fidelity_from_moments(
    disp1: np.ndarray, cov1: np.ndarray, disp2: np.ndarray, cov2: np.ndarray
) -> float:
    """Fidelidad a partir de momentos en VacuumHalf, sin verificar fisicalidad."""
    total = cov1 + cov2
    if np.linalg.cond(total) > settings.MAX_CONDITION:
        raise NumericError("sigma1 + sigma2 is singular")
    delta_big, gamma_big, lambda_big = fidelity_determinants(cov1, cov2)
    root = np.sqrt(gamma_big) + np.sqrt(lambda_big)
    overlap = (root + np.sqrt(max(root * root - delta_big, 0.0))) / delta_big
    delta = disp1 - disp2
    exponent = -0.5 * float(delta @ np.linalg.solve(total, delta))
    return float(np.clip(overlap * np.exp(exponent), 0.0, 1.0))


def uhlmann_fidelity(s1: GaussianState, s2: GaussianState) -> float:
    """Fidelidad de Uhlmann F(ρ1, ρ2) en [0, 1].

    Args:
        s1: primer estado (cualquier convención).
        s2: segundo estado.

    Returns:
        La fidelidad; 1 si y solo si los estados coinciden.
    """
    h1 = convert(ensure_physical(s1), Convention.VACUUM_HALF)
    h2 = convert(ensure_physical(s2), Convention.VACUUM_HALF)
    return fidelity_from_moments(h1.disp, h1.cov, h2.disp, h2.cov)
