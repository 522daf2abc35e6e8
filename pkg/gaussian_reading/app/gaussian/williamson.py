"""Forma normal de Williamson y espectro simpléctico.

Para una covarianza σ definida positiva se obtiene S simpléctica y
Λ = diag(ν1, ν1, ν2, ν2) con σ = S Λ S^T, ν1 >= ν2, usando la forma real
de Schur de σ^{-1/2} Ω σ^{-1/2}.
"""

import logging
from typing import Tuple

import numpy as np
from scipy.linalg import schur

from app.core.config import settings
from app.core.errors import DomainError, NumericError
from app.gaussian.symplectic import symplectic_form
from app.numerics.matfuncs import sym_power
from app.schemas.state import GaussianState, SympTransform

logger = logging.getLogger(__name__)


def symplectic_spectrum(state: GaussianState) -> np.ndarray:
    """Autovalores simplécticos (ν1, ν2) en orden descendente.

    Se expresan en las unidades de la convención del estado.
    """
    eigs = np.linalg.eigvals(symplectic_form() @ state.cov)
    moduli = np.sort(np.abs(eigs.imag))[::-1]
    return moduli[::2].copy()


def is_physical(state: GaussianState) -> bool:
    """Principio de incertidumbre: σ > 0 y ν_min >= varianza del vacío."""
    if np.min(np.linalg.eigvalsh(state.cov)) <= 0:
        return False
    nu_min = float(symplectic_spectrum(state)[-1])
    return nu_min >= state.convention.vacuum_variance - settings.PHYSICALITY_TOL


def ensure_physical(state: GaussianState) -> GaussianState:
    if not is_physical(state):
        raise DomainError("covariance violates the uncertainty principle")
    return state


def williamson(state: GaussianState) -> Tuple[SympTransform, np.ndarray]:
    """Descomponer la covarianza del estado en forma normal de Williamson.

    Args:
        state: estado con covarianza definida positiva.

    Returns:
        Par (S, ν) con σ = S diag(ν1, ν1, ν2, ν2) S^T y ν1 >= ν2.

    Raises:
        DomainError: si la covarianza no es definida positiva.
        NumericError: si la reconstrucción o la simplecticidad fallan.
    """
    cov = state.cov
    try:
        root = sym_power(cov, 0.5)
        inv_root = sym_power(cov, -0.5)
    except np.linalg.LinAlgError as exc:
        raise DomainError("covariance is not positive definite") from exc

    generator = inv_root @ symplectic_form() @ inv_root
    schur_form, basis = schur(generator, output="real")

    basis = basis.copy()
    couplings = np.empty(2)
    for k in range(2):
        coupling = schur_form[2 * k, 2 * k + 1]
        if coupling < 0:
            # Swap the pair so the block reads [[0, t], [-t, 0]] with t > 0
            basis[:, [2 * k, 2 * k + 1]] = basis[:, [2 * k + 1, 2 * k]]
            coupling = -coupling
        couplings[k] = coupling

    nu = 1.0 / couplings
    order = np.argsort(-nu, kind="stable")
    nu = nu[order]
    columns = np.concatenate([[2 * k, 2 * k + 1] for k in order])
    basis = basis[:, columns]
    diag = np.repeat(nu, 2)
    symp = root @ basis @ np.diag(diag ** -0.5)

    scale = max(1.0, float(np.max(np.abs(cov))))
    recon_err = float(np.max(np.abs(symp @ np.diag(diag) @ symp.T - cov)))
    omega = symplectic_form()
    symp_err = float(np.max(np.abs(symp @ omega @ symp.T - omega)))
    if recon_err > settings.WILLIAMSON_TOL * scale or symp_err > settings.WILLIAMSON_TOL * scale:
        logger.error(
            "williamson failed: reconstruction %.3e, symplecticity %.3e, nu=%s",
            recon_err, symp_err, nu,
        )
        raise NumericError(
            f"Williamson decomposition failed (reconstruction {recon_err:.3e}, "
            f"symplecticity {symp_err:.3e})"
        )
    return SympTransform(mat=symp), nu
