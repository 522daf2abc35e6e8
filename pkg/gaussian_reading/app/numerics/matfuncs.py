"""Funciones de matrices simétricas y hermíticas vía descomposición espectral."""

import logging

import numpy as np

logger = logging.getLogger(__name__)


def sym_power(mat: np.ndarray, power: float) -> np.ndarray:
    """Potencia real de una matriz simétrica definida positiva."""
    vals, vecs = np.linalg.eigh(mat)
    if np.min(vals) <= 0:
        raise np.linalg.LinAlgError("matrix is not positive definite")
    return (vecs * vals ** power) @ vecs.T


def hermitian_eig(mat: np.ndarray, floor: float) -> tuple:
    """Autovalores (recortados a `floor`) y autovectores de una matriz hermítica.

    Los autovalores negativos por redondeo se llevan a cero; el tamaño del
    recorte se registra en debug.
    """
    herm = 0.5 * (mat + mat.conj().T)
    vals, vecs = np.linalg.eigh(herm)
    clipped = float(-np.min(vals)) if np.min(vals) < 0 else 0.0
    if clipped > 0:
        logger.debug("clipped negative eigenvalue of magnitude %.3e", clipped)
    vals = np.where(vals < floor, 0.0, vals)
    return vals, vecs


def hermitian_power_from_eig(vals: np.ndarray, vecs: np.ndarray, power: float) -> np.ndarray:
    """Reconstruir A^p a partir de la descomposición espectral (0^p = 0)."""
    safe = np.where(vals > 0, vals, 1.0)
    powered = np.where(vals > 0, safe ** power, 0.0)
    return (vecs * powered) @ vecs.conj().T
