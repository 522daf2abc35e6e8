"""Búsqueda global del mínimo sobre transformaciones locales sin traza.

Las transformaciones se parametrizan por (θ, ξ) con θ en [0, π) y ξ > 0.
Primero se evalúa una grilla producto (θ lineal, log2 ξ lineal) y luego
se refina con Nelder-Mead partiendo del mejor punto.
"""

import logging
import math
from typing import Callable, Tuple

import numpy as np
from scipy.optimize import minimize

logger = logging.getLogger(__name__)

Objective = Callable[[float, float], float]


def _grid_minimum(
    objective: Objective, thetas: np.ndarray, log_xis: np.ndarray
) -> Tuple[int, int, float]:
    values = np.array([[objective(theta, 2.0 ** lx) for lx in log_xis] for theta in thetas])
    # argmin keeps the first hit, i.e. smallest theta then smallest xi
    flat = int(np.argmin(values))
    i, j = np.unravel_index(flat, values.shape)
    return int(i), int(j), float(values[i, j])


def minimize_over_transforms(
    objective: Objective,
    theta_points: int,
    xi_points: int,
    log2_span: float,
    xatol: float = 1e-9,
    fatol: float = 1e-12,
) -> Tuple[float, float, float]:
    """Minimizar `objective(θ, ξ)` por grilla más refinamiento local.

    Si el mejor punto de la grilla cae en el borde del rango de ξ, el rango
    se duplica una vez y se avisa en el log.

    Args:
        objective: función de (θ, ξ) a minimizar.
        theta_points: puntos de la grilla en θ sobre [0, π).
        xi_points: puntos de la grilla en log2 ξ sobre [-span, span].
        log2_span: semiancho del rango de log2 ξ.
        xatol: tolerancia en parámetros del refinamiento.
        fatol: tolerancia en valor del refinamiento.

    Returns:
        Tripla (mínimo, θ*, ξ*).
    """
    thetas = np.linspace(0.0, math.pi, theta_points, endpoint=False)
    span = log2_span
    log_xis = np.linspace(-span, span, xi_points)
    i, j, best = _grid_minimum(objective, thetas, log_xis)
    if xi_points > 1 and j in (0, xi_points - 1):
        logger.warning("discord minimum on xi grid boundary 2^%+.1f, widening once", log_xis[j])
        span *= 2.0
        log_xis = np.linspace(-span, span, xi_points)
        i, j, best = _grid_minimum(objective, thetas, log_xis)

    best_theta, best_lx = float(thetas[i]), float(log_xis[j])
    d_theta = math.pi / max(theta_points, 1)
    d_lx = 2.0 * span / max(xi_points - 1, 1)
    start = np.array([best_theta, best_lx])
    simplex = np.array([start, start + [d_theta, 0.0], start + [0.0, d_lx]])
    refined = minimize(
        lambda x: objective(float(x[0]), 2.0 ** float(x[1])),
        start,
        method="Nelder-Mead",
        options={"xatol": xatol, "fatol": fatol, "initial_simplex": simplex, "maxiter": 4000},
    )
    if refined.fun < best:
        best = float(refined.fun)
        best_theta, best_lx = float(refined.x[0]), float(refined.x[1])
    return best, best_theta % math.pi, 2.0 ** best_lx
