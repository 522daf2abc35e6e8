"""Discord gaussiano de respuesta y cotas del peor caso de la codificación.

El discord de respuesta mide la mínima distancia (normalizada a [0, 1])
entre ρ y (S ⊕ 1) ρ (S ⊕ 1)^T sobre todas las simplécticas locales S sin
traza, parametrizadas como R(π/2 - θ)·diag(ξ, 1/ξ)·R(θ). La distancia de
Hellinger da la cota superior de P_err^max y la de Bures la inferior.
"""

import logging
import math
from typing import Callable, Optional, Tuple

import numpy as np

from app.core.config import settings
from app.core.errors import DomainError
from app.distinguishability.chernoff import normal_modes, q_t_from_modes, transformed_modes
from app.distinguishability.fidelity import fidelity_from_moments
from app.gaussian.states import convert, standard_form_entries
from app.gaussian.symplectic import embed_local, euler_traceless
from app.gaussian.williamson import ensure_physical
from app.numerics.transform_search import minimize_over_transforms
from app.schemas.discord import DiscordMetric, DiscordResult
from app.schemas.state import Convention, GaussianState

logger = logging.getLogger(__name__)


def _objective(state: GaussianState, metric: DiscordMetric) -> Callable[[float, float], float]:
    """Construir la distancia normalizada en función de (θ, ξ).

    La forma normal del estado se calcula una sola vez.

    Raises:
        DomainError: si el estado no es físico o la métrica no es gaussiana.
    """
    ensure_physical(state)
    if metric is DiscordMetric.HELLINGER:
        modes = normal_modes(state)

        def hellinger(theta: float, xi: float) -> float:
            mat = embed_local(euler_traceless(theta, xi))
            return 1.0 - q_t_from_modes(modes, transformed_modes(modes, mat), 0.5)

        return hellinger

    if metric is DiscordMetric.BURES:
        half = convert(state, Convention.VACUUM_HALF)

        def bures(theta: float, xi: float) -> float:
            mat = embed_local(euler_traceless(theta, xi))
            fid = fidelity_from_moments(
                half.disp, half.cov, mat @ half.disp, mat @ half.cov @ mat.T
            )
            return 1.0 - math.sqrt(fid)

        return bures

    raise DomainError(f"metric '{metric.value}' is only available through the Fock oracle")


def discord_objective(
    state: GaussianState, metric: DiscordMetric, theta: float, xi: float
) -> float:
    """Distancia normalizada entre ρ y su transformada por euler_traceless(θ, ξ)."""
    return float(np.clip(_objective(state, metric)(theta, xi), 0.0, 1.0))


def perr_upper_from_hellinger(value: float) -> float:
    return 0.5 * (1.0 - value)


def perr_lower_from_bures(value: float) -> float:
    return 0.5 * (1.0 - math.sqrt(max(1.0 - (1.0 - value) ** 2, 0.0)))


def discord_response(
    state: GaussianState,
    metric: DiscordMetric,
    theta_points: Optional[int] = None,
    xi_points: Optional[int] = None,
) -> DiscordResult:
    """Discord gaussiano de respuesta por grilla más refinamiento Nelder-Mead.

    Args:
        state: estado físico de dos modos.
        metric: HELLINGER o BURES.
        theta_points: puntos de la grilla en θ (por defecto de `settings`).
        xi_points: puntos de la grilla en log2 ξ.

    Returns:
        `DiscordResult` con el valor, el minimizador y la cota de P_err^max
        que corresponde a la métrica.
    """
    objective = _objective(state, metric)
    value, theta, xi = minimize_over_transforms(
        objective,
        theta_points or settings.DISCORD_THETA_POINTS,
        xi_points or settings.DISCORD_XI_POINTS,
        settings.DISCORD_LOG2_XI_SPAN,
        xatol=settings.DISCORD_XATOL,
        fatol=settings.DISCORD_FATOL,
    )
    value = float(np.clip(value, 0.0, 1.0))
    lower = upper = None
    if metric is DiscordMetric.HELLINGER:
        upper = perr_upper_from_hellinger(value)
    else:
        lower = perr_lower_from_bures(value)
    return DiscordResult(
        value=value,
        argmin_theta=theta,
        argmin_xi=xi,
        metric=metric,
        perr_max_lower=lower,
        perr_max_upper=upper,
    )


def perr_max_bounds(state: GaussianState) -> Tuple[float, float]:
    """Cotas (inferior, superior) de la probabilidad de error del peor caso."""
    bures = discord_response(state, DiscordMetric.BURES)
    hellinger = discord_response(state, DiscordMetric.HELLINGER)
    lower, upper = bures.perr_max_lower, hellinger.perr_max_upper
    return min(lower, upper), upper


def is_classical_quantum(state: GaussianState) -> bool:
    """Un estado gaussiano es clásico-cuántico si y solo si su bloque cruzado es nulo."""
    scale = max(1.0, float(np.max(np.abs(state.cov))))
    return bool(np.max(np.abs(state.block_c)) < settings.CLASSICAL_QUANTUM_TOL * scale)


def verify_pi_half_extremal(state: GaussianState) -> Tuple[bool, Tuple[float, float]]:
    """Comprobar que el mínimo de Hellinger se alcanza en ξ = 1 (fase π/2).

    Args:
        state: estado sin desplazamiento en forma estándar con c1 = -c2.

    Returns:
        (extremal, (θ*, ξ*)).
    """
    entries = standard_form_entries(state)
    if entries is None or np.max(np.abs(state.disp)) > settings.SHORTCUT_TOL:
        raise DomainError("state must be undisplaced and in standard form")
    _, _, c1, c2 = entries
    if abs(c1 + c2) > settings.SHORTCUT_TOL * max(1.0, abs(c1)):
        raise DomainError("state must satisfy c1 = -c2")
    if is_classical_quantum(state):
        return True, (0.0, 1.0)
    result = discord_response(state, DiscordMetric.HELLINGER)
    extremal = abs(result.argmin_xi - 1.0) <= settings.EXTREMAL_XI_TOL
    return extremal, (result.argmin_theta, result.argmin_xi)


def perr_max_from_trace_discord(value: float) -> float:
    """P_err^max = ½ - ½ sqrt(D_Tr) a partir del discord de traza normalizado."""
    if not 0.0 <= value <= 1.0:
        raise DomainError(f"trace discord must lie in [0, 1], got {value}")
    return 0.5 - 0.5 * math.sqrt(value)
