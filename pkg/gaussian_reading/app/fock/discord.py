"""Discord de traza calculado con el oráculo de Fock.

Da P_err^max exacta como ½ - ½ sqrt(D_Tr), con D_Tr = ¼ min ||ρ - UρU†||²_1
sobre las unitarias locales de las simplécticas sin traza.
"""

import math
from typing import Optional

import numpy as np

from app.core.config import settings
from app.discord.response import perr_max_from_trace_discord
from app.fock.metrics import oracle_trace_distance
from app.fock.states import fock_state, transform_state
from app.gaussian.symplectic import euler_traceless
from app.numerics.transform_search import minimize_over_transforms
from app.schemas.discord import DiscordMetric, DiscordResult
from app.schemas.state import Family, StateParams


def oracle_trace_discord(
    params: StateParams,
    family: Family,
    cutoff: Optional[int] = None,
    theta_points: Optional[int] = None,
    xi_points: Optional[int] = None,
) -> DiscordResult:
    """Discord de traza normalizado del estado y la P_err^max que implica.

    La búsqueda recorre un rango de ξ más estrecho que en el caso gaussiano
    porque el squeezing local debe caber en el corte de Fock.

    Args:
        params: parámetros del estado.
        family: familia del estado.
        cutoff: niveles por modo.
        theta_points: puntos de grilla en θ.
        xi_points: puntos de grilla en log2 ξ.
    """
    op = fock_state(params, family, cutoff)

    def objective(theta: float, xi: float) -> float:
        moved = transform_state(op, euler_traceless(theta, xi))
        return 0.25 * oracle_trace_distance(op, moved) ** 2

    value, theta, xi = minimize_over_transforms(
        objective,
        theta_points or settings.ORACLE_THETA_POINTS,
        xi_points or settings.ORACLE_XI_POINTS,
        settings.ORACLE_LOG2_XI_SPAN,
        xatol=1e-6,
        fatol=1e-10,
    )
    value = float(np.clip(value, 0.0, 1.0))
    perr = perr_max_from_trace_discord(value)
    return DiscordResult(
        value=value,
        argmin_theta=theta % math.pi,
        argmin_xi=xi,
        metric=DiscordMetric.TRACE,
        perr_max_lower=perr,
        perr_max_upper=perr,
    )
