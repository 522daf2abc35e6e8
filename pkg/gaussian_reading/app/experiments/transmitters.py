"""Transmisores con número total de fotones fijo.

Cada función devuelve el estado de la familia cuyo N_T coincide con el
pedido, o None cuando el ruido térmico ya supera ese presupuesto.
"""

import math
from typing import Optional

from app.gaussian.states import (
    make_coherent_thermal,
    make_sdts,
    make_stsds,
    make_sts,
    make_tmsv,
    make_tss,
)
from app.schemas.state import GaussianState


def squeezing_for_photons(n_s: float) -> float:
    """r tal que sinh²r = n_s."""
    return math.asinh(math.sqrt(n_s))


def tmsv_at(n_total: float) -> GaussianState:
    """Vacío squeezed de dos modos con 2 sinh²r = N_T."""
    return make_tmsv(squeezing_for_photons(0.5 * n_total))


def coherent_at(n_total: float) -> GaussianState:
    return make_coherent_thermal(math.sqrt(n_total), 0.0, 0.0)


def squeezed_coherent_at(n_total: float) -> GaussianState:
    """Vacío squeezed desplazado con |β|² = N_T/2 y cosh 2r' = (1+N_T)/(1+|β|²)."""
    beta_sq = 0.5 * n_total
    r_prime = 0.5 * math.acosh((1.0 + n_total) / (1.0 + beta_sq))
    return make_stsds(0.0, 0.0, 0.0, r_prime, math.sqrt(beta_sq))


def sts_at(n_total: float, n1: float, n2: float) -> Optional[GaussianState]:
    """STS con N_s = (N_T - n1 - n2) / (2(1 + n1 + n2))."""
    n_s = (n_total - n1 - n2) / (2.0 * (1.0 + n1 + n2))
    if n_s < 0:
        return None
    return make_sts(squeezing_for_photons(n_s), n1, n2)


def coherent_thermal_at(n_total: float, n1: float, n2: float) -> Optional[GaussianState]:
    """Estado coherente térmico con |α|² = N_T - n1 - n2."""
    alpha_sq = n_total - n1 - n2
    if alpha_sq < 0:
        return None
    return make_coherent_thermal(math.sqrt(alpha_sq), n1, n2)


def tss_at(n_total: float, n_th: float) -> Optional[GaussianState]:
    """TSS simétrico con n_s = (N_T - 2 n_th)/2."""
    n_s = 0.5 * (n_total - 2.0 * n_th)
    if n_s < 0:
        return None
    return make_tss(n_s, n_th, n_th)


def displaced_sts_at(n_total: float, n_th: float) -> Optional[GaussianState]:
    """S(r) D(α) ρ_th con |α|² = ½(N_T - 2 n_th) y el resto del presupuesto en squeezing."""
    alpha_sq = 0.5 * (n_total - 2.0 * n_th)
    if alpha_sq < 0:
        return None
    ratio = (1.0 + n_total) / (1.0 + 2.0 * n_th + alpha_sq)
    r = 0.5 * math.acosh(max(ratio, 1.0))
    return make_sdts(r, math.sqrt(alpha_sq), n_th, n_th)


def displaced_tss_at(n_total: float, n_th: float) -> Optional[GaussianState]:
    """Φ[S(r') D(α)|00>] con |α|² = ½(N_T - 2 n_th)."""
    alpha_sq = 0.5 * (n_total - 2.0 * n_th)
    if alpha_sq < 0:
        return None
    ratio = (1.0 + n_total - 2.0 * n_th) / (1.0 + alpha_sq)
    r_prime = 0.5 * math.acosh(max(ratio, 1.0))
    return make_stsds(0.0, n_th, n_th, r_prime, math.sqrt(alpha_sq))
