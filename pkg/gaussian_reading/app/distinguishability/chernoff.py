"""Funcional de Chernoff Q_t, cota de Chernoff cuántica (QCB) y afinidad.

Q_t = tr(ρ1^t ρ2^{1-t}) se evalúa en VacuumOne a partir de las formas
normales de Williamson de ambos estados:
    Q̄_t = 4 Π G_t(α_k) Π G_{1-t}(β_k) / sqrt(det(V1(t) + V2(1-t))),
    V(p) = S diag(Λ_p(ν)) S^T,
y el factor de desplazamiento exp(-½ δ^T (V1+V2)^{-1} δ).
"""

import logging
import math
from typing import NamedTuple, Tuple

import numpy as np

from app.core.config import settings
from app.core.errors import DomainError, NumericError
from app.distinguishability.fidelity import fidelity_determinants
from app.gaussian.states import convert, standard_form_entries
from app.gaussian.williamson import ensure_physical, williamson
from app.numerics.golden import golden_section_minimize
from app.schemas.metrics import ChernoffAux
from app.schemas.state import Convention, GaussianState

logger = logging.getLogger(__name__)


class NormalModes(NamedTuple):
    """Forma normal (S, ν) y desplazamiento de un estado en VacuumOne."""
    symp: np.ndarray
    spectrum: np.ndarray
    disp: np.ndarray


def normal_modes(state: GaussianState) -> NormalModes:
    one = convert(ensure_physical(state), Convention.VACUUM_ONE)
    symp, nu = williamson(one)
    return NormalModes(symp.mat, np.maximum(nu, 1.0), one.disp)


def transformed_modes(modes: NormalModes, mat: np.ndarray) -> NormalModes:
    """Forma normal de M ρ M^T reutilizando la de ρ: (M S, ν, M d)."""
    return NormalModes(mat @ modes.symp, modes.spectrum, mat @ modes.disp)


def g_kernel(p: float, x: float) -> float:
    """G_p(x) = 2^p / ((x+1)^p - (x-1)^p); vale 1 en el modo puro x = 1."""
    if abs(x - 1.0) < settings.PURE_MODE_TOL:
        return 1.0
    return 2.0 ** p / ((x + 1.0) ** p - (x - 1.0) ** p)


def lambda_kernel(p: float, x: float) -> float:
    """Λ_p(x) = ((x+1)^p + (x-1)^p) / ((x+1)^p - (x-1)^p); vale 1 en x = 1."""
    if abs(x - 1.0) < settings.PURE_MODE_TOL:
        return 1.0
    plus, minus = (x + 1.0) ** p, (x - 1.0) ** p
    return (plus + minus) / (plus - minus)


def _kernels(m1: NormalModes, m2: NormalModes, t: float):
    lam1 = [lambda_kernel(t, nu) for nu in m1.spectrum]
    lam2 = [lambda_kernel(1.0 - t, nu) for nu in m2.spectrum]
    g_prod = math.prod(g_kernel(t, nu) for nu in m1.spectrum) * math.prod(
        g_kernel(1.0 - t, nu) for nu in m2.spectrum
    )
    v1 = m1.symp @ np.diag(np.repeat(lam1, 2)) @ m1.symp.T
    v2 = m2.symp @ np.diag(np.repeat(lam2, 2)) @ m2.symp.T
    return g_prod, (lam1[0], lam1[1], lam2[0], lam2[1]), v1, v2


def q_t_from_modes(m1: NormalModes, m2: NormalModes, t: float) -> float:
    """Q_t a partir de formas normales ya calculadas."""
    g_prod, _, v1, v2 = _kernels(m1, m2, t)
    total = v1 + v2
    if np.linalg.cond(total) > settings.MAX_CONDITION:
        raise NumericError("V1 + V2 is singular")
    det = float(np.linalg.det(total))
    delta = m1.disp - m2.disp
    exponent = -0.5 * float(delta @ np.linalg.solve(total, delta))
    return 4.0 * g_prod / math.sqrt(det) * math.exp(exponent)


def _check_t(t: float) -> None:
    if not 0.0 < t < 1.0:
        raise DomainError(f"t must lie in (0, 1), got {t}")


def q_t(s1: GaussianState, s2: GaussianState, t: float) -> float:
    """Funcional de Chernoff Q_t(ρ1, ρ2) = tr(ρ1^t ρ2^{1-t}) para t en (0, 1)."""
    _check_t(t)
    return q_t_from_modes(normal_modes(s1), normal_modes(s2), t)


def affinity(s1: GaussianState, s2: GaussianState) -> float:
    """Afinidad cuántica Q_{1/2}."""
    return min(q_t(s1, s2, 0.5), 1.0)


def chernoff_aux(s1: GaussianState, s2: GaussianState, t: float) -> ChernoffAux:
    """Exponer las cantidades intermedias de fidelidad y Q_t."""
    _check_t(t)
    m1, m2 = normal_modes(s1), normal_modes(s2)
    g_prod, lam, v1, v2 = _kernels(m1, m2, t)
    h1 = convert(s1, Convention.VACUUM_HALF)
    h2 = convert(s2, Convention.VACUUM_HALF)
    delta_big, gamma_big, lambda_big = fidelity_determinants(h1.cov, h2.cov)
    return ChernoffAux(
        delta_big=delta_big,
        gamma_big=gamma_big,
        lambda_big=lambda_big,
        g_p=g_prod,
        lambda_p=lam,
        v1=v1,
        v2=v2,
    )


def local_traceless_link(s1: GaussianState, s2: GaussianState) -> bool:
    """Detectar si ρ2 = (S ⊕ 1) ρ1 (S ⊕ 1)^T con S sin traza y ρ1 en forma estándar.

    En ese caso Q_t es simétrico en t y el mínimo está en t = 1/2. Solo se
    reconocen pares sin desplazamiento con c1 = -c2 != 0.
    """
    tol = settings.SHORTCUT_TOL
    if np.max(np.abs(s1.disp)) > tol or np.max(np.abs(s2.disp)) > tol:
        return False
    entries = standard_form_entries(s1, tol)
    if entries is None:
        return False
    _, _, c1, c2 = entries
    if abs(c1 + c2) > tol * max(1.0, abs(c1)) or abs(c1) < tol:
        return False
    local = s2.block_c @ np.linalg.inv(s1.block_c)
    scale = max(1.0, float(np.max(np.abs(s2.cov))))
    return bool(
        abs(np.trace(local)) <= tol * max(1.0, float(np.max(np.abs(local))))
        and abs(np.linalg.det(local) - 1.0) <= tol * max(1.0, float(np.max(np.abs(local))) ** 2)
        and np.max(np.abs(local @ s1.block_a @ local.T - s2.block_a)) <= tol * scale
        and np.max(np.abs(s2.block_b - s1.block_b)) <= tol * scale
    )


def minimize_q_t(
    m1: NormalModes, m2: NormalModes, symmetric: bool = False
) -> Tuple[float, float]:
    """Mínimo de Q_t sobre t y su minimizador, dadas las formas normales."""
    if symmetric:
        return q_t_from_modes(m1, m2, 0.5), 0.5
    lower, upper = settings.CHERNOFF_T_BOUNDS
    t_star, q_min = golden_section_minimize(
        lambda t: q_t_from_modes(m1, m2, t), lower, upper, settings.CHERNOFF_T_TOL
    )
    return q_min, t_star


def qcb(s1: GaussianState, s2: GaussianState, copies: int = 1) -> Tuple[float, float]:
    """Cota de Chernoff cuántica ½ (min_t Q_t)^n y el t* que la alcanza.

    Args:
        s1: primer estado.
        s2: segundo estado.
        copies: número de copias n >= 1.

    Returns:
        Par (QCB, t*).
    """
    if copies < 1:
        raise DomainError(f"copies must be >= 1, got {copies}")
    symmetric = local_traceless_link(s1, s2)
    if symmetric:
        logger.debug("traceless local link detected, using t = 1/2")
    q_min, t_star = minimize_q_t(normal_modes(s1), normal_modes(s2), symmetric)
    return 0.5 * min(q_min, 1.0) ** copies, t_star
