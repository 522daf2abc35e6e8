"""Constructores de estados gaussianos de dos modos y utilidades asociadas.

Todas las familias se construyen en la convención VacuumOne; `convert`
permite pasar a VacuumHalf sin pérdida. El desplazamiento coherente α
sobre el modo A se representa como 2·(Re α, Im α, 0, 0) en VacuumOne.
"""

import math
from typing import Optional, Tuple

import numpy as np

from app.core.errors import DomainError
from app.gaussian.symplectic import embed_local, phase_shift, two_mode_squeeze
from app.gaussian.williamson import ensure_physical
from app.schemas.state import Convention, Family, GaussianState, StateParams, SympTransform


def _check_photons(**values: float) -> None:
    for name, value in values.items():
        if not value >= 0 or not math.isfinite(value):
            raise DomainError(f"{name} must be a non-negative photon number, got {value}")


def coherent_displacement(
    alpha: complex, convention: Convention = Convention.VACUUM_ONE
) -> np.ndarray:
    """Vector de desplazamiento de un estado coherente α en el modo A."""
    scale = 2.0 * math.sqrt(convention.vacuum_variance)
    return scale * np.array([alpha.real, alpha.imag, 0.0, 0.0])


def standard_form(a: float, b: float, c1: float, c2: float) -> np.ndarray:
    """Covarianza en forma estándar [[aI, diag(c1, c2)], [diag(c1, c2), bI]]."""
    cross = np.diag([c1, c2])
    return np.block([[a * np.eye(2), cross], [cross, b * np.eye(2)]])


def standard_form_entries(
    state: GaussianState, tol: float = 1e-9
) -> Optional[Tuple[float, float, float, float]]:
    """Devolver (a, b, c1, c2) si la covarianza está en forma estándar, si no None."""
    cov = state.cov
    a, b = cov[0, 0], cov[2, 2]
    c1, c2 = cov[0, 2], cov[1, 3]
    scale = max(1.0, float(np.max(np.abs(cov))))
    if np.max(np.abs(cov - standard_form(a, b, c1, c2))) > tol * scale:
        return None
    return float(a), float(b), float(c1), float(c2)


def convert(state: GaussianState, convention: Convention) -> GaussianState:
    """Reescalar el estado a otra convención de vacío."""
    if state.convention is convention:
        return state
    factor = convention.vacuum_variance / state.convention.vacuum_variance
    return GaussianState(
        disp=state.disp * math.sqrt(factor), cov=state.cov * factor, convention=convention
    )


def vacuum(convention: Convention = Convention.VACUUM_ONE) -> GaussianState:
    return GaussianState(
        disp=np.zeros(4), cov=convention.vacuum_variance * np.eye(4), convention=convention
    )


def thermal(n1: float, n2: float) -> GaussianState:
    """Producto de estados térmicos con n1 y n2 fotones medios."""
    _check_photons(n_th1=n1, n_th2=n2)
    cov = np.diag([1 + 2 * n1, 1 + 2 * n1, 1 + 2 * n2, 1 + 2 * n2])
    return GaussianState(disp=np.zeros(4), cov=cov)


def apply_symplectic(state: GaussianState, transform: SympTransform) -> GaussianState:
    """Aplicar una simpléctica global 4x4: (d, σ) -> (M d, M σ M^T)."""
    mat = transform.mat
    if mat.shape != (4, 4):
        mat = embed_local(transform)
    return GaussianState(
        disp=mat @ state.disp, cov=mat @ state.cov @ mat.T, convention=state.convention
    )


def apply_local(state: GaussianState, transform: SympTransform) -> GaussianState:
    """Aplicar una simpléctica 2x2 sobre el modo A."""
    mat = embed_local(transform)
    return GaussianState(
        disp=mat @ state.disp, cov=mat @ state.cov @ mat.T, convention=state.convention
    )


def apply_remote(state: GaussianState, transform: SympTransform) -> GaussianState:
    """Aplicar una simpléctica 2x2 sobre el modo B."""
    mat = np.eye(4)
    mat[2:, 2:] = transform.mat
    return GaussianState(
        disp=mat @ state.disp, cov=mat @ state.cov @ mat.T, convention=state.convention
    )


def pi_half_pair(state: GaussianState) -> Tuple[GaussianState, GaussianState]:
    """Par de codificación (ρ, F_{π/2} ρ F_{π/2}^T)."""
    return state, apply_local(state, phase_shift(math.pi / 2))


def make_sts(r: float, n1: float, n2: float) -> GaussianState:
    """Estado térmico squeezed: S(r) aplicado al producto térmico (n1, n2).

    Entradas de la forma estándar:
        a = cosh 2r + 2 n1 cosh² r + 2 n2 sinh² r
        b = cosh 2r + 2 n1 sinh² r + 2 n2 cosh² r
        c = (1 + n1 + n2) sinh 2r, con c1 = c, c2 = -c.
    """
    _check_photons(n_th1=n1, n_th2=n2)
    ch2, sh2 = math.cosh(r) ** 2, math.sinh(r) ** 2
    a = math.cosh(2 * r) + 2 * n1 * ch2 + 2 * n2 * sh2
    b = math.cosh(2 * r) + 2 * n1 * sh2 + 2 * n2 * ch2
    c = (1 + n1 + n2) * math.sinh(2 * r)
    return GaussianState(disp=np.zeros(4), cov=standard_form(a, b, c, -c))


def make_tmsv(r: float) -> GaussianState:
    return make_sts(r, 0.0, 0.0)


def make_tss(n_s: float, n1: float, n2: float) -> GaussianState:
    """Estado squeezed térmico: TMSV con n_s fotones por modo más ruido aditivo."""
    _check_photons(n_s=n_s, n_th1=n1, n_th2=n2)
    a = 2 * n_s + 1 + 2 * n1
    b = 2 * n_s + 1 + 2 * n2
    c = 2 * math.sqrt(n_s * (n_s + 1))
    return GaussianState(disp=np.zeros(4), cov=standard_form(a, b, c, -c))


def make_coherent_thermal(alpha: complex, n1: float, n2: float) -> GaussianState:
    """Producto térmico con el modo A desplazado por α."""
    base = thermal(n1, n2)
    return GaussianState(disp=coherent_displacement(alpha), cov=base.cov)


def make_sdts(r: float, alpha: complex, n1: float, n2: float) -> GaussianState:
    """Estado térmico desplazado y luego squeezed: S(r) D(α) ρ_th."""
    return apply_symplectic(make_coherent_thermal(alpha, n1, n2), two_mode_squeeze(r))


def make_stsds(r: float, n1: float, n2: float, r_prime: float, alpha: complex) -> GaussianState:
    """S(r) aplicado al ruido aditivo (n1, n2) sobre S(r') D(α) |00>."""
    _check_photons(n_th1=n1, n_th2=n2)
    inner = apply_symplectic(
        GaussianState(disp=coherent_displacement(alpha), cov=np.eye(4)),
        two_mode_squeeze(r_prime),
    )
    noisy = GaussianState(
        disp=inner.disp, cov=inner.cov + np.diag([2 * n1, 2 * n1, 2 * n2, 2 * n2])
    )
    return apply_symplectic(noisy, two_mode_squeeze(r))


def make_state(params: StateParams, family: Family) -> GaussianState:
    """Construir el estado de la familia indicada a partir de sus parámetros."""
    alpha = params.alpha_complex
    if family is Family.STS:
        state = make_sts(params.r, params.n_th1, params.n_th2)
    elif family is Family.TSS:
        state = make_tss(params.n_s, params.n_th1, params.n_th2)
    elif family is Family.COHERENT_THERMAL:
        state = make_coherent_thermal(alpha, params.n_th1, params.n_th2)
    elif family is Family.SDTS:
        state = make_sdts(params.r, alpha, params.n_th1, params.n_th2)
    else:
        state = make_stsds(params.r, params.n_th1, params.n_th2, params.r_prime, alpha)
    return ensure_physical(state)


def total_photons(state: GaussianState) -> float:
    """Número medio total de fotones N_T = (tr σ + |d|²)/4 - 1 en VacuumOne."""
    one = convert(state, Convention.VACUUM_ONE)
    return float((np.trace(one.cov) + one.disp @ one.disp) / 4.0 - 1.0)


def mode_photons(state: GaussianState) -> Tuple[float, float]:
    """Número medio de fotones de cada modo (VacuumOne)."""
    one = convert(state, Convention.VACUUM_ONE)
    diag, disp = np.diag(one.cov), one.disp
    per_mode = [
        (diag[2 * k] + diag[2 * k + 1] + disp[2 * k] ** 2 + disp[2 * k + 1] ** 2) / 4.0 - 0.5
        for k in range(2)
    ]
    return float(per_mode[0]), float(per_mode[1])


def purity(state: GaussianState) -> float:
    """Pureza μ = 1/sqrt(16 det σ) con σ en VacuumHalf."""
    half = convert(state, Convention.VACUUM_HALF)
    return float(1.0 / math.sqrt(16.0 * np.linalg.det(half.cov)))
