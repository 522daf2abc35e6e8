"""Matrices densidad de las familias de estados en la base de Fock.

Cada familia se construye aplicando los operadores de Fock equivalentes a
sus transformaciones gaussianas. La masa perdida por el corte se reporta
como `tail_mass` y se rechaza por encima de `settings.FOCK_TAIL_LIMIT`.
"""

import logging
import math
from typing import Optional

import numpy as np

from app.core.config import settings
from app.core.errors import DomainError, TruncationError
from app.fock.channels import additive_noise
from app.fock.operators import (
    annihilation,
    apply_mode_unitary,
    displacement,
    local_unitary,
    thermal_distribution,
    two_mode_squeezer,
)
from app.gaussian.states import make_state, mode_photons
from app.schemas.fock import FockOperator
from app.schemas.state import Convention, Family, GaussianState, StateParams, SympTransform


def required_levels(state: GaussianState, tol: float) -> float:
    """Niveles por modo para que la cola geométrica q^d quede bajo `tol`."""
    n_max = max(mode_photons(state))
    if n_max <= 1e-12:
        return 1.0
    ratio = n_max / (1.0 + n_max)
    return math.log(tol) / math.log(ratio)


def suggest_cutoff(state: GaussianState, tol: Optional[float] = None) -> int:
    """Elegir el corte para que la cola geométrica de cada modo sea < tol.

    Con n̄ fotones medios en un modo se toma la cola q^d, q = n̄/(1+n̄), y se
    redondea hacia arriba a la lista `settings.FOCK_CUTOFFS`.
    """
    needed = required_levels(state, tol or settings.FOCK_TAIL_TARGET)
    for cutoff in settings.FOCK_CUTOFFS:
        if cutoff >= needed:
            return cutoff
    return settings.FOCK_CUTOFFS[-1]


def _next_cutoff(cutoff: int) -> int:
    for candidate in settings.FOCK_CUTOFFS:
        if candidate > cutoff:
            return candidate
    return 2 * cutoff


def _vacuum(dim: int) -> np.ndarray:
    rho = np.zeros((dim * dim, dim * dim), dtype=complex)
    rho[0, 0] = 1.0
    return rho


def _thermal(n1: float, n2: float, dim: int) -> np.ndarray:
    probs = np.kron(thermal_distribution(n1, dim), thermal_distribution(n2, dim))
    return np.diag(probs).astype(complex)


def _conjugate(rho: np.ndarray, unitary: np.ndarray) -> np.ndarray:
    return unitary @ rho @ unitary.conj().T


def _build(params: StateParams, family: Family, dim: int) -> np.ndarray:
    pad = settings.FOCK_PADDING
    alpha = params.alpha_complex
    if family is Family.TSS:
        squeezer = two_mode_squeezer(math.asinh(math.sqrt(params.n_s)), dim, pad)
        inner = _conjugate(_vacuum(dim), squeezer)
        return additive_noise(inner, dim, params.n_th1, params.n_th2)
    if family is Family.STSDS:
        inner = apply_mode_unitary(_vacuum(dim), displacement(alpha, dim), dim)
        inner = _conjugate(inner, two_mode_squeezer(params.r_prime, dim, pad))
        noisy = additive_noise(inner, dim, params.n_th1, params.n_th2)
        return _conjugate(noisy, two_mode_squeezer(params.r, dim, pad))

    rho = _thermal(params.n_th1, params.n_th2, dim)
    if family in (Family.COHERENT_THERMAL, Family.SDTS) and alpha != 0:
        rho = apply_mode_unitary(rho, displacement(alpha, dim), dim)
    if family in (Family.STS, Family.SDTS) and params.r != 0:
        rho = _conjugate(rho, two_mode_squeezer(params.r, dim, pad))
    return rho


def fock_state(params: StateParams, family: Family, cutoff: Optional[int] = None) -> FockOperator:
    """Matriz densidad truncada de un estado de la familia.

    Args:
        params: parámetros del estado.
        family: familia de transmisor.
        cutoff: niveles por modo; por defecto `suggest_cutoff`.

    Returns:
        `FockOperator` hermítico con su masa de cola.

    Raises:
        DomainError: si el corte es menor que `settings.FOCK_MIN_CUTOFF`.
        TruncationError: si la masa fuera del corte supera el límite.
    """
    gaussian = make_state(params, family)
    dim = cutoff or suggest_cutoff(gaussian)
    if dim < settings.FOCK_MIN_CUTOFF:
        raise DomainError(f"cutoff must be >= {settings.FOCK_MIN_CUTOFF}, got {dim}")
    rho = _build(params, family, dim)
    rho = 0.5 * (rho + rho.conj().T)
    tail = float(1.0 - np.real(np.trace(rho)))
    if tail > settings.FOCK_TAIL_LIMIT:
        suggested = max(suggest_cutoff(gaussian), _next_cutoff(dim))
        raise TruncationError(
            f"tail mass {tail:.3e} above {settings.FOCK_TAIL_LIMIT:g} at cutoff {dim}; "
            f"try cutoff {suggested}",
            tail_mass=tail,
            suggested_cutoff=suggested,
        )
    return FockOperator(dim=dim, mat=rho, tail_mass=max(tail, 0.0))


def transform_state(op: FockOperator, transform: SympTransform) -> FockOperator:
    """Aplicar la unitaria de Fock de una simpléctica local sobre el modo A."""
    unitary = local_unitary(transform, op.dim, settings.FOCK_PADDING)
    rho = apply_mode_unitary(op.mat, unitary, op.dim)
    return FockOperator(dim=op.dim, mat=0.5 * (rho + rho.conj().T), tail_mass=op.tail_mass)


def _expect(rho: np.ndarray, observable: np.ndarray) -> float:
    # tr(rho O) without forming the product
    return float(np.real(np.sum(rho * observable.T)))


def fock_moments(op: FockOperator) -> GaussianState:
    """Extraer desplazamiento y covarianza (VacuumOne) de una matriz densidad."""
    lowering = annihilation(op.dim)
    identity = np.eye(op.dim)
    quadratures = []
    for mode_op in (np.kron(lowering, identity), np.kron(identity, lowering)):
        quadratures.append(mode_op + mode_op.conj().T)
        quadratures.append(-1j * (mode_op - mode_op.conj().T))
    norm = np.real(np.trace(op.mat))
    means = np.array([_expect(op.mat, quad) for quad in quadratures]) / norm
    cov = np.empty((4, 4))
    for i, left in enumerate(quadratures):
        for j, right in enumerate(quadratures[i:], start=i):
            second = 0.5 * _expect(op.mat, left @ right + right @ left) / norm
            cov[i, j] = cov[j, i] = second - means[i] * means[j]
    return GaussianState(disp=means, cov=cov, convention=Convention.VACUUM_ONE)
