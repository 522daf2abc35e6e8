"""Métricas de distinguibilidad calculadas directamente sobre matrices densidad.

Sirven de oráculo independiente para las fórmulas gaussianas: fidelidad,
afinidad, Q_t, distancia de traza y probabilidad de error de Helstrom.
"""

from typing import Dict, NamedTuple

import numpy as np

from app.core.config import settings
from app.core.errors import ContractError, DomainError
from app.numerics.matfuncs import hermitian_eig, hermitian_power_from_eig
from app.schemas.fock import FockOperator


class Spectrum(NamedTuple):
    vals: np.ndarray
    vecs: np.ndarray


def spectrum(op: FockOperator) -> Spectrum:
    vals, vecs = hermitian_eig(op.mat, settings.FOCK_EIGEN_FLOOR)
    return Spectrum(vals, vecs)


def _check_pair(op1: FockOperator, op2: FockOperator) -> None:
    if op1.dim != op2.dim:
        raise ContractError(f"cutoff mismatch: {op1.dim} != {op2.dim}")


def _q_t_spectral(sp1: Spectrum, sp2: Spectrum, t: float) -> float:
    # tr(rho1^t rho2^(1-t)) = sum_ij l_i^t m_j^(1-t) |<u_i|v_j>|^2
    overlap = np.abs(sp1.vecs.conj().T @ sp2.vecs) ** 2
    left = np.where(sp1.vals > 0, np.abs(sp1.vals) ** t, 0.0)
    right = np.where(sp2.vals > 0, np.abs(sp2.vals) ** (1.0 - t), 0.0)
    return float(left @ overlap @ right)


def _fidelity_spectral(sp1: Spectrum, op2: FockOperator) -> float:
    root = hermitian_power_from_eig(sp1.vals, sp1.vecs, 0.5)
    inner = root @ op2.mat @ root
    vals, _ = hermitian_eig(inner, settings.FOCK_EIGEN_FLOOR)
    return float(np.clip(np.sum(np.sqrt(vals)) ** 2, 0.0, 1.0))


def oracle_fidelity(op1: FockOperator, op2: FockOperator) -> float:
    """Fidelidad de Uhlmann (tr sqrt(√ρ1 ρ2 √ρ1))²."""
    _check_pair(op1, op2)
    return _fidelity_spectral(spectrum(op1), op2)


def oracle_q_t(op1: FockOperator, op2: FockOperator, t: float) -> float:
    """tr(ρ1^t ρ2^{1-t}) para t en (0, 1)."""
    _check_pair(op1, op2)
    if not 0.0 < t < 1.0:
        raise DomainError(f"t must lie in (0, 1), got {t}")
    return _q_t_spectral(spectrum(op1), spectrum(op2), t)


def oracle_affinity(op1: FockOperator, op2: FockOperator) -> float:
    return oracle_q_t(op1, op2, 0.5)


def oracle_trace_distance(op1: FockOperator, op2: FockOperator) -> float:
    """Distancia de traza ||ρ1 - ρ2||_1 en [0, 2]."""
    _check_pair(op1, op2)
    vals = np.linalg.eigvalsh(op1.mat - op2.mat)
    return float(np.sum(np.abs(vals)))


def oracle_helstrom(op1: FockOperator, op2: FockOperator) -> float:
    """Probabilidad de error de Helstrom ½ - ¼ ||ρ1 - ρ2||_1."""
    return 0.5 - 0.25 * oracle_trace_distance(op1, op2)


def oracle_report(op1: FockOperator, op2: FockOperator, t: float) -> Dict[str, float]:
    """Todas las métricas del oráculo reutilizando las descomposiciones espectrales."""
    _check_pair(op1, op2)
    sp1, sp2 = spectrum(op1), spectrum(op2)
    return {
        "fidelity": _fidelity_spectral(sp1, op2),
        "affinity": _q_t_spectral(sp1, sp2, 0.5),
        "q_t": _q_t_spectral(sp1, sp2, t),
        "helstrom": oracle_helstrom(op1, op2),
    }
