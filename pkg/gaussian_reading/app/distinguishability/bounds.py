"""Cotas de Helstrom, error exacto para estados puros y copias necesarias."""

import logging
import math
from typing import Callable

from app.core.config import settings
from app.core.errors import DomainError
from app.distinguishability.chernoff import affinity, qcb
from app.distinguishability.fidelity import uhlmann_fidelity
from app.gaussian.states import purity
from app.schemas.metrics import MetricReport
from app.schemas.state import GaussianState

logger = logging.getLogger(__name__)


def fidelity_lower_bound(fidelity: float, copies: int = 1) -> float:
    """Cota inferior ½(1 - sqrt(1 - F^n)) de la probabilidad de error."""
    return 0.5 * (1.0 - math.sqrt(max(1.0 - fidelity ** copies, 0.0)))


def helstrom_bounds(s1: GaussianState, s2: GaussianState, copies: int = 1) -> MetricReport:
    """Fidelidad, afinidad, QCB y cotas LBP <= P_err <= UBP para n copias.

    Args:
        s1: primer estado de la codificación.
        s2: segundo estado.
        copies: número de copias n >= 1.

    Returns:
        `MetricReport` con UBP = QCB y LBP = ½(1 - sqrt(1 - F^n)).
    """
    if copies < 1:
        raise DomainError(f"copies must be >= 1, got {copies}")
    fidelity = uhlmann_fidelity(s1, s2)
    bound, t_star = qcb(s1, s2, copies)
    lbp = fidelity_lower_bound(fidelity, copies)
    return MetricReport(
        fidelity=fidelity,
        affinity=affinity(s1, s2),
        t_star=t_star,
        qcb=bound,
        lbp=min(lbp, bound),
        ubp=bound,
        copies=copies,
    )


def bhattacharyya_bound(s1: GaussianState, s2: GaussianState, copies: int = 1) -> float:
    """Cota superior ½ Q_{1/2}^n, válida aunque t* != 1/2."""
    return 0.5 * affinity(s1, s2) ** copies


def pure_perr(s1: GaussianState, s2: GaussianState) -> float:
    """Probabilidad de error exacta ½(1 - sqrt(1 - F)) para dos estados puros."""
    for state in (s1, s2):
        if abs(purity(state) - 1.0) > settings.PURITY_TOL:
            raise DomainError("pure_perr requires pure states")
    return fidelity_lower_bound(uhlmann_fidelity(s1, s2))


def hellinger_distance_sq(s1: GaussianState, s2: GaussianState) -> float:
    """Distancia de Hellinger al cuadrado 2 - 2 Q_{1/2}."""
    return 2.0 - 2.0 * affinity(s1, s2)


def bures_distance_sq(s1: GaussianState, s2: GaussianState) -> float:
    """Distancia de Bures al cuadrado 2(1 - sqrt F)."""
    return 2.0 * (1.0 - math.sqrt(uhlmann_fidelity(s1, s2)))


def qcb_from_hellinger(distance_sq: float) -> float:
    """QCB = (2 - d_H²)/4 cuando el mínimo de Q_t está en t = 1/2."""
    return (2.0 - distance_sq) / 4.0


def copies_needed(
    report_fn: Callable[[int], MetricReport], target: float, side: str
) -> int:
    """Número mínimo de copias para que la cota indicada no supere `target`.

    Usa la ley de escala exacta de las cotas: QCB_n = ½ Q*^n para la
    superior y ½(1 - sqrt(1 - F^n)) para la inferior.

    Args:
        report_fn: función n -> MetricReport del par de estados.
        target: probabilidad de error objetivo en (0, ½].
        side: "upper" (QCB) o "lower" (LBP).

    Returns:
        El menor n >= 1 que cumple la condición.
    """
    if not 0.0 < target <= 0.5:
        raise DomainError(f"target must lie in (0, 1/2], got {target}")
    if side not in ("upper", "lower"):
        raise DomainError(f"side must be 'upper' or 'lower', got {side}")
    base = report_fn(1)
    if side == "upper":
        if base.qcb <= target:
            return 1
        q_star = 2.0 * base.qcb
        if q_star >= 1.0:
            raise DomainError("states are indistinguishable; target unreachable")
        exact = math.log(2.0 * target) / math.log(q_star)
    else:
        if base.lbp <= target:
            return 1
        if base.fidelity >= 1.0:
            raise DomainError("states are indistinguishable; target unreachable")
        exact = math.log(1.0 - (1.0 - 2.0 * target) ** 2) / math.log(base.fidelity)
    copies = max(1, math.ceil(exact - settings.COPIES_SLACK))
    logger.debug("copies for %s bound <= %g: %.6f -> %d", side, target, exact, copies)
    return copies
