"""Umbrales de ruido térmico frente a vacíos squeezed de dos modos.

El umbral es el N_th1 a partir del cual la QCB de un STS no simétrico
queda por debajo del error exacto de un TMSV de referencia. Por defecto se
usa la forma cerrada de la QCB; con `closed_form=False`, la QCB numérica.
"""

import enum
import logging
from typing import Optional

from scipy.optimize import bisect

from app.core.config import settings
from app.core.errors import DomainError, NotFoundError
from app.experiments.figures import perr_exact, qcb_bound, qcb_closed
from app.gaussian.states import make_sts, make_tmsv

logger = logging.getLogger(__name__)


class ThresholdReference(str, enum.Enum):
    """TMSV de referencia: mismo squeezing o squeezing efectivo distinto."""
    TMSVS_SAME_R = "tmsvs_same_r"
    TMSVS_EFFECTIVE = "tmsvs_effective"


def _noise_threshold(r: float, n2: float, target: float, closed_form: bool) -> float:
    lower, upper = settings.THRESHOLD_BRACKET
    bound = qcb_closed if closed_form else qcb_bound

    def gap(n1: float) -> float:
        return bound(make_sts(r, n1, n2)) - target

    if gap(lower) * gap(upper) > 0:
        raise NotFoundError(
            f"no sign change of QCB - {target:.6g} for n1 in [{lower:g}, {upper:g}]"
        )
    threshold = bisect(gap, lower, upper, xtol=settings.THRESHOLD_XTOL)
    logger.info(
        "threshold r=%g n2=%g closed_form=%s: n1*=%.6f", r, n2, closed_form, threshold
    )
    return float(threshold)


def run_threshold(
    r: float,
    n2: float,
    reference: ThresholdReference = ThresholdReference.TMSVS_SAME_R,
    r_eff: Optional[float] = None,
    closed_form: bool = True,
) -> float:
    """N_th1 tal que QCB^{sq-th}(r, N_th1, n2) = P_err^{sq-vac} de la referencia.

    Args:
        r: squeezing del STS, estrictamente positivo.
        n2: ruido térmico fijo del modo B.
        reference: TMSV con el mismo r o con squeezing efectivo `r_eff`.
        r_eff: squeezing del TMSV de referencia (solo TMSVS_EFFECTIVE).
        closed_form: QCB por forma cerrada (por defecto) o numérica.

    Raises:
        NotFoundError: si no hay cambio de signo en el intervalo de búsqueda.
    """
    if not r > 0:
        raise DomainError(f"r must be positive, got {r}")
    if n2 < 0:
        raise DomainError(f"n2 must be non-negative, got {n2}")
    if reference is ThresholdReference.TMSVS_EFFECTIVE:
        if r_eff is None or not r_eff > 0:
            raise DomainError("effective reference needs a positive r_eff")
        return _noise_threshold(r, n2, perr_exact(make_tmsv(r_eff)), closed_form)
    return _noise_threshold(r, n2, perr_exact(make_tmsv(r)), closed_form)


def run_effective_threshold(r: float, r_eff: float, n2: float = 0.0) -> float:
    """N_th^eff(r, r_eff): ruido desde el cual un STS con squeezing r supera al TMSV con r_eff."""
    return run_threshold(r, n2, ThresholdReference.TMSVS_EFFECTIVE, r_eff)
