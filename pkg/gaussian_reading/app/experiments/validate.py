"""Validación de las fórmulas gaussianas contra el oráculo de Fock.

Para cada familia y cada punto de la caja de parámetros se comparan
fidelidad, afinidad y Q_t(0.3) del par (ρ, F_{π/2} ρ F_{π/2}^T), y se
verifica LBP <= P_err(Helstrom) <= UBP.
"""

import itertools
import logging
import math
from concurrent.futures import ThreadPoolExecutor
from typing import Dict, List, Optional, Sequence

from app.core.config import settings
from app.core.errors import TruncationError
from app.distinguishability.bounds import helstrom_bounds
from app.distinguishability.chernoff import q_t
from app.fock.metrics import oracle_report
from app.fock.states import fock_state, required_levels, transform_state
from app.gaussian.states import make_state, pi_half_pair
from app.gaussian.symplectic import phase_shift
from app.schemas.run import GridSpec
from app.schemas.state import Convention, Family, GaussianState, StateParams
from app.schemas.validation import ValidationPoint, ValidationReport

logger = logging.getLogger(__name__)

CHERNOFF_PROBE_T = 0.3
METRICS = ("fidelity", "affinity", "q_t")

DEFAULT_BOX = [
    GridSpec(name="r", min=0.0, max=0.5, steps=3),
    GridSpec(name="nth", min=0.0, max=1.0, steps=3),
    GridSpec(name="alpha", min=0.0, max=1.0, steps=3),
]


def family_params(family: Family, r: float, nth: float, alpha: float) -> StateParams:
    """Parámetros de la familia para un punto (r, nth, |α|) de la caja."""
    if family is Family.STS:
        return StateParams(r=r, n_th1=nth, n_th2=0.5 * nth)
    if family is Family.TSS:
        return StateParams(r=r, n_th1=nth, n_th2=nth)
    if family is Family.COHERENT_THERMAL:
        return StateParams(n_th1=nth, n_th2=0.5 * nth, alpha=(alpha, 0.0))
    if family is Family.SDTS:
        return StateParams(r=r, n_th1=nth, n_th2=0.5 * nth, alpha=(alpha, 0.0))
    return StateParams(r=r, n_th1=nth, n_th2=0.5 * nth, r_prime=0.5 * r, alpha=(0.0, alpha))


def _mislabel(state: GaussianState) -> GaussianState:
    # Test hook: read VacuumOne moments as if they were VacuumHalf
    return GaussianState(disp=state.disp, cov=state.cov, convention=Convention.VACUUM_HALF)


def _validate_point(
    family: Family, params: StateParams, cutoff: int, mislabel_convention: bool
) -> ValidationPoint:
    dumped = params.model_dump(exclude={"alpha"})
    record = {k: float(v) for k, v in dumped.items() if v is not None}
    record["alpha_re"], record["alpha_im"] = params.alpha
    point = ValidationPoint(family=family.value, params=record)

    gaussian = make_state(params, family)
    if required_levels(gaussian, settings.FOCK_TAIL_LIMIT) > cutoff:
        logger.warning("%s %s: beyond cutoff %d, skipped", family.value, record, cutoff)
        return point.model_copy(update={"truncated": True})
    try:
        op1 = fock_state(params, family, cutoff)
    except TruncationError as exc:
        logger.warning("%s %s: %s", family.value, record, exc.detail)
        return point.model_copy(update={"truncated": True, "tail_mass": exc.tail_mass})
    op2 = transform_state(op1, phase_shift(math.pi / 2))
    oracle = oracle_report(op1, op2, CHERNOFF_PROBE_T)

    if mislabel_convention:
        gaussian = _mislabel(gaussian)
    g1, g2 = pi_half_pair(gaussian)
    report = helstrom_bounds(g1, g2)
    deviations = {
        "fidelity": abs(report.fidelity - oracle["fidelity"]),
        "affinity": abs(report.affinity - oracle["affinity"]),
        "q_t": abs(q_t(g1, g2, CHERNOFF_PROBE_T) - oracle["q_t"]),
    }
    slack = op1.tail_mass + settings.SANDWICH_RTOL * max(report.ubp, oracle["helstrom"])
    sandwich = report.lbp - slack <= oracle["helstrom"] <= report.ubp + slack
    return point.model_copy(
        update={"deviations": deviations, "sandwich_ok": sandwich, "tail_mass": op1.tail_mass}
    )


def run_validate(
    box: Sequence[GridSpec],
    cutoff: int,
    families: Optional[Sequence[Family]] = None,
    mislabel_convention: bool = False,
) -> ValidationReport:
    """Comparar métricas gaussianas y de Fock sobre una caja de parámetros.

    Args:
        box: grillas sobre `r`, `nth` y `alpha` (las ausentes valen 0).
        cutoff: niveles de Fock por modo.
        families: familias a validar; por defecto todas.
        mislabel_convention: control negativo que confunde las convenciones.

    Returns:
        `ValidationReport` con las desviaciones máximas por métrica.
    """
    tolerance = settings.VALIDATION_TOL
    if not box:
        return ValidationReport(tolerance=tolerance)
    axes: Dict[str, List[float]] = {"r": [0.0], "nth": [0.0], "alpha": [0.0]}
    for grid in box:
        axes[grid.name] = [float(v) for v in grid.values()]

    jobs, seen = [], set()
    for family in families or list(Family):
        for r, nth, alpha in itertools.product(axes["r"], axes["nth"], axes["alpha"]):
            params = family_params(family, r, nth, alpha)
            key = (family, params.model_dump_json())
            if key not in seen:
                seen.add(key)
                jobs.append((family, params))

    with ThreadPoolExecutor(max_workers=settings.MAX_WORKERS) as pool:
        points = list(
            pool.map(lambda job: _validate_point(*job, cutoff, mislabel_convention), jobs)
        )

    checked = [p for p in points if not p.truncated]
    max_deviation = {
        metric: max((p.deviations[metric] for p in checked), default=0.0) for metric in METRICS
    }
    return ValidationReport(
        points=points,
        max_deviation=max_deviation,
        tolerance=tolerance,
        sandwich_violations=sum(1 for p in checked if not p.sandwich_ok),
        truncated=len(points) - len(checked),
    )
