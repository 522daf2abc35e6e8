"""Barridos que generan los datos de las figuras 1 a 9.

Todas las curvas corresponden a la codificación por desplazamiento de
fase π/2 sobre el modo A. Los puntos donde el ruido térmico supera el
presupuesto de fotones quedan con NaN. Las columnas con sufijo `_closed`
usan la forma cerrada de la QCB; las demás, la QCB numérica.
"""

from typing import Callable, Dict, Optional

import numpy as np
import pandas as pd

from app.core.errors import UsageError
from app.distinguishability.bounds import bhattacharyya_bound, fidelity_lower_bound, pure_perr
from app.distinguishability.chernoff import qcb
from app.distinguishability.closed_forms import state_qcb_asym
from app.distinguishability.fidelity import uhlmann_fidelity
from app.experiments.base import Point, Row, SweepBase
from app.experiments.transmitters import (
    coherent_at,
    coherent_thermal_at,
    displaced_sts_at,
    displaced_tss_at,
    squeezed_coherent_at,
    squeezing_for_photons,
    sts_at,
    tmsv_at,
    tss_at,
)
from app.gaussian.states import make_sts, make_tmsv, make_tss, pi_half_pair, purity, total_photons
from app.schemas.run import GridSpec, RunConfig
from app.schemas.state import GaussianState


def _or_nan(func: Callable[[GaussianState], float], state: Optional[GaussianState]) -> float:
    return float("nan") if state is None else float(func(state))


def perr_exact(state: GaussianState) -> float:
    return pure_perr(*pi_half_pair(state))


def lbp(state: GaussianState, copies: int = 1) -> float:
    return fidelity_lower_bound(uhlmann_fidelity(*pi_half_pair(state)), copies)


def qcb_bound(state: GaussianState, copies: int = 1) -> float:
    return qcb(*pi_half_pair(state), copies)[0]


def qcb_closed(state: GaussianState) -> float:
    """Forma cerrada (ab - c²)/(2ab - c²); aproxima la QCB cuando N_th1 != N_th2."""
    return state_qcb_asym(state)


def ubp_bhattacharyya(state: GaussianState) -> float:
    return bhattacharyya_bound(*pi_half_pair(state))


class FigureOne(SweepBase):
    """Error exacto sin ruido y cotas con ruido asimétrico en función de N_T."""
    name = "figure 1"
    columns = [
        "n_total", "nth1", "nth2", "perr_sq_vac", "perr_coh", "perr_sq_coh",
        "qcb_sq_vac", "qcb_sq_th", "qcb_sq_th_closed", "lbp_sq_th", "lbp_coh_th", "ubp_coh_th",
        "purity_sq_th",
    ]
    default_grids = [GridSpec(name="n_total", min=0.0, max=60.0, steps=601)]
    default_fixed = {"nth1": 5.0, "nth2": 0.0}

    def evaluate(self, point: Point) -> Row:
        n_total, n1, n2 = point["n_total"], point["nth1"], point["nth2"]
        tmsv = tmsv_at(n_total)
        sts = sts_at(n_total, n1, n2)
        coh_th = coherent_thermal_at(n_total, n1, n2)
        return {
            "n_total": n_total,
            "nth1": n1,
            "nth2": n2,
            "perr_sq_vac": perr_exact(tmsv),
            "perr_coh": perr_exact(coherent_at(n_total)),
            "perr_sq_coh": perr_exact(squeezed_coherent_at(n_total)),
            "qcb_sq_vac": qcb_bound(tmsv),
            "qcb_sq_th": _or_nan(qcb_bound, sts),
            "qcb_sq_th_closed": _or_nan(qcb_closed, sts),
            "lbp_sq_th": _or_nan(lbp, sts),
            "lbp_coh_th": _or_nan(lbp, coh_th),
            "ubp_coh_th": _or_nan(qcb_bound, coh_th),
            "purity_sq_th": _or_nan(purity, sts),
        }


class FigureTwo(SweepBase):
    """Diferencia QCB^{sq-th} - LBP^{coh-th} sobre el plano (N_T, N_th1).

    Valores negativos marcan la región de ventaja cuántica.
    """
    name = "figure 2"
    columns = [
        "n_total", "nth1", "nth2", "qcb_sq_th", "qcb_sq_th_closed", "lbp_coh_th",
        "difference", "difference_closed", "purity_sq_th",
    ]
    default_grids = [
        GridSpec(name="n_total", min=0.0, max=40.0, steps=81),
        GridSpec(name="nth1", min=0.0, max=10.0, steps=41),
    ]
    default_fixed = {"nth2": 0.0}

    def evaluate(self, point: Point) -> Row:
        n_total, n1, n2 = point["n_total"], point["nth1"], point["nth2"]
        sts = sts_at(n_total, n1, n2)
        upper = _or_nan(qcb_bound, sts)
        closed = _or_nan(qcb_closed, sts)
        lower = _or_nan(lbp, coherent_thermal_at(n_total, n1, n2))
        return {
            "n_total": n_total,
            "nth1": n1,
            "nth2": n2,
            "qcb_sq_th": upper,
            "qcb_sq_th_closed": closed,
            "lbp_coh_th": lower,
            "difference": upper - lower,
            "difference_closed": closed - lower,
            "purity_sq_th": _or_nan(purity, sts),
        }


class FigureThree(SweepBase):
    """STS contra TSS con ruido simétrico, sin y con desplazamiento."""
    name = "figure 3"
    columns = [
        "n_total", "nth", "qcb_sts", "lbp_sts", "qcb_tss", "lbp_tss",
        "ubp_sdts", "lbp_sdts", "ubp_stsds", "lbp_stsds",
    ]
    default_grids = [GridSpec(name="n_total", min=0.5, max=10.0, steps=96)]
    default_fixed = {"nth": 0.2}

    def evaluate(self, point: Point) -> Row:
        n_total, n_th = point["n_total"], point["nth"]
        sts = sts_at(n_total, n_th, n_th)
        tss = tss_at(n_total, n_th)
        sdts = displaced_sts_at(n_total, n_th)
        stsds = displaced_tss_at(n_total, n_th)
        return {
            "n_total": n_total,
            "nth": n_th,
            "qcb_sts": _or_nan(qcb_bound, sts),
            "lbp_sts": _or_nan(lbp, sts),
            "qcb_tss": _or_nan(qcb_bound, tss),
            "lbp_tss": _or_nan(lbp, tss),
            "ubp_sdts": _or_nan(ubp_bhattacharyya, sdts),
            "lbp_sdts": _or_nan(lbp, sdts),
            "ubp_stsds": _or_nan(ubp_bhattacharyya, stsds),
            "lbp_stsds": _or_nan(lbp, stsds),
        }


class FigureFour(SweepBase):
    """Cotas de STS y TSS en función del ruido térmico simétrico, N_s fijo."""
    name = "figure 4"
    columns = ["nth", "ns", "qcb_sts", "lbp_sts", "qcb_tss", "lbp_tss"]
    default_grids = [GridSpec(name="nth", min=0.0, max=20.0, steps=81)]
    default_fixed = {"ns": 1.0}

    def evaluate(self, point: Point) -> Row:
        n_th, n_s = point["nth"], point["ns"]
        sts = make_sts(squeezing_for_photons(n_s), n_th, n_th)
        tss = make_tss(n_s, n_th, n_th)
        return {
            "nth": n_th,
            "ns": n_s,
            "qcb_sts": qcb_bound(sts),
            "lbp_sts": lbp(sts),
            "qcb_tss": qcb_bound(tss),
            "lbp_tss": lbp(tss),
        }


class FigureFive(SweepBase):
    """QCB de STS no simétricos en función de N_th1 (r y N_th2 fijos)."""
    name = "figure 5"
    columns = ["nth1", "nth2", "r", "qcb_sq_th", "qcb_sq_th_closed", "purity_sq_th"]
    default_grids = [GridSpec(name="nth1", min=0.0, max=10.0, steps=101)]
    default_fixed = {"r": 0.5, "nth2": 1.0}

    def evaluate(self, point: Point) -> Row:
        sts = make_sts(point["r"], point["nth1"], point["nth2"])
        return {
            "nth1": point["nth1"],
            "nth2": point["nth2"],
            "r": point["r"],
            "qcb_sq_th": qcb_bound(sts),
            "qcb_sq_th_closed": qcb_closed(sts),
            "purity_sq_th": purity(sts),
        }


class FigureSix(SweepBase):
    """Error exacto de TMSV frente a la cota inferior de STS al mismo N_T."""
    name = "figure 6"
    columns = [
        "n_total", "nth1", "nth2", "perr_sq_vac", "lbp_sq_th", "qcb_sq_th", "qcb_sq_th_closed",
    ]
    default_grids = [GridSpec(name="n_total", min=1.0, max=30.0, steps=117)]
    default_fixed = {"nth1": 1.0, "nth2": 0.0}

    def evaluate(self, point: Point) -> Row:
        n_total, n1, n2 = point["n_total"], point["nth1"], point["nth2"]
        sts = sts_at(n_total, n1, n2)
        return {
            "n_total": n_total,
            "nth1": n1,
            "nth2": n2,
            "perr_sq_vac": perr_exact(tmsv_at(n_total)),
            "lbp_sq_th": _or_nan(lbp, sts),
            "qcb_sq_th": _or_nan(qcb_bound, sts),
            "qcb_sq_th_closed": _or_nan(qcb_closed, sts),
        }


class FixedSqueezingFigure(SweepBase):
    """Cotas de STS con squeezing fijo y N_th1 variable frente a TMSV."""
    columns = [
        "nth1", "nth2", "r", "n_total", "qcb_sq_th", "qcb_sq_th_closed", "lbp_sq_th",
        "perr_sq_vac", "perr_sq_vac_same_r",
    ]
    default_grids = [GridSpec(name="nth1", min=0.0, max=10.0, steps=101)]

    def __init__(self, name: str, r: float):
        self.name = name
        self.default_fixed = {"r": r, "nth2": 0.0}

    def evaluate(self, point: Point) -> Row:
        r, n1, n2 = point["r"], point["nth1"], point["nth2"]
        sts = make_sts(r, n1, n2)
        n_total = total_photons(sts)
        return {
            "nth1": n1,
            "nth2": n2,
            "r": r,
            "n_total": n_total,
            "qcb_sq_th": qcb_bound(sts),
            "qcb_sq_th_closed": qcb_closed(sts),
            "lbp_sq_th": lbp(sts),
            "perr_sq_vac": perr_exact(tmsv_at(n_total)),
            "perr_sq_vac_same_r": perr_exact(make_tmsv(r)),
        }


class FigureNine(SweepBase):
    """Cotas de STS y TSS en función del número de copias."""
    name = "figure 9"
    columns = ["copies", "ns", "nth", "qcb_sts", "lbp_sts", "qcb_tss", "lbp_tss"]
    default_grids = [GridSpec(name="copies", min=1.0, max=30.0, steps=30)]
    default_fixed = {"ns": 0.1, "nth": 1.0}

    def evaluate(self, point: Point) -> Row:
        copies = int(round(point["copies"]))
        if copies < 1:
            raise UsageError("copies grid must stay >= 1")
        n_s, n_th = point["ns"], point["nth"]
        sts = make_sts(squeezing_for_photons(n_s), n_th, n_th)
        tss = make_tss(n_s, n_th, n_th)
        return {
            "copies": copies,
            "ns": n_s,
            "nth": n_th,
            "qcb_sts": qcb_bound(sts, copies),
            "lbp_sts": lbp(sts, copies),
            "qcb_tss": qcb_bound(tss, copies),
            "lbp_tss": lbp(tss, copies),
        }


FIGURES: Dict[int, SweepBase] = {
    1: FigureOne(),
    2: FigureTwo(),
    3: FigureThree(),
    4: FigureFour(),
    5: FigureFive(),
    6: FigureSix(),
    7: FixedSqueezingFigure("figure 7", 0.5),
    8: FixedSqueezingFigure("figure 8", 1.0),
    9: FigureNine(),
}


def run_figure(config: RunConfig) -> pd.DataFrame:
    """Generar la tabla de datos de la figura pedida en `config`."""
    if config.figure_id not in FIGURES:
        raise UsageError(f"unknown figure {config.figure_id}; choose 1..9")
    frame = FIGURES[config.figure_id].run(config)
    return frame.replace([np.inf, -np.inf], np.nan)


def quantum_advantage_count(frame: pd.DataFrame, column: str = "difference") -> int:
    """Puntos de la figura 2 con diferencia negativa (ventaja cuántica).

    `column` elige la diferencia numérica o la de forma cerrada (`difference_closed`).
    """
    return int((frame[column] < 0).sum())
