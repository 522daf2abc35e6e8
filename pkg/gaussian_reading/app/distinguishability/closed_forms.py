"""Expresiones cerradas para la codificación π/2 de STS y TSS.

Funciones de las entradas (a, b, c) de la forma estándar en VacuumOne y sus
derivadas respecto de a, c y del ruido N_th1.

Las formas simétricas coinciden con la QCB y la fidelidad numéricas. La forma
asimétrica (ab - c²)/(2ab - c²) es solo una aproximación cuando a != b; la
QCB exacta es la de `app.distinguishability.chernoff.qcb`.
"""

import math
from typing import Tuple

from app.core.errors import DomainError
from app.gaussian.states import make_sts, make_tss, standard_form_entries
from app.schemas.state import Family, GaussianState


def closed_form_entries(state: GaussianState) -> Tuple[float, float, float]:
    """Entradas (a, b, c) de un estado sin desplazamiento en forma estándar con c1 = -c2."""
    entries = standard_form_entries(state)
    if entries is None:
        raise DomainError("state is not in standard form")
    a, b, c1, c2 = entries
    if abs(c1 + c2) > 1e-9 * max(1.0, abs(c1)) or any(abs(x) > 1e-12 for x in state.disp):
        raise DomainError("closed forms need an undisplaced state with c1 = -c2")
    return a, b, c1


def _check_entries(a: float, b: float, c: float) -> None:
    if min(a, b) < 1.0 - 1e-9 or a * b - c * c <= 0.0:
        raise DomainError(f"entries (a={a}, b={b}, c={c}) are not a physical standard form")


def _check_symmetric(a: float, b: float, name: str) -> None:
    if abs(a - b) > 1e-9 * max(1.0, a):
        raise DomainError(f"{name} needs a symmetric state (a = b)")


def closed_qcb_sym(a: float, c: float) -> float:
    """QCB = (a² - c²)/(2a² - c²), invariante ante (a, c) -> (λa, λc)."""
    denom = 2 * a * a - c * c
    if a <= 0 or denom <= 0:
        raise DomainError(f"closed_qcb_sym needs 2a² > c² with a > 0, got a={a}, c={c}")
    return (a * a - c * c) / denom


def closed_qcb_asym(a: float, b: float, c: float) -> float:
    """QCB aproximada (ab - c²)/(2ab - c²); exacta solo si a = b."""
    denom = 2 * a * b - c * c
    if a <= 0 or b <= 0 or denom <= 0:
        raise DomainError(f"closed_qcb_asym needs 2ab > c², got a={a}, b={b}, c={c}")
    return (a * b - c * c) / denom


def closed_fid_sym(a: float, c: float) -> float:
    """F = 4 / [1 + c² - a² + sqrt((c² - a²)² + 1 + 2a²)]² para a = b."""
    if a <= 0:
        raise DomainError(f"closed_fid_sym needs a > 0, got a={a}")
    return 4.0 / (1 + c * c - a * a + math.sqrt((c * c - a * a) ** 2 + 1 + 2 * a * a)) ** 2


def state_qcb_sym(state: GaussianState) -> float:
    a, b, c = closed_form_entries(state)
    _check_entries(a, b, c)
    _check_symmetric(a, b, "closed_qcb_sym")
    return closed_qcb_sym(a, c)


def state_qcb_asym(state: GaussianState) -> float:
    a, b, c = closed_form_entries(state)
    _check_entries(a, b, c)
    return closed_qcb_asym(a, b, c)


def state_fid_sym(state: GaussianState) -> float:
    a, b, c = closed_form_entries(state)
    _check_entries(a, b, c)
    _check_symmetric(a, b, "closed_fid_sym")
    return closed_fid_sym(a, c)


def qcb_derivs(a: float, c: float) -> Tuple[float, float]:
    """(∂QCB/∂a, ∂QCB/∂c) de la forma simétrica."""
    denom = (c * c - 2 * a * a) ** 2
    return 2 * a * c * c / denom, -2 * a * a * c / denom


def fid_derivs(a: float, c: float) -> Tuple[float, float]:
    """(∂F/∂a, ∂F/∂c) de la fidelidad simétrica.

    Con u = 1 + c² - a² y R = sqrt((c² - a²)² + 1 + 2a²) se usa
    |u| = sqrt(u²), que en la región física coincide con -u.
    """
    u = 1 + c * c - a * a
    root = math.sqrt((c * c - a * a) ** 2 + 1 + 2 * a * a)
    base = (u + root) ** 3 * root
    d_a = 16 * a * (root - abs(u) - 2) / base
    d_c = -16 * c * (root + c * c - a * a) / base
    return d_a, d_c


def qcb_noise_deriv(r: float, n1: float, n2: float) -> float:
    """∂/∂N_th1 de la forma cerrada `closed_qcb_asym` sobre un STS.

    Negativa si n1 > n2 y nula si n1 = n2.
    """
    total = 1 + n1 + n2
    sh2 = math.sinh(2 * r) ** 2
    poly = (
        n1 * n1 - 2 * (7 * n2 + 3) * n1 + (n2 - 6) * n2
        - total * total * math.cosh(4 * r) - 3
    )
    g = 8 * total * (2 * n2 + 1) * sh2 / poly ** 2
    return -(n1 - n2) * g


def noise_total_derivative(metric: str, family: Family, squeezing: float, n_th: float) -> float:
    """Derivada total df/dN_th a lo largo de una familia simétrica.

    df/dN = ∂f/∂a · ∂a/∂N + ∂f/∂c · ∂c/∂N, con (∂a/∂N, ∂c/∂N) igual a
    (2 cosh 2r, 2 sinh 2r) para STS y (2, 0) para TSS.

    Args:
        metric: "qcb" o "fidelity".
        family: Family.STS (squeezing = r) o Family.TSS (squeezing = n_s).
        squeezing: parámetro de squeezing de la familia.
        n_th: ruido térmico simétrico.
    """
    if family is Family.STS:
        state = make_sts(squeezing, n_th, n_th)
        da, dc = 2 * math.cosh(2 * squeezing), 2 * math.sinh(2 * squeezing)
    elif family is Family.TSS:
        state = make_tss(squeezing, n_th, n_th)
        da, dc = 2.0, 0.0
    else:
        raise DomainError(f"noise derivative is defined for STS and TSS, not {family.value}")
    a, _, c = closed_form_entries(state)
    if metric == "qcb":
        f_a, f_c = qcb_derivs(a, c)
    elif metric == "fidelity":
        f_a, f_c = fid_derivs(a, c)
    else:
        raise DomainError(f"unknown metric '{metric}'")
    return f_a * da + f_c * dc
