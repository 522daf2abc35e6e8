"""Número de copias necesario para alcanzar una probabilidad de error dada."""

from app.core.errors import DomainError
from app.distinguishability.bounds import copies_needed, helstrom_bounds
from app.experiments.transmitters import squeezing_for_photons
from app.gaussian.states import make_sts, make_tss, pi_half_pair
from app.schemas.state import Family


def run_copies(family: Family, n_s: float, n_th: float, target: float) -> int:
    """Copias de STS (cota superior, peor caso) o TSS (cota inferior, mejor caso).

    Args:
        family: Family.STS o Family.TSS.
        n_s: fotones squeezed por copia.
        n_th: ruido térmico simétrico por copia.
        target: probabilidad de error objetivo.
    """
    if family is Family.STS:
        state, side = make_sts(squeezing_for_photons(n_s), n_th, n_th), "upper"
    elif family is Family.TSS:
        state, side = make_tss(n_s, n_th, n_th), "lower"
    else:
        raise DomainError(f"copies are defined for sts and tss, not {family.value}")
    s1, s2 = pi_half_pair(state)
    return copies_needed(lambda n: helstrom_bounds(s1, s2, n), target, side)
