"""Búsqueda de sección áurea para funciones convexas de una variable."""

import math
from typing import Callable, Tuple

INV_PHI = (math.sqrt(5) - 1) / 2
INV_PHI_SQUARE = (3 - math.sqrt(5)) / 2


def golden_section_minimize(
    func: Callable[[float], float],
    lower: float,
    upper: float,
    tol: float = 1e-12,
    tie_rtol: float = 1e-12,
) -> Tuple[float, float]:
    """Minimizar `func` en [lower, upper] por sección áurea.

    Se supone un único mínimo local en el intervalo. Los extremos también se
    evalúan, de modo que un mínimo en el borde se devuelve exacto. Si el
    punto medio empata con el mínimo hallado (dentro de `tie_rtol`), se
    devuelve el punto medio; así una función plana da un argmin estable.

    Args:
        func: función escalar a minimizar.
        lower: extremo inferior.
        upper: extremo superior.
        tol: ancho final del intervalo.
        tie_rtol: tolerancia relativa para considerar dos valores iguales.

    Returns:
        Par (argmin, mínimo).
    """
    a, b = min(lower, upper), max(lower, upper)
    h = b - a
    mid = 0.5 * (a + b)
    if h <= tol:
        return mid, func(mid)

    steps = int(math.ceil(math.log(tol / h) / math.log(INV_PHI)))
    c = a + INV_PHI_SQUARE * h
    d = a + INV_PHI * h
    yc, yd = func(c), func(d)
    for _ in range(max(steps - 1, 0)):
        if yc < yd:
            b, d, yd = d, c, yc
            h *= INV_PHI
            c = a + INV_PHI_SQUARE * h
            yc = func(c)
        else:
            a, c, yc = c, d, yd
            h *= INV_PHI
            d = a + INV_PHI * h
            yd = func(d)

    best_x, best_y = (c, yc) if yc < yd else (d, yd)

    for edge in (min(lower, upper), max(lower, upper)):
        y_edge = func(edge)
        if y_edge < best_y:
            best_x, best_y = edge, y_edge
    y_mid = func(mid)
    if y_mid <= best_y + tie_rtol * max(1.0, abs(best_y)):
        return mid, y_mid
    return best_x, best_y
