"""Barrido genérico reutilizable sobre grillas de parámetros.

Este módulo proporciona `SweepBase`, una clase genérica que arma el
producto cartesiano de las grillas de una figura, evalúa cada punto en
paralelo y devuelve las filas en el orden de la grilla.
"""

import itertools
import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Dict, List, Optional

import pandas as pd

from app.core.config import settings
from app.core.errors import UsageError
from app.schemas.run import GridSpec, RunConfig

logger = logging.getLogger(__name__)

Point = Dict[str, float]
Row = Dict[str, float]


class SweepBase:
    """Implementación genérica de un barrido.

    Las subclases fijan `columns`, `default_grids`, `default_fixed` y
    definen `evaluate`, que transforma un punto en una fila.
    """
    name: str = "sweep"
    columns: List[str] = []
    default_grids: List[GridSpec] = []
    default_fixed: Dict[str, float] = {}

    def evaluate(self, point: Point) -> Row:
        raise NotImplementedError

    def run(self, config: RunConfig) -> pd.DataFrame:
        """Evaluar todos los puntos de la grilla y armar la tabla.

        Args:
            config: configuración con grillas y parámetros fijos que
                sobrescriben los valores por defecto.

        Returns:
            DataFrame con una fila por punto y las columnas de la figura.
        """
        grids = self._get_grids(config)
        fixed = self._get_fixed(config)
        points = self._points(grids, fixed)
        logger.info("%s: evaluating %d grid points", self.name, len(points))
        rows = self._evaluate_all(points)
        return pd.DataFrame(rows, columns=self.columns)

    def _get_grids(self, config: RunConfig) -> List[GridSpec]:
        """Reemplazar las grillas por defecto con las de la configuración."""
        known = {grid.name for grid in self.default_grids}
        for grid in config.grids:
            if grid.name not in known:
                raise UsageError(
                    f"{self.name} does not sweep '{grid.name}' (sweeps: {sorted(known)})"
                )
        return [config.grid(grid.name) or grid for grid in self.default_grids]

    def _get_fixed(self, config: RunConfig) -> Point:
        """Combinar parámetros fijos; solo se aceptan los que la figura conoce."""
        fixed = dict(self.default_fixed)
        for key, value in config.fixed.items():
            if key not in fixed:
                raise UsageError(
                    f"{self.name} does not take a fixed '{key}' (fixed: {sorted(fixed)})"
                )
            fixed[key] = value
        return fixed

    @staticmethod
    def _points(grids: List[GridSpec], fixed: Point) -> List[Point]:
        axes = [grid.values() for grid in grids]
        names = [grid.name for grid in grids]
        return [
            {**fixed, **dict(zip(names, (float(v) for v in values)))}
            for values in itertools.product(*axes)
        ]

    def _evaluate_all(self, points: List[Point], workers: Optional[int] = None) -> List[Row]:
        # map() keeps grid order whatever the completion order
        with ThreadPoolExecutor(max_workers=workers or settings.MAX_WORKERS) as pool:
            return list(pool.map(self.evaluate, points))

