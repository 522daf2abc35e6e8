"""Schemas Pydantic del reporte de validación contra el oráculo de Fock."""

from typing import Dict, List

from pydantic import BaseModel


class ValidationPoint(BaseModel):
    """Comparación gaussiano-vs-Fock en un punto de la caja de parámetros."""
    family: str
    params: Dict[str, float]
    deviations: Dict[str, float] = {}
    sandwich_ok: bool = True
    truncated: bool = False
    tail_mass: float = 0.0


class ValidationReport(BaseModel):
    """Resultado agregado de `run_validate`."""
    points: List[ValidationPoint] = []
    max_deviation: Dict[str, float] = {}
    tolerance: float
    sandwich_violations: int = 0
    truncated: int = 0

    @property
    def passed(self) -> bool:
        """Sin violaciones, sin puntos truncados y con desviaciones bajo la tolerancia."""
        return self.truncated == 0 and self.sandwich_violations == 0 and all(
            value <= self.tolerance for value in self.max_deviation.values()
        )
