"""Jerarquía de excepciones de la aplicación.

Cada excepción lleva el código de salida que la CLI devuelve cuando la
captura, del mismo modo que una `HTTPException` lleva su `status_code`.
"""

from typing import Optional


class ReadingError(Exception):
    """Error base con detalle legible y código de salida asociado."""
    exit_code: int = 3

    def __init__(self, detail: str, *, exit_code: Optional[int] = None):
        super().__init__(detail)
        self.detail = detail
        if exit_code is not None:
            self.exit_code = exit_code

    def __str__(self) -> str:
        return self.detail


class UsageError(ReadingError):
    """Parámetros de la CLI ausentes o inválidos."""
    exit_code = 2


class DomainError(ReadingError, ValueError):
    """Parámetros fuera del dominio físico (fotones negativos, ξ <= 0, ...)."""
    exit_code = 2


class ContractError(ReadingError, ValueError):
    """Violación de un contrato estructural (simetría, simplecticidad, dimensiones)."""
    exit_code = 2


class NumericError(ReadingError, ArithmeticError):
    """Fallo numérico: Williamson, matrices singulares o mal condicionadas."""
    exit_code = 3


class TruncationError(NumericError):
    """La masa fuera del corte de Fock supera el límite permitido."""

    def __init__(self, detail: str, *, tail_mass: float, suggested_cutoff: int):
        super().__init__(detail)
        self.tail_mass = tail_mass
        self.suggested_cutoff = suggested_cutoff


class NotFoundError(ReadingError):
    """Una búsqueda (p. ej. un umbral) no encontró cambio de signo."""
    exit_code = 3
