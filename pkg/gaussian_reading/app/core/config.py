"""Configuración de la aplicación basada en Pydantic Settings.

Define la clase `Settings` con las tolerancias numéricas y presupuestos de
búsqueda usados por las librerías (Williamson, Chernoff, discord, oráculo
de Fock). Los parámetros de los experimentos no se leen del entorno:
llegan siempre como flags de la CLI.
"""

from typing import Tuple

from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    """Ajustes numéricos cargados desde variables de entorno.

    Los valores por defecto son los usados para generar las figuras; pueden
    sobrescribirse con variables `READING_*` o un archivo `.env`.
    """
    PROJECT_NAME: str = "Gaussian Reading"
    LOG_LEVEL: str = "WARNING"

    # Covariance structure
    SYMMETRY_TOL: float = 1e-12
    SYMPLECTIC_TOL: float = 1e-10
    PHYSICALITY_TOL: float = 1e-9
    WILLIAMSON_TOL: float = 1e-10
    PURE_MODE_TOL: float = 1e-9
    PURITY_TOL: float = 1e-8
    MAX_CONDITION: float = 1e12

    # Chernoff search
    CHERNOFF_T_BOUNDS: Tuple[float, float] = (1e-6, 1.0 - 1e-6)
    CHERNOFF_T_TOL: float = 1e-12
    SHORTCUT_TOL: float = 1e-9

    # Discord search over traceless local transforms
    DISCORD_THETA_POINTS: int = 64
    DISCORD_XI_POINTS: int = 33
    DISCORD_LOG2_XI_SPAN: float = 4.0
    DISCORD_XATOL: float = 1e-9
    DISCORD_FATOL: float = 1e-12
    EXTREMAL_XI_TOL: float = 1e-6
    CLASSICAL_QUANTUM_TOL: float = 1e-10

    # Fock oracle
    FOCK_TAIL_LIMIT: float = 1e-6
    FOCK_TAIL_TARGET: float = 1e-8
    FOCK_EIGEN_FLOOR: float = 1e-14
    FOCK_MIN_CUTOFF: int = 8
    FOCK_PADDING: int = 24
    FOCK_CUTOFFS: Tuple[int, ...] = (8, 12, 16, 24, 32, 48, 64, 96, 128)
    ORACLE_THETA_POINTS: int = 8
    ORACLE_XI_POINTS: int = 9
    ORACLE_LOG2_XI_SPAN: float = 1.0

    # Experiments
    VALIDATION_TOL: float = 1e-5
    SANDWICH_RTOL: float = 1e-7
    COPIES_SLACK: float = 1e-9
    THRESHOLD_BRACKET: Tuple[float, float] = (0.0, 1e3)
    THRESHOLD_XTOL: float = 1e-10
    MAX_WORKERS: int = 4
    CSV_FLOAT_FORMAT: str = "%.12g"

    class Config:
        """Configuración interna de Pydantic Settings.

        Aquí se configura el archivo `.env` por defecto y el prefijo de las
        variables de entorno.
        """
        env_file = ".env"
        env_prefix = "READING_"


settings = Settings()
