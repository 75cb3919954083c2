# src/config.py
"""
Centralized configuration module.

Loads environment variables and provides default settings for the
analysis library, the Monte Carlo simulator, the brute-force oracles
and the command-line front end.
"""

# imports built-in modules
import logging
import os
import sys

# imports third-party modules
from dotenv import load_dotenv

# Use basic logger here to avoid circular import with src.utils.logger
logger = logging.getLogger(__name__)

# Load environment variables from .env file
load_dotenv()


def _env_flag(name: str, default: str = "false") -> bool:
    return os.getenv(name, default).strip().lower() in {"1", "true", "yes", "on"}


class Config:
    """Application configuration loaded from environment variables."""

    # Logging
    LOG_LEVEL: str = os.getenv("LOG_LEVEL", "INFO").upper()
    LOGS_DIR: str = os.getenv("LOGS_DIR", "logs")
    LOG_TO_FILE: bool = _env_flag("LOG_TO_FILE")

    # Noise variances used when a run configuration omits them
    DEFAULT_SIGMA_W2: float = float(os.getenv("DEFAULT_SIGMA_W2", "1.0"))
    DEFAULT_SIGMA_B2: float = float(os.getenv("DEFAULT_SIGMA_B2", "1.0"))

    # Relative slack for non-strict constraint comparisons
    FEASIBILITY_TOL: float = float(os.getenv("FEASIBILITY_TOL", "1e-12"))

    # Monte Carlo
    SIM_SYMBOLS_PER_SLOT: int = int(os.getenv("SIM_SYMBOLS_PER_SLOT", "100000"))
    SIM_TRIALS: int = int(os.getenv("SIM_TRIALS", "100000"))
    SIM_SEED: int = int(os.getenv("SIM_SEED", "20231204"))
    SIM_BLOCK_SIZE: int = int(os.getenv("SIM_BLOCK_SIZE", "8192"))
    SIM_WORKERS: int = int(os.getenv("SIM_WORKERS", "1"))

    # Brute-force oracles
    ORACLE_GRID_POINTS: int = int(os.getenv("ORACLE_GRID_POINTS", "30"))
    ORACLE_REFINEMENTS: int = int(os.getenv("ORACLE_REFINEMENTS", "2"))
    ORACLE_ZOOM: float = float(os.getenv("ORACLE_ZOOM", "3.0"))
    DETECTION_GRID_POINTS: int = int(os.getenv("DETECTION_GRID_POINTS", "20001"))

    # Sweeps
    SWEEP_WORKERS: int = int(os.getenv("SWEEP_WORKERS", "1"))

    @classmethod
    def validate(cls) -> bool:
        """Validate configuration ranges.

        Returns
        -------
        bool
            True if every setting is usable, False otherwise. Each problem
            is logged.
        """
        errors = []

        if cls.LOG_LEVEL not in logging.getLevelNamesMapping():
            errors.append(f"LOG_LEVEL '{cls.LOG_LEVEL}' is not a logging level")

        if cls.DEFAULT_SIGMA_W2 <= 0 or cls.DEFAULT_SIGMA_B2 <= 0:
            errors.append("DEFAULT_SIGMA_W2 and DEFAULT_SIGMA_B2 must be positive")

        if not 0 <= cls.FEASIBILITY_TOL < 1e-6:
            errors.append("FEASIBILITY_TOL must lie in [0, 1e-6)")

        if cls.SIM_SYMBOLS_PER_SLOT < 1 or cls.SIM_TRIALS < 1:
            errors.append("SIM_SYMBOLS_PER_SLOT and SIM_TRIALS must be at least 1")

        if cls.SIM_BLOCK_SIZE < 1:
            errors.append("SIM_BLOCK_SIZE must be at least 1")

        if cls.SIM_WORKERS < 1 or cls.SWEEP_WORKERS < 1:
            errors.append("SIM_WORKERS and SWEEP_WORKERS must be at least 1")

        if cls.ORACLE_GRID_POINTS < 3 or cls.ORACLE_REFINEMENTS < 0:
            errors.append("ORACLE_GRID_POINTS must be >= 3, ORACLE_REFINEMENTS >= 0")

        if cls.ORACLE_ZOOM <= 1.0:
            errors.append("ORACLE_ZOOM must be greater than 1")

        if cls.DETECTION_GRID_POINTS < 2:
            errors.append("DETECTION_GRID_POINTS must be at least 2")

        if errors:
            for error in errors:
                logger.error(f"❌ Configuration Error: {error}")
            return False

        return True

    @classmethod
    def validate_or_exit(cls) -> None:
        """Validate configuration and exit if invalid."""
        if not cls.validate():
            sys.exit(1)


# Create a singleton instance for easy access
config = Config()
