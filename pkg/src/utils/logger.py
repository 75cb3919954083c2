# src/utils/logger.py
"""
Logging utilities.

Provides centralized logging configuration for the application.
Records go to stdout, so every handler here writes to stderr.
"""

import logging
import sys
from datetime import datetime
from pathlib import Path
from typing import Optional

from src.config import config

LOG_FORMAT = "%(asctime)s - %(name)s - %(module)s - %(levelname)s - %(message)s"


def setup_logger(
    name: str,
    log_file: Optional[str] = None,
    level: int | str = config.LOG_LEVEL,
    console_output: bool = True,
) -> logging.Logger:
    """Set up a logger with file and/or console handlers.

    Parameters
    ----------
    name : str
        Logger name (typically __name__ of the calling module).
    log_file : Optional[str]
        Log file name inside ``config.LOGS_DIR``. If None, only console
        logging is enabled.
    level : int | str
        Logging level (default: ``config.LOG_LEVEL``).
    console_output : bool
        Whether to also output to stderr (default: True).

    Returns
    -------
    logging.Logger
        Configured logger instance.
    """
    logger = logging.getLogger(name)
    logger.setLevel(level)

    # Prevent duplicate handlers
    if logger.handlers:
        return logger

    formatter = logging.Formatter(LOG_FORMAT, datefmt="%Y-%m-%d %H:%M:%S")

    if log_file:
        logs_dir = Path(config.LOGS_DIR)
        logs_dir.mkdir(exist_ok=True)

        file_handler = logging.FileHandler(logs_dir / log_file)
        file_handler.setLevel(level)
        file_handler.setFormatter(formatter)
        logger.addHandler(file_handler)

    if console_output:
        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setLevel(level)
        console_handler.setFormatter(formatter)
        logger.addHandler(console_handler)

    # Child loggers (covert_jam.sim) must not print twice through the app logger
    logger.propagate = False
    return logger


def get_app_logger() -> logging.Logger:
    """Get the application logger (stderr only)."""
    return setup_logger("covert_jam")


def get_sim_logger() -> logging.Logger:
    """Get the Monte Carlo simulation logger."""
    log_file = None
    if config.LOG_TO_FILE:
        today = datetime.now().strftime("%Y-%m-%d")
        log_file = f"sim_{today}.log"
    return setup_logger("covert_jam.sim", log_file=log_file)
