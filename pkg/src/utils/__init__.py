# src/utils/__init__.py
"""
Utilities package.

Contains logging, record formatting and tolerant numeric comparisons.
"""

from src.utils.formatters import format_value, parse_csv, render_csv, render_json
from src.utils.logger import get_app_logger, get_sim_logger, setup_logger

__all__ = [
    "format_value",
    "parse_csv",
    "render_csv",
    "render_json",
    "setup_logger",
    "get_app_logger",
    "get_sim_logger",
]
