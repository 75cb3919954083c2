# src/utils/numeric.py
"""
Tolerant comparisons for constraint checks.

Non-strict design constraints are accepted within a relative slack of
``config.FEASIBILITY_TOL`` so that boundary designs survive rounding
(``0.4 * 6`` is ``2.4000000000000004``). Every helper accepts scalars or
numpy arrays and broadcasts.
"""

# imports third-party modules
import numpy as np
from numpy.typing import ArrayLike

# imports local modules
from src.config import config


def _slack(lhs: ArrayLike, rhs: ArrayLike) -> np.ndarray:
    scale = np.maximum(1.0, np.maximum(np.abs(lhs), np.abs(rhs)))
    return config.FEASIBILITY_TOL * scale


def at_most(lhs: ArrayLike, rhs: ArrayLike):
    """``lhs <= rhs`` up to the feasibility tolerance."""
    result = np.asarray(lhs) <= np.asarray(rhs) + _slack(lhs, rhs)
    return bool(result) if result.ndim == 0 else result


def at_least(lhs: ArrayLike, rhs: ArrayLike):
    """``lhs >= rhs`` up to the feasibility tolerance."""
    return at_most(rhs, lhs)


def close(lhs: ArrayLike, rhs: ArrayLike):
    """``lhs == rhs`` up to the feasibility tolerance."""
    result = np.abs(np.asarray(lhs) - np.asarray(rhs)) <= _slack(lhs, rhs)
    return bool(result) if result.ndim == 0 else result
