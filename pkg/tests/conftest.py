# tests/conftest.py
"""
Pytest configuration and fixtures.

This module provides shared fixtures and configuration for all tests.
"""

import sys
from pathlib import Path

import pytest

# Add project root to path for imports
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from src.core.simulate import SimConfig  # noqa: E402
from src.models import SystemParams  # noqa: E402


@pytest.fixture
def narrow_params() -> SystemParams:
    """Small P_a below the jamming support; the segment branch wins.

    Returns
    -------
    SystemParams
        p_j=0.8, sigma_w2=1, P_min=2, P_max=5, P_a=1.
    """
    return SystemParams(p_a=1.0, p_min=2.0, p_max=5.0, p_j=0.8, sigma_w2=1.0)


@pytest.fixture
def straddle_params() -> SystemParams:
    """P_a inside the spread; the optimal threshold is a single point."""
    return SystemParams(p_a=2.0, p_min=1.0, p_max=4.0, p_j=0.6, sigma_w2=1.0)


@pytest.fixture
def covert_params() -> SystemParams:
    """A design sitting exactly on all three covertness boundaries at eps=0.2."""
    return SystemParams(p_a=1.0, p_min=1.0, p_max=5.0, p_j=0.8, epsilon=0.2, p_m=2.4)


@pytest.fixture
def outage_params() -> SystemParams:
    """Rate in the middle outage branch, C_n < R <= C_j."""
    return SystemParams(p_a=1.0, p_min=1.0, p_max=3.0, p_j=0.8, sigma_b2=1.0, rate=0.5)


@pytest.fixture
def quick_sim() -> SimConfig:
    """Small Monte Carlo settings for fast unit tests."""
    return SimConfig(symbols_per_slot=10_000, trials=20_000, seed=7, block_size=4096, workers=1)


@pytest.fixture
def run_config(tmp_path: Path):
    """Write a key=value run configuration and return its path.

    Returns
    -------
    Callable[..., Path]
        Factory taking keyword values.
    """

    def write(**values: float) -> Path:
        path = tmp_path / "run.cfg"
        lines = ["# test run configuration"] + [f"{k}={v}" for k, v in values.items()]
        path.write_text("\n".join(lines) + "\n", encoding="utf-8")
        return path

    return write
