# src/core/__init__.py
"""
Core analysis package.

Contains the detection, covertness, throughput and design analysis,
the brute-force oracles and the Monte Carlo simulator.
"""

from src.core import covertness, detection, optimize, oracle, simulate, throughput

__all__ = ["covertness", "detection", "optimize", "oracle", "simulate", "throughput"]
