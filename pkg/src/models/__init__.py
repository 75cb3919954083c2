# src/models/__init__.py
"""
Domain value types shared by every analysis module.
"""

from src.models.distribution import MixedDistribution
from src.models.interval import Interval, IntervalSet
from src.models.params import SystemParams, validate, validate_epsilon
from src.models.results import (
    DESIGN_KEYS,
    AliceBounds,
    Capacities,
    DesignSolution,
    DesignView,
    DetectionCase,
    DetectionResult,
    GridOptimum,
    Hypothesis,
    Infeasible,
    RateChoice,
    RateEndpoint,
    SignalRegime,
    ThroughputProfile,
)

__all__ = [
    "AliceBounds",
    "Capacities",
    "DESIGN_KEYS",
    "DesignSolution",
    "DesignView",
    "DetectionCase",
    "DetectionResult",
    "GridOptimum",
    "Hypothesis",
    "Infeasible",
    "Interval",
    "IntervalSet",
    "MixedDistribution",
    "RateChoice",
    "RateEndpoint",
    "SignalRegime",
    "SystemParams",
    "ThroughputProfile",
    "validate",
    "validate_epsilon",
]
