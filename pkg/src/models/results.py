# src/models/results.py
"""
Result value types returned by the analysis modules.

Everything here is an immutable value object; optimizers return either
a DesignSolution or an Infeasible, never raise for infeasibility.
"""

# imports built-in modules
from dataclasses import dataclass, field
from enum import StrEnum
from types import MappingProxyType
from typing import Mapping

# imports local modules
from src.exceptions import InvalidParameterError
from src.models.interval import Interval, IntervalSet
from src.models.params import SystemParams


class Hypothesis(StrEnum):
    """Willie's two hypotheses: Alice silent (H0) or transmitting (H1)."""

    H0 = "H0"
    H1 = "H1"


class SignalRegime(StrEnum):
    """Position of Alice's power relative to the jamming power support."""

    DOMINANT = "pa>=pmax"
    BELOW_SUPPORT_NARROW = "pa<=min(pmin,pl)"
    INSIDE_SPREAD = "pmin<pa<=pl"
    ABOVE_SPREAD = "pl<pa<=pmin"
    INSIDE_SUPPORT = "max(pmin,pl)<pa<pmax"


class DetectionCase(StrEnum):
    """The ten branches of the closed-form minimum detection error."""

    DOMINANT_INTERMITTENT = "pa>=pmax;pj<1"
    DOMINANT_CONTINUOUS = "pa>=pmax;pj=1"
    NARROW_ATOM = "pa<=min(pmin,pl);pj<=pl/(pl+pa)"
    NARROW_SEGMENT = "pa<=min(pmin,pl);pj>pl/(pl+pa)"
    SPREAD_STRADDLE = "pmin<pa<=pl;pj<=pl/pmax"
    SPREAD_SEGMENT = "pmin<pa<=pl;pj>pl/pmax"
    ABOVE_ATOM = "pl<pa<=pmin;pj<=1/2"
    ABOVE_COVER = "pl<pa<=pmin;pj>1/2"
    INSIDE_STRADDLE = "max(pmin,pl)<pa<pmax;pj<=pl/(pl+pmax-pa)"
    INSIDE_COVER = "max(pmin,pl)<pa<pmax;pj>pl/(pl+pmax-pa)"

    @property
    def regime(self) -> SignalRegime:
        return _CASE_REGIME[self]


_CASE_REGIME = {
    DetectionCase.DOMINANT_INTERMITTENT: SignalRegime.DOMINANT,
    DetectionCase.DOMINANT_CONTINUOUS: SignalRegime.DOMINANT,
    DetectionCase.NARROW_ATOM: SignalRegime.BELOW_SUPPORT_NARROW,
    DetectionCase.NARROW_SEGMENT: SignalRegime.BELOW_SUPPORT_NARROW,
    DetectionCase.SPREAD_STRADDLE: SignalRegime.INSIDE_SPREAD,
    DetectionCase.SPREAD_SEGMENT: SignalRegime.INSIDE_SPREAD,
    DetectionCase.ABOVE_ATOM: SignalRegime.ABOVE_SPREAD,
    DetectionCase.ABOVE_COVER: SignalRegime.ABOVE_SPREAD,
    DetectionCase.INSIDE_STRADDLE: SignalRegime.INSIDE_SUPPORT,
    DetectionCase.INSIDE_COVER: SignalRegime.INSIDE_SUPPORT,
}


@dataclass(frozen=True)
class DetectionResult:
    """Minimum total detection error and the thresholds attaining it.

    Attributes
    ----------
    xi_star : float
        Minimum of P_FA + P_MD over all thresholds.
    gamma_star : IntervalSet
        Every optimal threshold. Two pieces only at branch-boundary ties.
    case_label : DetectionCase
        Branch that produced ``gamma_star``; at a tie, the first of the two.
    tie : bool
        True when both branch candidates are optimal and ``gamma_star`` is
        their union.
    """

    xi_star: float
    gamma_star: IntervalSet
    case_label: DetectionCase
    tie: bool = False

    def __post_init__(self) -> None:
        if not 0.0 <= self.xi_star <= 1.0:
            raise InvalidParameterError("xi_star in [0,1]", f"xi_star={self.xi_star}")


@dataclass(frozen=True)
class Capacities:
    """Bob's channel capacities and the outage headroom P_r."""

    c_n: float
    c_j: float
    c_f: float
    c_eps: float
    c_a: float
    p_r: float


@dataclass(frozen=True)
class ThroughputProfile:
    """Capacities, outage probability and covert throughput at one design."""

    c_n: float
    c_j: float
    c_f: float
    c_eps: float
    c_a: float
    p_r: float
    outage: float
    omega: float


class RateEndpoint(StrEnum):
    """Candidate optimal rates: capacity under maximum jamming or none."""

    CN = "Cn"
    CF = "Cf"


@dataclass(frozen=True)
class RateChoice:
    rate: float
    omega: float
    endpoint: RateEndpoint


class DesignView(StrEnum):
    JAMMER = "jammer"
    ALICE = "alice"
    GLOBAL = "global"
    CONTINUOUS = "continuous"


# Keys of a full design point, in output order
DESIGN_KEYS = ("p_a", "rate", "p_j", "p_min", "p_max")


@dataclass(frozen=True)
class DesignSolution:
    """Output of an optimizer.

    ``assignments`` maps each design variable to a value or an Interval;
    interval bounds may be coupled, which ``constraints`` states in words.
    ``point`` is the canonical member of the solution set (free variables
    at their lower bound, or the minimum-power point for the jammer view).

    Attributes
    ----------
    view : DesignView
        Which optimization problem was solved.
    assignments : Mapping[str, float | Interval]
        Optimal value or range per design variable.
    point : Mapping[str, float]
        Canonical representative; always has every key of ``DESIGN_KEYS``.
    omega_star : float
        Covert throughput attained by every member of the solution set.
    case_label : str
        Which case of the design rule fired.
    constraints : tuple[str, ...]
        Coupling constraints between interval-valued assignments.
    rate_endpoint : RateEndpoint | None
        Rate rule outcome, for views that choose between C_n and C_f.
    """

    view: DesignView
    assignments: Mapping[str, float | Interval]
    point: Mapping[str, float]
    omega_star: float
    case_label: str
    constraints: tuple[str, ...] = ()
    rate_endpoint: RateEndpoint | None = None

    def __post_init__(self) -> None:
        missing = [key for key in DESIGN_KEYS if key not in self.point]
        if missing:
            raise InvalidParameterError("design point complete", f"missing {missing}")
        object.__setattr__(self, "assignments", MappingProxyType(dict(self.assignments)))
        object.__setattr__(self, "point", MappingProxyType(dict(self.point)))

    def representative(self) -> dict[str, float]:
        return {key: self.point[key] for key in DESIGN_KEYS}

    def to_params(
        self, epsilon: float, p_m: float, sigma_b2: float, sigma_w2: float = 1.0
    ) -> SystemParams:
        """Canonical point as a full SystemParams."""
        return SystemParams(
            p_a=self.point["p_a"],
            p_min=self.point["p_min"],
            p_max=self.point["p_max"],
            p_j=self.point["p_j"],
            sigma_w2=sigma_w2,
            sigma_b2=sigma_b2,
            epsilon=epsilon,
            p_m=p_m,
            rate=self.point["rate"],
        )


@dataclass(frozen=True)
class Infeasible:
    """Typed infeasibility result naming each failed condition."""

    view: DesignView
    conditions: tuple[str, ...]
    details: str = ""

    def describe(self) -> str:
        text = f"{self.view} infeasible: {', '.join(self.conditions)}"
        return f"{text} ({self.details})" if self.details else text


@dataclass(frozen=True)
class AliceBounds:
    """Alice-side feasible region: power cap P_au and rate cap C_f."""

    p_au: float
    c_f: float


@dataclass(frozen=True)
class GridOptimum:
    """Best point found by a brute-force grid search."""

    value: float
    point: Mapping[str, float] = field(default_factory=dict)
    evaluations: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "point", MappingProxyType(dict(self.point)))
