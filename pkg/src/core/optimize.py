# src/core/optimize.py
"""
Closed-form covert throughput designs.

Three views of the same problem (maximize covert throughput subject to
covertness and the jammer's average power budget):

- jammer side: Alice's power and rate are fixed, choose (p_j, P_min, P_max)
- Alice side: the jammer is fixed, choose (P_a, R)
- global: choose everything

plus the continuous-jamming baseline (p_j = 1) for comparison.
"""

# imports built-in modules
import math
from enum import StrEnum

# imports third-party modules
from scipy import optimize as sp_optimize

# imports local modules
from src.core.covertness import (
    alice_feasible_region,
    average_jamming_power,
    jammer_feasible_region,
)
from src.core.throughput import best_rate, capacity, effective_power
from src.exceptions import InvalidParameterError
from src.models import (
    DesignSolution,
    DesignView,
    Infeasible,
    Interval,
    RateEndpoint,
    SystemParams,
    validate_epsilon,
)
from src.utils.logger import get_app_logger
from src.utils.numeric import at_least, at_most, close

# Application logger
logger = get_app_logger()

__all__ = [
    "JammerCase",
    "average_jamming_power",
    "continuous_baseline",
    "jammer_case",
    "jammer_solution_contains",
    "optimize_alice",
    "optimize_global",
    "optimize_jammer",
    "rho_lower_bracket",
    "rho_objective",
    "rho_star",
]

# Relative width of the R = C_a band
RATE_MATCH_TOLERANCE = 1e-12

# Absolute tolerance of the rate-switch threshold root
RHO_XTOL = 1e-10


class JammerCase(StrEnum):
    """Rate bands of the jammer-side design."""

    ALL_OPTIMAL = "R<=C_eps"
    SHARED_OUTAGE = "C_eps<R<C_a"
    KNEE = "R=C_a"
    SILENT_ONLY = "C_a<R<=C_f"


def _positive(name: str, value: float) -> None:
    if not (math.isfinite(value) and value > 0):
        raise InvalidParameterError(f"{name}>0", f"{name}={value!r}")


def _span(lo: float, hi: float) -> Interval:
    # hi may undershoot lo by rounding on degenerate boxes
    return Interval.closed(lo, max(lo, hi))


def jammer_case(p_a: float, rate: float, epsilon: float, sigma_b2: float) -> JammerCase:
    """Which jammer-side band ``rate`` falls in; boundaries go to the lower band."""
    c_eps = math.log2(1.0 + epsilon * p_a / (epsilon * sigma_b2 + p_a))
    c_a = capacity(p_a, sigma_b2 + p_a)
    if rate <= c_eps:
        return JammerCase.ALL_OPTIMAL
    if abs(rate - c_a) <= RATE_MATCH_TOLERANCE * c_a:
        return JammerCase.KNEE
    if rate < c_a:
        return JammerCase.SHARED_OUTAGE
    return JammerCase.SILENT_ONLY


def _canonical_point(p_a: float, rate: float, epsilon: float) -> dict[str, float]:
    # Lowest average jamming power among optimal designs
    return {
        "p_a": p_a,
        "rate": rate,
        "p_j": 1.0 - epsilon,
        "p_min": p_a,
        "p_max": p_a / epsilon,
    }


def optimize_jammer(
    p_a: float, rate: float, epsilon: float, p_m: float, sigma_b2: float
) -> DesignSolution | Infeasible:
    """Outage-minimizing jammer design for fixed Alice power and rate.

    Parameters
    ----------
    p_a, rate : float
        Alice's transmit power and rate.
    epsilon : float
        Covertness level in (0, 1/2).
    p_m : float
        Jammer's average power budget.
    sigma_b2 : float
        Bob's noise variance.

    Returns
    -------
    DesignSolution | Infeasible
        The solution set for the band ``rate`` falls in, with
        ``p_j = 1 - eps, P_min = P_a, P_max = P_a / eps`` as its
        representative; or the infeasibility verdict of the jammer region.
    """
    region = jammer_feasible_region(p_a, rate, epsilon, p_m, sigma_b2)
    if isinstance(region, Infeasible):
        return region

    eps = epsilon
    p_ju = region.pj_range.hi
    p_r = effective_power(p_a, rate, sigma_b2)
    case = jammer_case(p_a, rate, eps, sigma_b2)

    assignments: dict[str, float | Interval] = {"p_a": p_a, "rate": rate}
    constraints: tuple[str, ...]

    # P_max ceiling on the p_j = 1 - eps slice
    slice_pmax = region.pmax_bounds(1.0 - eps)
    slice_cap = slice_pmax.hi if slice_pmax is not None else p_a / eps

    if case is JammerCase.ALL_OPTIMAL:
        omega_star = rate
        cap = min(p_r, slice_cap)
        # P_min is largest where l2 and l3 cross, clipped to [P_a/eps, cap]
        knee = min(max(p_m / (1.0 - eps) + (1.0 - eps) * p_a / (2.0 * eps), p_a / eps), cap)
        assignments |= {
            "p_j": region.pj_range,
            "p_max": _span(p_a / eps, cap),
            "p_min": _span(p_a, min(knee - (1.0 - eps) * p_a / eps, 2.0 * p_m / (1.0 - eps) - knee)),
        }
        constraints = (
            "(p_j, p_min, p_max) in jammer feasible region",
            "p_max <= P_r",
            "p_min and p_max ranges shown for p_j = 1 - eps",
        )
    elif case is JammerCase.SHARED_OUTAGE:
        omega_star = eps * rate * p_r / p_a
        assignments |= {
            "p_j": region.pj_range,
            "p_max": p_a / eps,
            "p_min": _span((1.0 - p_ju) * p_a / eps, p_a),
        }
        constraints = ("p_min = (1 - p_j) * p_a / eps",)
    elif case is JammerCase.KNEE:
        omega_star = eps * rate
        assignments |= {
            "p_j": region.pj_range,
            "p_max": _span(p_a / eps, slice_cap),
            "p_min": p_a,
        }
        constraints = (
            "p_min = (1-eps-p_j)/(1-eps) * p_max + p_j/(1-eps) * p_a",
            "p_max <= p_j * p_a / (p_j + eps - 1) when p_j > 1 - eps",
            "(p_j, p_min, p_max) in jammer feasible region",
            "p_min and p_max ranges shown for p_j = 1 - eps",
        )
    else:
        omega_star = eps * rate
        assignments |= {
            "p_j": 1.0 - eps,
            "p_min": _span(p_a, p_m / (1.0 - eps) - (1.0 - eps) * p_a / (2.0 * eps)),
            "p_max": _span(p_a / eps, 2.0 * p_m / (1.0 - eps) - p_a),
        }
        constraints = (
            "p_max >= (1 - eps) * p_a / eps + p_min",
            "p_max <= 2 * p_m / (1 - eps) - p_min",
        )

    logger.debug(f"Jammer design case {case}: omega*={omega_star!r}")
    return DesignSolution(
        view=DesignView.JAMMER,
        assignments=assignments,
        point=_canonical_point(p_a, rate, eps),
        omega_star=omega_star,
        case_label=str(case),
        constraints=constraints,
    )


def jammer_solution_contains(
    p_a: float,
    rate: float,
    epsilon: float,
    p_m: float,
    sigma_b2: float,
    p_j: float,
    p_min: float,
    p_max: float,
) -> bool:
    """Whether (p_j, P_min, P_max) belongs to the jammer-side optimal set."""
    region = jammer_feasible_region(p_a, rate, epsilon, p_m, sigma_b2)
    if isinstance(region, Infeasible):
        return False
    eps = epsilon
    case = jammer_case(p_a, rate, eps, sigma_b2)

    if case is JammerCase.SILENT_ONLY:
        # p_j = 1 - eps exactly; the region contains this slice
        return (
            close(p_j, 1.0 - eps)
            and at_least(p_min, p_a)
            and at_least(p_max, (1.0 - eps) * p_a / eps + p_min)
            and at_most(p_max, 2.0 * p_m / (1.0 - eps) - p_min)
        )

    if not region.contains(p_j, p_min, p_max):
        return False
    if case is JammerCase.ALL_OPTIMAL:
        return at_most(p_max, effective_power(p_a, rate, sigma_b2))
    if case is JammerCase.SHARED_OUTAGE:
        return close(p_max, p_a / eps) and close(p_min, (1.0 - p_j) * p_a / eps)
    # KNEE
    on_l1 = close(p_min, region.l1(p_j, p_max))
    if close(p_j, 1.0 - eps):
        return on_l1
    return on_l1 and at_most(p_max, p_j * p_a / (p_j + eps - 1.0))


def optimize_alice(
    p_j: float, p_min: float, p_max: float, epsilon: float, p_m: float, sigma_b2: float
) -> DesignSolution | Infeasible:
    """Throughput-maximizing Alice power and rate against a fixed jammer.

    Alice transmits at the largest covert power P_au and picks whichever
    of C_n and C_f yields more throughput at that power, C_f on a tie.
    """
    bounds = alice_feasible_region(p_j, p_min, p_max, epsilon, p_m, sigma_b2)
    if isinstance(bounds, Infeasible):
        return bounds

    params = SystemParams(
        p_a=bounds.p_au,
        p_min=p_min,
        p_max=p_max,
        p_j=p_j,
        sigma_b2=sigma_b2,
        epsilon=epsilon,
        p_m=p_m,
    )
    choice = best_rate(params, ties=RateEndpoint.CF)
    point = {
        "p_a": bounds.p_au,
        "rate": choice.rate,
        "p_j": p_j,
        "p_min": p_min,
        "p_max": p_max,
    }
    logger.debug(f"Alice design: P_au={bounds.p_au!r}, R={choice.endpoint}")
    return DesignSolution(
        view=DesignView.ALICE,
        assignments=point,
        point=point,
        omega_star=choice.omega,
        case_label=f"P_a=P_au;R={choice.endpoint}",
        rate_endpoint=choice.endpoint,
    )


def rho_objective(rho: float, epsilon: float) -> float:
    """Omega_f minus Omega_n (in nats) at the global design with P_m/sigma_b2 = rho."""
    shrink = 1.0 - epsilon**2
    return epsilon * math.log1p(2.0 * epsilon * rho / shrink) - math.log1p(
        2.0 * epsilon * rho / (shrink + 2.0 * rho)
    )


def rho_lower_bracket(epsilon: float) -> float:
    """Positive stationary point of ``rho_objective``; the objective is negative there."""
    return 0.25 * (1.0 - epsilon**2) * (math.sqrt(1.0 + 4.0 / epsilon) - 1.0)


def rho_star(epsilon: float) -> float:
    """P_m / sigma_b2 above which the global design switches from C_n to C_f.

    The unique positive root of ``rho_objective``, found by bisection from
    the stationary point with a doubling upper bracket.
    """
    validate_epsilon(epsilon)
    lo = rho_lower_bracket(epsilon)
    hi = 2.0 * lo
    while rho_objective(hi, epsilon) <= 0.0:
        hi *= 2.0
    root = sp_optimize.bisect(rho_objective, lo, hi, args=(epsilon,), xtol=RHO_XTOL)
    logger.debug(f"rho*({epsilon!r}) = {root!r} from bracket [{lo!r}, {hi!r}]")
    return float(root)


def optimize_global(epsilon: float, p_m: float, sigma_b2: float) -> DesignSolution:
    """Jointly optimal (P_a, R, p_j, P_min, P_max); always feasible."""
    validate_epsilon(epsilon)
    _positive("p_m", p_m)
    _positive("sigma_b2", sigma_b2)

    shrink = 1.0 - epsilon**2
    p_a = 2.0 * epsilon * p_m / shrink
    p_max = 2.0 * p_m / shrink
    p_j = 1.0 - epsilon

    c_n = capacity(p_a, sigma_b2 + p_max)
    c_f = capacity(p_a, sigma_b2)
    if p_m / sigma_b2 >= rho_star(epsilon):
        endpoint, rate, omega_star = RateEndpoint.CF, c_f, epsilon * c_f
    else:
        endpoint, rate, omega_star = RateEndpoint.CN, c_n, c_n

    point = {"p_a": p_a, "rate": rate, "p_j": p_j, "p_min": p_a, "p_max": p_max}
    return DesignSolution(
        view=DesignView.GLOBAL,
        assignments=point,
        point=point,
        omega_star=omega_star,
        case_label=f"global;R={endpoint}",
        rate_endpoint=endpoint,
    )


def continuous_baseline(
    epsilon: float, p_m: float, sigma_b2: float
) -> tuple[float, DesignSolution]:
    """Best covert throughput when the jammer is always on (p_j = 1)."""
    validate_epsilon(epsilon)
    _positive("p_m", p_m)
    _positive("sigma_b2", sigma_b2)

    p_a = 2.0 * epsilon * p_m
    p_max = 2.0 * p_m
    omega = capacity(p_a, sigma_b2 + p_max)
    point = {"p_a": p_a, "rate": omega, "p_j": 1.0, "p_min": 0.0, "p_max": p_max}
    design = DesignSolution(
        view=DesignView.CONTINUOUS,
        assignments=point,
        point=point,
        omega_star=omega,
        case_label=f"continuous;R={RateEndpoint.CN}",
        rate_endpoint=RateEndpoint.CN,
    )
    return omega, design

