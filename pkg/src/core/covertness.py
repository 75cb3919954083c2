# src/core/covertness.py
"""
Covertness and average-power constraints, and the feasible regions of
the jammer-side and Alice-side design problems.

All non-strict inequalities are checked through ``src.utils.numeric`` so
exact-boundary designs computed in floating point are accepted.
"""

# imports built-in modules
import math
from dataclasses import dataclass

# imports third-party modules
import numpy as np
from numpy.typing import ArrayLike

# imports local modules
from src.exceptions import InvalidParameterError
from src.models import (
    AliceBounds,
    DesignView,
    Infeasible,
    Interval,
    SystemParams,
    validate,
    validate_epsilon,
)
from src.utils.logger import get_app_logger
from src.utils.numeric import at_least, at_most, close

# Application logger
logger = get_app_logger()


def covertness_mask(
    p_a: ArrayLike,
    p_min: ArrayLike,
    p_max: ArrayLike,
    p_j: ArrayLike,
    epsilon: float,
):
    """Vectorized covertness check; broadcasts over array arguments.

    True where all three of
    ``p_j >= 1 - eps``,
    ``p_max - p_min >= (p_j / eps) p_a`` and
    ``(p_j / (1 - eps) - 1) p_max + p_min >= (p_j / (1 - eps)) p_a`` hold.
    """
    p_a, p_min, p_max, p_j = (np.asarray(x, dtype=float) for x in (p_a, p_min, p_max, p_j))
    ratio = p_j / (1.0 - epsilon)
    mask = (
        at_least(p_j, 1.0 - epsilon)
        & at_least(p_max - p_min, p_j / epsilon * p_a)
        & at_least((ratio - 1.0) * p_max + p_min, ratio * p_a)
    )
    return bool(mask) if np.ndim(mask) == 0 else mask


def covertness_ok(params: SystemParams) -> bool:
    """True iff the design keeps Willie's minimum error at or above 1 - epsilon."""
    validate(params)
    return covertness_mask(params.p_a, params.p_min, params.p_max, params.p_j, params.epsilon)


def meets_covertness_level(xi_star: float, epsilon: float) -> bool:
    """Compare a minimum detection error against the 1 - epsilon target."""
    return at_least(xi_star, 1.0 - epsilon)


def average_jamming_power(p_j: ArrayLike, p_min: ArrayLike, p_max: ArrayLike):
    """Mean jamming power per slot, ``p_j (p_min + p_max) / 2``."""
    return 0.5 * np.asarray(p_j) * (np.asarray(p_min) + np.asarray(p_max))


def average_power_mask(p_j: ArrayLike, p_min: ArrayLike, p_max: ArrayLike, p_m: float):
    mask = at_most(average_jamming_power(p_j, p_min, p_max), p_m)
    return bool(mask) if np.ndim(mask) == 0 else mask


def average_power_ok(params: SystemParams) -> bool:
    """True iff the jammer's average power stays within ``p_m``."""
    validate(params, check_epsilon=False)
    return average_power_mask(params.p_j, params.p_min, params.p_max, params.p_m)


def max_covert_alice_power(p_j: float, p_min: float, p_max: float, epsilon: float) -> float:
    """Largest P_a keeping a fixed jammer design covert.

    Solves the second and third covertness inequalities for P_a; the
    first one does not involve P_a.
    """
    ratio = (1.0 - epsilon) / p_j
    from_offset = (1.0 - ratio) * p_max + ratio * p_min
    from_spread = (epsilon / p_j) * (p_max - p_min)
    return min(from_offset, from_spread)


def _require_positive(**values: float) -> None:
    for name, value in values.items():
        if not (math.isfinite(value) and value > 0):
            raise InvalidParameterError(f"{name}>0", f"{name}={value!r}")


def _bounded(lo: float, hi: float) -> Interval | None:
    """Closed interval [lo, hi], or None when empty beyond tolerance."""
    if not at_most(lo, hi):
        return None
    return Interval.closed(lo, max(lo, hi))


@dataclass(frozen=True)
class FeasibleRegion:
    """Jammer designs (p_j, P_min, P_max) meeting covertness and average power.

    For each p_j in ``pj_range`` the slice is a polygon in the
    (P_max, P_min) plane bounded by

    - l1: ``P_min = (1-eps-p_j)/(1-eps) P_max + p_j/(1-eps) P_a``
    - l2: ``P_max - P_min = p_j P_a / eps``
    - l3: ``P_min + P_max = 2 P_m / p_j``

    and by ``P_min >= 0``.
    """

    p_a: float
    rate: float
    epsilon: float
    p_m: float
    sigma_b2: float
    pj_range: Interval

    # Defining lines of each labelled vertex
    VERTEX_LINES = {
        "P0": ("l1", "diagonal"),
        "P1": ("l1", "l2"),
        "P2": ("l2", "l3"),
        "P3": ("l1", "l3"),
        "P4": ("pmax_floor", "l3"),
        "P5": ("l1", "axis"),
        "P6": ("l3", "axis"),
    }

    def l1(self, p_j: float, p_max: float) -> float:
        eps = self.epsilon
        return (1.0 - eps - p_j) / (1.0 - eps) * p_max + p_j / (1.0 - eps) * self.p_a

    def pmax_bounds(self, p_j: float) -> Interval | None:
        """Admissible P_max for a given p_j, or None for an empty slice."""
        eps, p_m = self.epsilon, self.p_m
        l1_l3 = (2.0 * (1.0 - eps) * p_m - p_j**2 * self.p_a) / (
            2.0 * (1.0 - eps) * p_j - p_j**2
        )
        return _bounded(self.p_a / eps, min(l1_l3, 2.0 * p_m / p_j))

    def pmin_bounds(self, p_j: float, p_max: float) -> Interval | None:
        """Admissible P_min for given (p_j, P_max), or None when empty."""
        lo = max(0.0, self.l1(p_j, p_max))
        hi = min(p_max - p_j / self.epsilon * self.p_a, 2.0 * self.p_m / p_j - p_max)
        return _bounded(lo, hi)

    def contains(self, p_j: float, p_min: float, p_max: float) -> bool:
        if not (at_least(p_j, self.pj_range.lo) and at_most(p_j, self.pj_range.hi)):
            return False
        pmax_range = self.pmax_bounds(p_j)
        if pmax_range is None or not (
            at_least(p_max, pmax_range.lo) and at_most(p_max, pmax_range.hi)
        ):
            return False
        pmin_range = self.pmin_bounds(p_j, p_max)
        return pmin_range is not None and (
            at_least(p_min, pmin_range.lo) and at_most(p_min, pmin_range.hi)
        )

    def sample(self, rng: np.random.Generator, count: int) -> list[tuple[float, float, float]]:
        """Draw ``count`` members as (p_j, p_min, p_max), slice by slice.

        p_j is uniform on its range, then P_max uniform on its slice, then
        P_min uniform on its slice. Empty slices are redrawn.
        """
        points: list[tuple[float, float, float]] = []
        while len(points) < count:
            p_j = float(rng.uniform(self.pj_range.lo, self.pj_range.hi))
            pmax_range = self.pmax_bounds(p_j)
            if pmax_range is None:
                continue
            p_max = float(rng.uniform(pmax_range.lo, pmax_range.hi))
            pmin_range = self.pmin_bounds(p_j, p_max)
            if pmin_range is None:
                continue
            p_min = float(rng.uniform(pmin_range.lo, pmin_range.hi))
            points.append((p_j, p_min, p_max))
        return points

    def vertices(self, p_j: float) -> dict[str, tuple[float, float]]:
        """Labelled corner points as (P_max, P_min) for one p_j slice.

        P5 is at infinity when ``p_j = 1 - epsilon`` (l1 is then flat).
        """
        eps, p_a, p_m = self.epsilon, self.p_a, self.p_m
        denom = 2.0 * (1.0 - eps) * p_j - p_j**2
        tilt = p_j + eps - 1.0
        return {
            "P0": (p_a, p_a),
            "P1": (p_a / eps, (1.0 - p_j) * p_a / eps),
            "P2": (p_m / p_j + p_j * p_a / (2.0 * eps), p_m / p_j - p_j * p_a / (2.0 * eps)),
            "P3": (
                (2.0 * (1.0 - eps) * p_m - p_j**2 * p_a) / denom,
                (2.0 * (1.0 - eps - p_j) * p_m + p_j**2 * p_a) / denom,
            ),
            "P4": (p_a / eps, 2.0 * p_m / p_j - p_a / eps),
            "P5": (math.inf if close(tilt, 0.0) else p_j * p_a / tilt, 0.0),
            "P6": (2.0 * p_m / p_j, 0.0),
        }

    def line_residual(self, line: str, p_j: float, p_max: float, p_min: float) -> float:
        """Signed distance of (P_max, P_min) from one of the boundary lines."""
        residuals = {
            "l1": lambda: p_min - self.l1(p_j, p_max),
            "l2": lambda: (p_max - p_min) - p_j * self.p_a / self.epsilon,
            "l3": lambda: (p_min + p_max) - 2.0 * self.p_m / p_j,
            "diagonal": lambda: p_max - p_min,
            "axis": lambda: p_min,
            "pmax_floor": lambda: p_max - self.p_a / self.epsilon,
        }
        return residuals[line]()


def max_jamming_probability(p_a: float, epsilon: float, p_m: float) -> float:
    """Largest p_j for which some (P_min, P_max) meets both constraints."""
    if p_a <= 2.0 * epsilon * p_m:
        return 1.0
    p_ju = 1.0 - math.sqrt(max(0.0, 1.0 - 2.0 * epsilon * p_m / p_a))
    return min(1.0, max(p_ju, 1.0 - epsilon))


def jammer_feasible_region(
    p_a: float, rate: float, epsilon: float, p_m: float, sigma_b2: float
) -> FeasibleRegion | Infeasible:
    """Feasible jammer designs for fixed Alice power and rate.

    Returns
    -------
    FeasibleRegion | Infeasible
        Infeasible names ``power`` when ``p_a > 2 eps p_m / (1 - eps^2)``
        and ``rate`` when ``rate > C_f``.
    """
    validate_epsilon(epsilon)
    _require_positive(p_a=p_a, p_m=p_m, sigma_b2=sigma_b2)
    if not (math.isfinite(rate) and rate >= 0):
        raise InvalidParameterError("rate>=0", f"rate={rate!r}")

    power_cap = 2.0 * epsilon / (1.0 - epsilon**2) * p_m
    c_f = math.log2(1.0 + p_a / sigma_b2)

    failed = []
    if not at_most(p_a, power_cap):
        failed.append("power")
    if not at_most(rate, c_f):
        failed.append("rate")
    if failed:
        details = f"p_a={p_a!r} vs cap {power_cap!r}; rate={rate!r} vs C_f={c_f!r}"
        logger.debug(f"Jammer region infeasible ({', '.join(failed)}): {details}")
        return Infeasible(DesignView.JAMMER, tuple(failed), details)

    p_ju = max_jamming_probability(p_a, epsilon, p_m)
    return FeasibleRegion(
        p_a=p_a,
        rate=rate,
        epsilon=epsilon,
        p_m=p_m,
        sigma_b2=sigma_b2,
        pj_range=Interval.closed(1.0 - epsilon, max(1.0 - epsilon, p_ju)),
    )


def alice_feasible_region(
    p_j: float, p_min: float, p_max: float, epsilon: float, p_m: float, sigma_b2: float
) -> AliceBounds | Infeasible:
    """Alice's power and rate caps for a fixed jammer design.

    Returns
    -------
    AliceBounds | Infeasible
        Infeasible names ``p_j>=1-eps``, ``p_min>0`` (required when
        ``p_j = 1 - eps``) and/or ``average power``.
    """
    validate_epsilon(epsilon)
    _require_positive(p_m=p_m, sigma_b2=sigma_b2)
    validate(
        SystemParams(p_a=1.0, p_min=p_min, p_max=p_max, p_j=p_j, p_m=p_m, sigma_b2=sigma_b2),
        check_epsilon=False,
    )

    failed = []
    if close(p_j, 1.0 - epsilon):
        if not p_min > 0:
            failed.append("p_min>0")
    elif p_j < 1.0 - epsilon:
        failed.append("p_j>=1-eps")
    if p_j > 0 and not (p_min < p_m / p_j and at_most(p_max, 2.0 * p_m / p_j - p_min)):
        failed.append("average power")
    if failed:
        return Infeasible(
            DesignView.ALICE,
            tuple(failed),
            f"p_j={p_j!r}, p_min={p_min!r}, p_max={p_max!r}, p_m={p_m!r}",
        )

    p_au = max_covert_alice_power(p_j, p_min, p_max, epsilon)
    return AliceBounds(p_au=p_au, c_f=math.log2(1.0 + p_au / sigma_b2))
