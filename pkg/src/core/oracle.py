# src/core/oracle.py
"""
Brute-force oracles for the closed-form results.

Nothing here uses the closed forms it checks: thresholds are scanned on
a grid, rates on a grid with the power-indexed outage form, and designs
by refined grid search over the raw constraint masks.
"""

# imports built-in modules
import math
from typing import Callable, Mapping

# imports third-party modules
import numpy as np
from numpy.typing import ArrayLike
from scipy import optimize as sp_optimize

# imports local modules
from src.config import config
from src.core.covertness import average_power_mask, covertness_mask, covertness_ok
from src.core.detection import total_error_at
from src.exceptions import OracleError
from src.models import GridOptimum, SystemParams, validate, validate_epsilon
from src.utils.logger import get_app_logger

# Application logger
logger = get_app_logger()

Evaluator = Callable[[Mapping[str, np.ndarray]], np.ndarray]


def detection_grid_minimum(
    params: SystemParams, points: int | None = None
) -> tuple[float, float]:
    """Smallest total detection error over a dense threshold grid.

    The grid spans ``[sigma_w2 - p_a, sigma_w2 + p_max + p_a]`` and also
    holds every breakpoint of the error curve. Each threshold is evaluated
    as given and one float above, so edges of the atom window are seen
    from both sides.

    Returns
    -------
    tuple[float, float]
        (minimum error, threshold attaining it).
    """
    validate(params, check_epsilon=False)
    points = points or config.DETECTION_GRID_POINTS
    w, p_a = params.sigma_w2, params.p_a
    breakpoints = np.array(
        [
            w,
            w + p_a,
            w + params.p_min,
            w + params.p_max,
            w + params.p_min + p_a,
            w + params.p_max + p_a,
        ]
    )
    grid = np.concatenate([np.linspace(w - p_a, w + params.p_max + p_a, points), breakpoints])
    gammas = np.concatenate([grid, np.nextafter(grid, np.inf)])
    errors = total_error_at(params, gammas)
    best = int(np.argmin(errors))
    return float(errors[best]), float(gammas[best])


def outage_power_form(
    p_a: ArrayLike,
    rate: ArrayLike,
    p_j: ArrayLike,
    p_min: ArrayLike,
    p_max: ArrayLike,
    sigma_b2: float,
) -> np.ndarray:
    """Outage probability from the jamming-power tail, vectorized.

    A slot fails when its interference exceeds P_r: always when P_r < 0,
    otherwise when the jammer is on with power above P_r.
    """
    p_a, rate, p_j, p_min, p_max = np.broadcast_arrays(
        *(np.asarray(x, dtype=float) for x in (p_a, rate, p_j, p_min, p_max))
    )
    with np.errstate(divide="ignore", invalid="ignore"):
        p_r = np.where(rate > 0, p_a / np.expm1(rate * math.log(2.0)) - sigma_b2, np.inf)
        tail = np.clip((p_max - p_r) / (p_max - p_min), 0.0, 1.0)
    silent_fails = p_r < -config.FEASIBILITY_TOL * sigma_b2
    return np.where(silent_fails, 1.0, p_j * np.nan_to_num(tail, nan=0.0))


def throughput_power_form(
    p_a: ArrayLike,
    rate: ArrayLike,
    p_j: ArrayLike,
    p_min: ArrayLike,
    p_max: ArrayLike,
    sigma_b2: float,
) -> np.ndarray:
    lam = outage_power_form(p_a, rate, p_j, p_min, p_max, sigma_b2)
    return np.where(np.asarray(rate) > 0, np.asarray(rate) * (1.0 - lam), 0.0)


def rate_grid_maximum(params: SystemParams, points: int = 10_000) -> tuple[float, float]:
    """Largest throughput over ``points`` rates evenly spaced on (0, C_f].

    Returns
    -------
    tuple[float, float]
        (rate, throughput) at the best grid rate.
    """
    validate(params, check_epsilon=False)
    c_f = math.log2(1.0 + params.p_a / params.sigma_b2)
    rates = np.linspace(c_f / points, c_f, points)
    omega = throughput_power_form(
        params.p_a, rates, params.p_j, params.p_min, params.p_max, params.sigma_b2
    )
    best = int(np.argmax(omega))
    return float(rates[best]), float(omega[best])


def bisect_max_alice_power(p_j: float, p_min: float, p_max: float, epsilon: float) -> float:
    """Largest P_a accepted by ``covertness_ok``, by bisection on a pass/fail sign."""
    validate_epsilon(epsilon)

    def margin(p_a: float) -> float:
        params = SystemParams(p_a=p_a, p_min=p_min, p_max=p_max, p_j=p_j, epsilon=epsilon)
        return 1.0 if covertness_ok(params) else -1.0

    lo = np.finfo(float).tiny
    hi = p_max + 1.0
    if margin(lo) < 0:
        raise OracleError("No covert Alice power", f"p_j={p_j}, p_min={p_min}, p_max={p_max}")
    if margin(hi) > 0:
        raise OracleError("Covert power unbounded", f"covertness holds at p_a={hi}")
    return float(sp_optimize.bisect(margin, lo, hi, xtol=1e-13, maxiter=200))


def refined_grid_search(
    evaluate: Evaluator,
    bounds: Mapping[str, tuple[float, float]],
    *,
    maximize: bool,
    points: int | None = None,
    refinements: int | None = None,
    zoom: float | None = None,
) -> GridOptimum:
    """Grid search with zoom-in passes around the incumbent.

    Parameters
    ----------
    evaluate : Evaluator
        Maps a dict of same-shaped coordinate arrays to objective values;
        infeasible cells must be NaN.
    bounds : Mapping[str, tuple[float, float]]
        Closed search range per coordinate.
    maximize : bool
        Direction of the search.
    points, refinements, zoom : optional
        Grid density per dimension, number of zoom passes and span
        shrink factor per pass; default to the ``ORACLE_*`` settings.

    Returns
    -------
    GridOptimum
        Best feasible value and point. Ties go to the first index in C
        order, so the result is deterministic.

    Raises
    ------
    OracleError
        If the first pass finds no feasible cell.
    """
    points = points or config.ORACLE_GRID_POINTS
    refinements = config.ORACLE_REFINEMENTS if refinements is None else refinements
    zoom = zoom or config.ORACLE_ZOOM

    names = list(bounds)
    spans = dict(bounds)
    best_value, best_point, evaluations = None, {}, 0

    for pass_index in range(refinements + 1):
        axes = [np.linspace(lo, hi, points) for lo, hi in spans.values()]
        mesh = np.meshgrid(*axes, indexing="ij")
        values = np.asarray(evaluate(dict(zip(names, mesh))), dtype=float)
        evaluations += values.size

        score = values if maximize else -values
        score = np.where(np.isnan(score), -np.inf, score)
        if np.all(np.isneginf(score)):
            if best_value is None:
                raise OracleError("No feasible grid point", f"bounds={dict(bounds)}")
            break

        index = np.unravel_index(int(np.argmax(score)), score.shape)
        value = float(values[index])
        improved = best_value is None or (value > best_value if maximize else value < best_value)
        if improved:
            best_value = value
            best_point = {name: float(axis[i]) for name, axis, i in zip(names, axes, index)}
        logger.debug(f"Grid pass {pass_index}: best={best_value!r} at {best_point}")

        spans = {
            name: _zoom_span(bounds[name], axis, best_point[name], zoom)
            for name, axis in zip(names, axes)
        }

    return GridOptimum(value=best_value, point=best_point, evaluations=evaluations)


def _zoom_span(
    outer: tuple[float, float], axis: np.ndarray, centre: float, zoom: float
) -> tuple[float, float]:
    half = float(axis[-1] - axis[0]) / (2.0 * zoom)
    return max(outer[0], centre - half), min(outer[1], centre + half)


def _feasible_designs(
    grid: Mapping[str, np.ndarray], epsilon: float, p_m: float, **fixed: float
) -> tuple[np.ndarray, ...]:
    """Broadcast grid and fixed coordinates; flag cells meeting both constraints."""
    coords = {**fixed, **grid}
    p_a, p_j, p_min, p_max = np.broadcast_arrays(
        *(np.asarray(coords[k], dtype=float) for k in ("p_a", "p_j", "p_min", "p_max"))
    )
    feasible = (
        (p_max > p_min)
        & (p_a > 0)
        & covertness_mask(p_a, p_min, p_max, p_j, epsilon)
        & average_power_mask(p_j, p_min, p_max, p_m)
    )
    return feasible, p_a, p_j, p_min, p_max


def jammer_grid_search(
    p_a: float, rate: float, epsilon: float, p_m: float, sigma_b2: float
) -> GridOptimum:
    """Lowest outage over (p_j, P_min, P_max) meeting both constraints."""
    validate_epsilon(epsilon)

    def evaluate(grid: Mapping[str, np.ndarray]) -> np.ndarray:
        feasible, p_a_, p_j, p_min, p_max = _feasible_designs(grid, epsilon, p_m, p_a=p_a)
        lam = outage_power_form(p_a_, rate, p_j, p_min, p_max, sigma_b2)
        return np.where(feasible, lam, np.nan)

    bounds = {
        "p_j": (1.0 - epsilon, 1.0),
        "p_min": (0.0, p_m / (1.0 - epsilon)),
        "p_max": (0.0, 2.0 * p_m / (1.0 - epsilon)),
    }
    return refined_grid_search(evaluate, bounds, maximize=False)


def alice_grid_search(
    p_j: float, p_min: float, p_max: float, epsilon: float, p_m: float, sigma_b2: float
) -> GridOptimum:
    """Highest throughput over (P_a, R) keeping the fixed jammer covert."""
    validate_epsilon(epsilon)

    def evaluate(grid: Mapping[str, np.ndarray]) -> np.ndarray:
        feasible, p_a, p_j_, p_min_, p_max_ = _feasible_designs(
            grid, epsilon, p_m, p_j=p_j, p_min=p_min, p_max=p_max
        )
        omega = throughput_power_form(p_a, grid["rate"], p_j_, p_min_, p_max_, sigma_b2)
        return np.where(feasible, omega, np.nan)

    bounds = {
        "p_a": (0.0, p_max),
        "rate": (0.0, math.log2(1.0 + p_max / sigma_b2)),
    }
    return refined_grid_search(evaluate, bounds, maximize=True)


def global_grid_search(epsilon: float, p_m: float, sigma_b2: float) -> GridOptimum:
    """Highest endpoint throughput max(Omega_n, Omega_f) over all four powers."""
    validate_epsilon(epsilon)

    def evaluate(grid: Mapping[str, np.ndarray]) -> np.ndarray:
        feasible, p_a, p_j, p_min, p_max = _feasible_designs(grid, epsilon, p_m)
        with np.errstate(divide="ignore", invalid="ignore"):
            omega_n = np.log2(1.0 + p_a / (sigma_b2 + p_max))
            omega_f = (1.0 - p_j) * np.log2(1.0 + p_a / sigma_b2)
        return np.where(feasible, np.maximum(omega_n, omega_f), np.nan)

    bounds = {
        "p_a": (0.0, 2.0 * epsilon * p_m / (1.0 - epsilon) ** 2),
        "p_j": (1.0 - epsilon, 1.0),
        "p_min": (0.0, p_m / (1.0 - epsilon)),
        "p_max": (0.0, 2.0 * p_m / (1.0 - epsilon)),
    }
    return refined_grid_search(evaluate, bounds, maximize=True)
