# src/cli/commands.py
"""
Command handlers.

Each handler turns resolved RunSettings into (columns, records); the
front end renders them. Infeasible designs become InfeasibleDesignError
here, which the front end maps to its exit code.
"""

# imports built-in modules
import math
from concurrent.futures import ThreadPoolExecutor
from typing import Any

# imports third-party modules
import numpy as np

# imports local modules
from src.cli.settings import RunSettings, db_to_linear
from src.config import config
from src.core import detection, optimize, oracle, simulate, throughput
from src.exceptions import CovertJamError, InfeasibleDesignError, MalformedValueError
from src.models import DESIGN_KEYS, DesignSolution, DesignView, Infeasible, Interval
from src.utils.logger import get_app_logger

# Application logger
logger = get_app_logger()

Record = dict[str, Any]
Table = tuple[list[str], list[Record]]

DETECT_COLUMNS = ["xi_star", "gamma_star", "gamma_lo", "gamma_hi", "case_label", "regime", "tie"]
OPTIMIZE_COLUMNS = [
    "view",
    "case_label",
    "omega_star",
    *DESIGN_KEYS,
    "rate_choice",
    "p_j_range",
    "p_min_range",
    "p_max_range",
    "constraints",
]
VERIFY_COLUMNS = ["oracle_omega", "gap"]
SWEEP_COLUMNS = ["axis", "omega_p", "omega_c", "rate", "pa", "pj", "pmin", "pmax", "rate_choice"]
SIMULATE_COLUMNS = ["quantity", "empirical", "stderr", "analytic"]

INFEASIBLE = "infeasible"


def cmd_detect(settings: RunSettings) -> Table:
    """Minimum detection error, optimal thresholds and branch label."""
    params = settings.system_params("p_a", "p_min", "p_max", "p_j")
    result = detection.min_detection_error(params)
    logger.info(f"detect: xi*={result.xi_star!r} ({result.case_label})")
    record = {
        "xi_star": result.xi_star,
        "gamma_star": result.gamma_star,
        "gamma_lo": result.gamma_star.lo,
        "gamma_hi": result.gamma_star.hi,
        "case_label": result.case_label,
        "regime": result.case_label.regime,
        "tie": result.tie,
    }
    return DETECT_COLUMNS, [record]


def _solve(settings: RunSettings, view: DesignView) -> DesignSolution:
    sigma_b2 = settings.sigma_b2
    if view is DesignView.JAMMER:
        p_a, rate, eps, p_m = settings.require("p_a", "rate", "epsilon", "p_m")
        solution = optimize.optimize_jammer(p_a, rate, eps, p_m, sigma_b2)
    elif view is DesignView.ALICE:
        p_j, p_min, p_max, eps, p_m = settings.require("p_j", "p_min", "p_max", "epsilon", "p_m")
        solution = optimize.optimize_alice(p_j, p_min, p_max, eps, p_m, sigma_b2)
    else:
        eps, p_m = settings.require("epsilon", "p_m")
        solution = optimize.optimize_global(eps, p_m, sigma_b2)

    if isinstance(solution, Infeasible):
        raise InfeasibleDesignError(solution.conditions, solution.describe())
    return solution


def _oracle_omega(settings: RunSettings, solution: DesignSolution) -> float:
    """Best throughput the brute-force oracle finds for the same problem."""
    point, sigma_b2 = solution.point, settings.sigma_b2
    eps, p_m = settings.require("epsilon", "p_m")
    if solution.view is DesignView.JAMMER:
        found = oracle.jammer_grid_search(point["p_a"], point["rate"], eps, p_m, sigma_b2)
        return point["rate"] * (1.0 - found.value)
    if solution.view is DesignView.ALICE:
        found = oracle.alice_grid_search(
            point["p_j"], point["p_min"], point["p_max"], eps, p_m, sigma_b2
        )
        return found.value
    return oracle.global_grid_search(eps, p_m, sigma_b2).value


def _range_text(value: float | Interval) -> str:
    return str(value) if isinstance(value, Interval) else str(Interval.point(value))


def cmd_optimize(settings: RunSettings, view: DesignView, verify: bool = False) -> Table:
    """Closed-form design for one view, optionally checked against the grid oracle."""
    solution = _solve(settings, view)
    record: Record = {
        "view": solution.view,
        "case_label": solution.case_label,
        "omega_star": solution.omega_star,
        **solution.representative(),
        "rate_choice": solution.rate_endpoint,
        "p_j_range": _range_text(solution.assignments["p_j"]),
        "p_min_range": _range_text(solution.assignments["p_min"]),
        "p_max_range": _range_text(solution.assignments["p_max"]),
        "constraints": "; ".join(solution.constraints),
    }
    columns = list(OPTIMIZE_COLUMNS)
    logger.info(f"optimize --view {view}: omega*={solution.omega_star!r} ({solution.case_label})")

    if verify:
        found = _oracle_omega(settings, solution)
        scale = max(abs(solution.omega_star), np.finfo(float).tiny)
        record["oracle_omega"] = found
        record["gap"] = (found - solution.omega_star) / scale
        columns += VERIFY_COLUMNS
        logger.info(f"oracle check: grid omega={found!r}, relative gap={record['gap']!r}")

    return columns, [record]


def sweep_axis_values(settings: RunSettings) -> list[float]:
    """Axis points from sweep_start to sweep_stop (inclusive) by sweep_step."""
    start, stop, step = (float(v) for v in settings.require("sweep_start", "sweep_stop", "sweep_step"))
    if not step > 0:
        raise MalformedValueError("sweep_step", repr(step), "must be positive")
    if stop < start:
        raise MalformedValueError("sweep_stop", repr(stop), "must not be below sweep_start")
    count = math.floor((stop - start) / step + 1e-9) + 1
    return [round(start + i * step, 12) for i in range(count)]


def _sweep_cell(axis: str, value: float, settings: RunSettings) -> Record:
    sigma_b2 = settings.sigma_b2
    if axis == "epsilon":
        eps = value
        (p_m,) = settings.require("p_m")
    else:
        (eps,) = settings.require("epsilon")
        p_m = sigma_b2 * db_to_linear(value)

    record: Record = {"axis": value}
    try:
        design = optimize.optimize_global(eps, p_m, sigma_b2)
        omega_c, _ = optimize.continuous_baseline(eps, p_m, sigma_b2)
    except CovertJamError as e:
        logger.warning(f"sweep {axis}={value!r}: {e}")
        record.update({column: math.nan for column in SWEEP_COLUMNS[1:-1]})
        record["rate_choice"] = INFEASIBLE
        return record

    point = design.point
    record.update(
        {
            "omega_p": design.omega_star,
            "omega_c": omega_c,
            "rate": point["rate"],
            "pa": point["p_a"],
            "pj": point["p_j"],
            "pmin": point["p_min"],
            "pmax": point["p_max"],
            "rate_choice": design.rate_endpoint,
        }
    )
    return record


def cmd_sweep(settings: RunSettings, axis: str) -> Table:
    """Global design and continuous baseline along one axis.

    ``epsilon`` sweeps the covertness level at fixed p_m; ``pm_over_sigma``
    sweeps P_m / sigma_b2 in dB at fixed epsilon.
    """
    if axis not in ("epsilon", "pm_over_sigma"):
        raise MalformedValueError("axis", axis, "expected epsilon or pm_over_sigma")
    values = sweep_axis_values(settings)
    logger.info(f"sweep {axis}: {len(values)} points, {config.SWEEP_WORKERS} worker(s)")

    with ThreadPoolExecutor(max_workers=config.SWEEP_WORKERS) as pool:
        records = list(pool.map(lambda v: _sweep_cell(axis, v, settings), values))
    return list(SWEEP_COLUMNS), records


def default_threshold(settings: RunSettings) -> float:
    """Threshold for simulation: ``gamma`` if given, else an interior optimal one.

    Interval pieces are preferred over isolated points, since a point
    threshold sits on the edge of the atom window.
    """
    gamma = settings.get("gamma")
    if gamma is not None:
        return float(gamma)
    result = detection.min_detection_error(settings.system_params("p_a", "p_min", "p_max", "p_j"))
    for piece in result.gamma_star:
        if not piece.is_point:
            return piece.midpoint()
    return result.gamma_star.representative()


def cmd_simulate(settings: RunSettings) -> Table:
    """Empirical detection and outage figures next to their analytic values."""
    params = settings.system_params("p_a", "p_min", "p_max", "p_j")
    cfg = settings.sim_config()
    gamma = default_threshold(settings)

    det = simulate.simulate_detection(params, gamma, cfg)
    out = simulate.simulate_outage(params, cfg)
    lam = throughput.outage(params)

    rows = [
        ("gamma", None, gamma),
        ("pfa", det.empirical_pfa, detection.false_alarm(params, gamma)),
        ("pmd", det.empirical_pmd, detection.missed_detection(params, gamma)),
        ("xi", det.empirical_xi, detection.total_error_at(params, gamma)),
        ("xi_star", None, detection.min_detection_error(params).xi_star),
        ("lambda", out.empirical_lambda, lam),
    ]
    records = [
        {
            "quantity": quantity,
            "empirical": None if estimate is None else estimate.value,
            "stderr": None if estimate is None else estimate.stderr,
            "analytic": float(analytic),
        }
        for quantity, estimate, analytic in rows
    ]
    records.append(
        {
            "quantity": "omega",
            "empirical": out.empirical_omega,
            "stderr": params.rate * out.empirical_lambda.stderr,
            "analytic": params.rate * (1.0 - lam),
        }
    )
    return list(SIMULATE_COLUMNS), records
