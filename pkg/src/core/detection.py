# src/core/detection.py
"""
Warden detection analysis.

Willie thresholds his average received power. In the long-block limit
the statistic follows a mixed law (silent-jammer atom plus uniform
jamming segment) and Alice's signal shifts it right by P_a. This module
gives both laws, the error probabilities at any threshold and the
closed-form minimum total error with every threshold that attains it.
"""

# imports built-in modules
from dataclasses import dataclass

# imports third-party modules
import numpy as np
from numpy.typing import ArrayLike

# imports local modules
from src.models import (
    DetectionCase,
    DetectionResult,
    Hypothesis,
    Interval,
    IntervalSet,
    MixedDistribution,
    SignalRegime,
    SystemParams,
    validate,
)
from src.utils.logger import get_app_logger

# Application logger
logger = get_app_logger()

# Two branch candidates closer than this are reported as a tie
TIE_TOLERANCE = 1e-12


@dataclass(frozen=True)
class HypothesisLaw:
    """Law of Willie's test statistic under one hypothesis."""

    hypothesis: Hypothesis
    law: MixedDistribution


def law_under(params: SystemParams, hypothesis: Hypothesis) -> HypothesisLaw:
    """Return the test-statistic law under H0 or H1.

    Under H0 the atom sits at ``sigma_w2`` with mass ``1 - p_j`` and the
    segment spans ``(sigma_w2 + p_min, sigma_w2 + p_max)``; under H1 both
    move right by ``p_a``.
    """
    validate(params, check_epsilon=False)
    law = MixedDistribution.from_jammer(params.sigma_w2, params.p_j, params.p_min, params.p_max)
    if hypothesis is Hypothesis.H1:
        law = law.shifted(params.p_a)
    return HypothesisLaw(hypothesis, law)


def eta(params: SystemParams, gamma: ArrayLike):
    """H0 probability of the window ``[gamma - p_a, gamma)``.

    Accepts a scalar or an array of thresholds.
    """
    law = law_under(params, Hypothesis.H0).law
    return law.trailing_window_mass(gamma, params.p_a)


def false_alarm(params: SystemParams, gamma: ArrayLike):
    """P_FA: probability of deciding D1 (statistic >= gamma) under H0."""
    law = law_under(params, Hypothesis.H0).law
    return 1.0 - law.mass_below(gamma)


def missed_detection(params: SystemParams, gamma: ArrayLike):
    """P_MD: probability of deciding D0 (statistic < gamma) under H1."""
    return law_under(params, Hypothesis.H1).law.mass_below(gamma)


def total_error_at(params: SystemParams, gamma: ArrayLike):
    """Total detection error P_FA + P_MD at threshold ``gamma``."""
    return 1.0 - eta(params, gamma)


def classify_regime(params: SystemParams) -> SignalRegime:
    """Locate P_a against the jamming support; rows are checked in order."""
    p_a, p_min, p_max, p_l = params.p_a, params.p_min, params.p_max, params.p_l
    if p_a >= p_max:
        return SignalRegime.DOMINANT
    if p_a <= min(p_min, p_l):
        return SignalRegime.BELOW_SUPPORT_NARROW
    if p_min < p_a <= p_l:
        return SignalRegime.INSIDE_SPREAD
    if p_l < p_a <= p_min:
        return SignalRegime.ABOVE_SPREAD
    return SignalRegime.INSIDE_SUPPORT


def min_detection_error(params: SystemParams) -> DetectionResult:
    """Minimum total detection error and the full optimal-threshold set.

    Each regime other than ``DOMINANT`` has two candidate threshold sets;
    the one with the smaller error wins, and at an exact tie the result is
    their union.

    Parameters
    ----------
    params : SystemParams
        Detection reads p_a, p_min, p_max, p_j and sigma_w2 only.

    Returns
    -------
    DetectionResult
        ``xi_star``, ``gamma_star`` and the branch label.
    """
    validate(params, check_epsilon=False)
    regime = classify_regime(params)

    w = params.sigma_w2
    p_a, p_min, p_max, p_l = params.p_a, params.p_min, params.p_max, params.p_l
    p_j, q_j = params.p_j, params.q_j

    if regime is SignalRegime.DOMINANT:
        # Both laws separate completely
        if p_j == 1.0:
            gamma = Interval.closed(w + p_max, w + p_min + p_a)
            case = DetectionCase.DOMINANT_CONTINUOUS
        else:
            gamma = Interval.closed(w + p_max, w + p_a)
            case = DetectionCase.DOMINANT_INTERMITTENT
        logger.debug(f"Detection case {case}: xi*=0")
        return DetectionResult(0.0, IntervalSet.of(gamma), case)

    # Candidate A keeps the silent-jammer atom in the window
    if regime in (SignalRegime.BELOW_SUPPORT_NARROW, SignalRegime.ABOVE_SPREAD):
        xi_a = p_j
        gamma_a = Interval(w, w + p_a, lo_open=True)
    else:
        xi_a = p_j * (p_max - p_a) / p_l
        gamma_a = Interval.point(w + p_a)

    # Candidate B keeps jamming mass only
    if regime in (SignalRegime.BELOW_SUPPORT_NARROW, SignalRegime.INSIDE_SPREAD):
        xi_b = 1.0 - p_j * p_a / p_l
        gamma_b = Interval.closed(w + p_min + p_a, w + p_max)
    else:
        xi_b = q_j
        gamma_b = Interval.closed(w + p_max, w + p_min + p_a)

    case_a, case_b = {
        SignalRegime.BELOW_SUPPORT_NARROW: (DetectionCase.NARROW_ATOM, DetectionCase.NARROW_SEGMENT),
        SignalRegime.INSIDE_SPREAD: (DetectionCase.SPREAD_STRADDLE, DetectionCase.SPREAD_SEGMENT),
        SignalRegime.ABOVE_SPREAD: (DetectionCase.ABOVE_ATOM, DetectionCase.ABOVE_COVER),
        SignalRegime.INSIDE_SUPPORT: (DetectionCase.INSIDE_STRADDLE, DetectionCase.INSIDE_COVER),
    }[regime]

    tie = abs(xi_a - xi_b) <= TIE_TOLERANCE
    if tie:
        gamma_star = IntervalSet.of(gamma_a, gamma_b)
        case = case_a
    elif xi_a < xi_b:
        gamma_star = IntervalSet.of(gamma_a)
        case = case_a
    else:
        gamma_star = IntervalSet.of(gamma_b)
        case = case_b

    xi_star = float(np.clip(min(xi_a, xi_b), 0.0, 1.0))
    logger.debug(f"Detection case {case}: xi_a={xi_a!r}, xi_b={xi_b!r}, tie={tie}")
    return DetectionResult(xi_star, gamma_star, case, tie)
