# src/core/throughput.py
"""
Bob's channel capacities, outage probability and covert throughput.

Bob's capacity depends on the jamming power drawn in the slot, so a
fixed rate R is lost with probability lambda and the covert throughput
is R (1 - lambda).
"""

# imports built-in modules
import math

# imports local modules
from src.models import (
    Capacities,
    RateChoice,
    RateEndpoint,
    SystemParams,
    ThroughputProfile,
    validate,
)


def capacity(p_a: float, interference: float) -> float:
    """log2(1 + p_a / interference)."""
    return math.log2(1.0 + p_a / interference)


def effective_power(p_a: float, rate: float, sigma_b2: float) -> float:
    """P_r = p_a / (2^R - 1) - sigma_b2; +inf at R = 0.

    A slot is in outage exactly when its jamming power exceeds P_r.
    """
    if rate == 0:
        return math.inf
    return p_a / math.expm1(rate * math.log(2.0)) - sigma_b2


def capacities(params: SystemParams) -> Capacities:
    """All five reference capacities and P_r for ``params``.

    C_n, C_j and C_f are the capacities under maximum, minimum and no
    jamming. C_eps and C_a are the capacities under the canonical
    jammer-side design, at P_max = P_a / eps and at P_min = P_a.
    """
    validate(params, check_epsilon=False)
    p_a, s2, eps = params.p_a, params.sigma_b2, params.epsilon
    return Capacities(
        c_n=capacity(p_a, s2 + params.p_max),
        c_j=capacity(p_a, s2 + params.p_min),
        c_f=capacity(p_a, s2),
        c_eps=math.log2(1.0 + eps * p_a / (eps * s2 + p_a)),
        c_a=capacity(p_a, s2 + p_a),
        p_r=effective_power(p_a, params.rate, s2),
    )


def _outage(params: SystemParams, caps: Capacities) -> float:
    rate = params.rate
    if rate <= caps.c_n:
        return 0.0
    if rate <= caps.c_j:
        share = (params.p_max - caps.p_r) / params.p_l
        return params.p_j * min(1.0, max(0.0, share))
    if rate <= caps.c_f:
        return params.p_j
    return 1.0


def outage(params: SystemParams) -> float:
    """Probability that Bob's capacity in a slot falls below the rate."""
    return _outage(params, capacities(params))


def covert_throughput(params: SystemParams) -> float:
    """Omega = R (1 - lambda); zero at R = 0."""
    if params.rate == 0:
        validate(params, check_epsilon=False)
        return 0.0
    return params.rate * (1.0 - outage(params))


def profile(params: SystemParams) -> ThroughputProfile:
    caps = capacities(params)
    lam = _outage(params, caps)
    return ThroughputProfile(
        c_n=caps.c_n,
        c_j=caps.c_j,
        c_f=caps.c_f,
        c_eps=caps.c_eps,
        c_a=caps.c_a,
        p_r=caps.p_r,
        outage=lam,
        omega=params.rate * (1.0 - lam),
    )


def endpoint_throughputs(params: SystemParams) -> tuple[float, float]:
    """(Omega_n, Omega_f): throughput at R = C_n and at R = C_f."""
    caps = capacities(params)
    return caps.c_n, params.q_j * caps.c_f


def best_rate(params: SystemParams, ties: RateEndpoint = RateEndpoint.CN) -> RateChoice:
    """Throughput-maximizing rate; the optimum is always C_n or C_f.

    The rate field of ``params`` is ignored. Exact ties go to ``ties``.
    """
    caps = capacities(params)
    omega_n, omega_f = caps.c_n, params.q_j * caps.c_f
    if omega_f > omega_n or (omega_f == omega_n and ties is RateEndpoint.CF):
        return RateChoice(caps.c_f, omega_f, RateEndpoint.CF)
    return RateChoice(caps.c_n, omega_n, RateEndpoint.CN)
