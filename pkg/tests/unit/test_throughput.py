import math

import numpy as np
import pytest

from src.core.oracle import rate_grid_maximum
from src.core.throughput import (
    best_rate,
    capacities,
    covert_throughput,
    effective_power,
    endpoint_throughputs,
    outage,
    profile,
)
from src.models import RateEndpoint, SystemParams


def _random_params(rng: np.random.Generator) -> SystemParams:
    p_min = rng.uniform(0.0, 5.0)
    return SystemParams(
        p_a=rng.uniform(0.05, 20.0),
        p_min=p_min,
        p_max=p_min + rng.uniform(0.05, 10.0),
        p_j=rng.uniform(0.0, 1.0),
        sigma_b2=rng.uniform(0.1, 3.0),
    )


def test_capacities_example(outage_params):
    """Test capacities under maximum, minimum and no jamming."""
    caps = capacities(outage_params)
    assert caps.c_n == pytest.approx(math.log2(1.25))
    assert caps.c_j == pytest.approx(math.log2(1.5))
    assert caps.c_f == pytest.approx(1.0)
    assert caps.c_n <= caps.c_j <= caps.c_f


def test_effective_power_example(outage_params):
    """Test P_r at R = 0.5 and its sentinel at R = 0."""
    assert capacities(outage_params).p_r == pytest.approx(math.sqrt(2.0), abs=1e-12)
    assert effective_power(1.0, 0.0, 1.0) == math.inf


def test_capacity_without_jamming_floor(outage_params):
    """Test C_j = C_f when P_min = 0."""
    caps = capacities(outage_params.replace(p_min=0.0))
    assert caps.c_j == caps.c_f


def test_canonical_capacities():
    """Test C_eps = C_n and C_a = C_j at P_min = P_a, P_max = P_a / eps."""
    eps, p_a = 0.2, 1.0
    params = SystemParams(p_a=p_a, p_min=p_a, p_max=p_a / eps, p_j=0.8, epsilon=eps)
    caps = capacities(params)
    assert caps.c_eps == pytest.approx(caps.c_n, rel=1e-12)
    assert caps.c_a == pytest.approx(caps.c_j, rel=1e-12)


def test_outage_middle_branch(outage_params):
    """Test lambda when C_n < R <= C_j."""
    expected = 0.8 * (3.0 - math.sqrt(2.0)) / 2.0
    assert outage(outage_params) == pytest.approx(expected, abs=1e-12)
    assert covert_throughput(outage_params) == pytest.approx(0.5 * (1.0 - expected), abs=1e-12)


def test_outage_outer_branches(outage_params):
    """Test lambda below C_n and above C_f."""
    caps = capacities(outage_params)
    assert outage(outage_params.replace(rate=0.9 * caps.c_n)) == 0.0
    assert outage(outage_params.replace(rate=1.1 * caps.c_f)) == 1.0
    assert outage(outage_params.replace(rate=0.5 * (caps.c_j + caps.c_f))) == pytest.approx(0.8)


def test_throughput_at_endpoints(outage_params):
    """Test Omega_n = C_n and Omega_f = q_j C_f."""
    caps = capacities(outage_params)
    assert covert_throughput(outage_params.replace(rate=caps.c_n)) == pytest.approx(caps.c_n)
    assert covert_throughput(outage_params.replace(rate=caps.c_f)) == pytest.approx(0.2 * caps.c_f)
    assert endpoint_throughputs(outage_params) == pytest.approx((caps.c_n, 0.2 * caps.c_f))


def test_zero_rate_has_zero_throughput(outage_params):
    """Test Omega = 0 at R = 0."""
    assert covert_throughput(outage_params.replace(rate=0.0)) == 0.0


def test_profile_is_consistent(outage_params):
    """Test that the profile agrees with the individual operations."""
    result = profile(outage_params)
    assert result.outage == outage(outage_params)
    assert result.omega == pytest.approx(covert_throughput(outage_params))
    assert 0.0 <= result.outage <= 1.0


def test_best_rate_prefers_no_outage(outage_params):
    """Test C_n wins when q_j C_f is smaller."""
    choice = best_rate(outage_params)
    assert choice.endpoint is RateEndpoint.CN
    assert choice.rate == pytest.approx(math.log2(1.25))
    assert choice.omega == pytest.approx(math.log2(1.25))


def test_best_rate_continuous_jammer(outage_params):
    """Test that p_j = 1 always picks C_n."""
    choice = best_rate(outage_params.replace(p_j=1.0))
    assert choice.endpoint is RateEndpoint.CN


def test_best_rate_tie_direction():
    """Test an exact tie goes to C_n by default and to C_f on request."""
    # C_n = log2(2) = 1 and (1 - p_j) C_f = 0.5 * log2(4) = 1
    params = SystemParams(p_a=3.0, p_min=1.0, p_max=2.0, p_j=0.5)
    assert best_rate(params).endpoint is RateEndpoint.CN
    choice = best_rate(params, ties=RateEndpoint.CF)
    assert choice.endpoint is RateEndpoint.CF
    assert choice.rate == 2.0
    assert choice.omega == 1.0


def test_best_rate_high_power_picks_full_capacity():
    """Test C_f wins when Alice's power dwarfs the jamming power."""
    params = SystemParams(p_a=1000.0, p_min=100.0, p_max=500.0, p_j=0.8)
    choice = best_rate(params)
    assert choice.endpoint is RateEndpoint.CF
    assert choice.omega == pytest.approx(0.2 * math.log2(1001.0))


def test_endpoints_dominate_rate_grid():
    """Test that no rate on a dense grid beats the better endpoint."""
    rng = np.random.default_rng(3)
    for _ in range(200):
        params = _random_params(rng)
        _, grid_omega = rate_grid_maximum(params)
        assert grid_omega <= best_rate(params).omega + 1e-9


def test_throughput_convex_between_min_and_max_capacity():
    """Test chord inequality for Omega on [C_n, C_j]."""
    rng = np.random.default_rng(17)
    for _ in range(200):
        params = _random_params(rng).replace(p_j=rng.uniform(0.05, 1.0))
        caps = capacities(params)
        for _ in range(20):
            r1, r2, r3 = np.sort(rng.uniform(caps.c_n, caps.c_j, 3))
            if not r1 < r2 < r3:
                continue
            omega = [covert_throughput(params.replace(rate=float(r))) for r in (r1, r2, r3)]
            weight = (r2 - r1) / (r3 - r1)
            chord = (1.0 - weight) * omega[0] + weight * omega[2]
            assert omega[1] <= chord + 1e-9


@pytest.mark.parametrize("edge", ["c_n", "c_j"])
def test_throughput_continuous_at_branch_edges(edge):
    """Test left and right limits agree at C_n and C_j."""
    rng = np.random.default_rng(23)
    for _ in range(100):
        params = _random_params(rng)
        r = getattr(capacities(params), edge)
        left = covert_throughput(params.replace(rate=r * (1.0 - 1e-12)))
        right = covert_throughput(params.replace(rate=r * (1.0 + 1e-12)))
        assert left == pytest.approx(right, abs=1e-9)


def test_throughput_left_continuous_at_full_capacity(outage_params):
    """Test Omega(C_f) is the limit from below, then drops to zero above."""
    c_f = capacities(outage_params).c_f
    at_edge = covert_throughput(outage_params.replace(rate=c_f))
    below = covert_throughput(outage_params.replace(rate=c_f * (1.0 - 1e-12)))
    assert at_edge == pytest.approx(below, abs=1e-9)
    assert covert_throughput(outage_params.replace(rate=c_f * (1.0 + 1e-9))) == 0.0


def test_outage_monotone_in_rate_and_probability():
    """Test lambda is non-decreasing in R and in p_j."""
    rng = np.random.default_rng(29)
    for _ in range(100):
        params = _random_params(rng)
        c_f = capacities(params).c_f
        rates = np.linspace(0.0, 1.2 * c_f, 60)
        by_rate = [outage(params.replace(rate=float(r))) for r in rates]
        assert all(a <= b + 1e-12 for a, b in zip(by_rate, by_rate[1:]))

        rate = float(rng.uniform(0.0, c_f))
        probs = np.linspace(0.0, 1.0, 21)
        by_prob = [outage(params.replace(rate=rate, p_j=float(p))) for p in probs]
        assert all(a <= b + 1e-12 for a, b in zip(by_prob, by_prob[1:]))
