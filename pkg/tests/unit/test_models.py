import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.exceptions import InvalidParameterError
from src.models import (
    DesignSolution,
    DesignView,
    Interval,
    IntervalSet,
    MixedDistribution,
    SystemParams,
    validate,
)

finite = st.floats(min_value=-1e3, max_value=1e3, allow_nan=False)


def test_validate_accepts_valid_params():
    """Test that a fully valid tuple is returned unchanged."""
    params = SystemParams(p_a=1.0, p_min=2.0, p_max=5.0, p_j=0.8, epsilon=0.1)
    assert validate(params) is params


def test_validate_rejects_degenerate_support():
    """Test that p_max == p_min names the support invariant."""
    params = SystemParams(p_a=1.0, p_min=5.0, p_max=5.0, p_j=0.8)
    with pytest.raises(InvalidParameterError) as excinfo:
        validate(params)
    assert excinfo.value.invariant == "p_max>p_min"


def test_validate_rejects_epsilon_half():
    """Test that epsilon = 1/2 is outside the covertness range."""
    params = SystemParams(p_a=1.0, p_min=2.0, p_max=5.0, p_j=0.8, epsilon=0.5)
    with pytest.raises(InvalidParameterError) as excinfo:
        validate(params)
    assert excinfo.value.invariant == "epsilon range"
    # Detection-only callers skip the epsilon check
    assert validate(params, check_epsilon=False) is params


@pytest.mark.parametrize(
    "changes, invariant",
    [
        ({"p_a": 0.0}, "p_a>0"),
        ({"p_min": -1.0}, "p_min>=0"),
        ({"p_j": 1.5}, "p_j in [0,1]"),
        ({"sigma_w2": 0.0}, "sigma_w2>0"),
        ({"rate": -0.1}, "rate>=0"),
        ({"p_max": math.inf}, "finite"),
    ],
)
def test_validate_names_violated_invariant(changes, invariant):
    """Test that each broken invariant is reported by name."""
    params = SystemParams(p_a=1.0, p_min=2.0, p_max=5.0, p_j=0.8).replace(**changes)
    with pytest.raises(InvalidParameterError) as excinfo:
        validate(params)
    assert excinfo.value.invariant == invariant
    assert invariant in str(excinfo.value)


def test_derived_quantities():
    """Test P_L and q_j."""
    params = SystemParams(p_a=1.0, p_min=2.0, p_max=5.0, p_j=0.75)
    assert params.p_l == 3.0
    assert params.q_j == 0.25


def test_interval_point_and_openness():
    """Test containment at closed and open endpoints."""
    point = Interval.point(3.0)
    assert point.is_point and point.contains(3.0) and not point.contains(3.0 + 1e-12)

    half_open = Interval(1.0, 2.0, lo_open=True)
    assert not half_open.contains(1.0)
    assert half_open.contains(2.0)
    assert half_open.representative() == 2.0
    assert str(half_open) == "(1.0, 2.0]"


def test_interval_rejects_invalid_bounds():
    """Test reversed and empty open intervals."""
    with pytest.raises(InvalidParameterError):
        Interval(2.0, 1.0)
    with pytest.raises(InvalidParameterError):
        Interval(1.0, 1.0, hi_open=True)


@given(
    lo=finite,
    width=st.one_of(st.just(0.0), st.floats(min_value=1e-3, max_value=1e3)),
    lo_open=st.booleans(),
    hi_open=st.booleans(),
)
def test_interval_midpoint_and_samples_are_members(lo, width, lo_open, hi_open):
    """Test that midpoint and samples respect the openness flags."""
    hi = lo + width
    if hi == lo:
        lo_open = hi_open = False
    interval = Interval(lo, hi, lo_open, hi_open)
    assert interval.contains(interval.midpoint())
    assert interval.contains(interval.representative())
    assert all(interval.contains(x) for x in interval.sample(10))


def test_interval_set_merges_touching_pieces():
    """Test union of overlapping and touching intervals."""
    merged = IntervalSet.of(Interval(1.0, 2.0, hi_open=True), Interval(2.0, 3.0))
    assert merged.is_single
    assert merged.pieces[0] == Interval(1.0, 3.0)

    overlapping = IntervalSet.of(Interval(0.0, 2.0), Interval.point(1.0))
    assert overlapping.pieces == (Interval(0.0, 2.0),)


def test_interval_set_keeps_disjoint_pieces():
    """Test that a gap, even a single excluded point, keeps two pieces."""
    split = IntervalSet.of(Interval(2.0, 3.0, lo_open=True), Interval(0.0, 2.0, hi_open=True))
    assert len(split) == 2
    assert split.lo == 0.0 and split.hi == 3.0
    assert not split.contains(2.0)
    assert split.contains(1.0) and split.contains(3.0)
    assert all(split.contains(x) for x in split.sample(10))


def test_mixed_distribution_from_jammer():
    """Test atom and segment of the H0 law for a sample jammer."""
    law = MixedDistribution.from_jammer(1.0, 0.8, 2.0, 5.0)
    assert law.atom_location == 1.0
    assert law.atom_mass == pytest.approx(0.2)
    assert (law.segment_lo, law.segment_hi) == (3.0, 6.0)
    assert law.segment_mass == pytest.approx(0.8)
    assert law.density == pytest.approx(0.8 / 3.0)


@given(
    p_j=st.floats(min_value=0.0, max_value=1.0),
    p_min=st.floats(min_value=0.0, max_value=10.0),
    spread=st.floats(min_value=1e-3, max_value=10.0),
)
def test_mixed_distribution_total_mass_is_one(p_j, p_min, spread):
    """Test that atom plus segment carry probability one."""
    law = MixedDistribution.from_jammer(1.0, p_j, p_min, p_min + spread)
    assert abs(law.atom_mass + law.segment_mass - 1.0) <= 1e-12
    assert law.mass_in(-math.inf, math.inf) == pytest.approx(1.0, abs=1e-12)


@settings(max_examples=50)
@given(
    p_j=st.floats(min_value=0.0, max_value=1.0),
    upper=st.floats(min_value=-5.0, max_value=20.0),
    width=st.floats(min_value=0.01, max_value=10.0),
)
def test_trailing_window_matches_mass_in(p_j, upper, width):
    """Test the threshold-window form against the generic window mass."""
    law = MixedDistribution.from_jammer(1.0, p_j, 2.0, 5.0)
    # Skip thresholds whose window edge lands on the atom after rounding
    if abs(upper - width - 1.0) > 1e-9:
        assert law.trailing_window_mass(upper, width) == pytest.approx(
            law.mass_in(upper - width, upper), abs=1e-12
        )


def test_design_solution_requires_full_point():
    """Test that a design point must name every design variable."""
    with pytest.raises(InvalidParameterError):
        DesignSolution(
            view=DesignView.GLOBAL,
            assignments={},
            point={"p_a": 1.0},
            omega_star=0.0,
            case_label="x",
        )


def test_design_solution_to_params():
    """Test conversion of the representative to SystemParams."""
    point = {"p_a": 1.0, "rate": 0.5, "p_j": 0.8, "p_min": 1.0, "p_max": 5.0}
    solution = DesignSolution(
        view=DesignView.JAMMER,
        assignments=point,
        point=point,
        omega_star=0.1,
        case_label="x",
    )
    params = solution.to_params(epsilon=0.2, p_m=3.0, sigma_b2=1.0)
    assert params.p_max == 5.0 and params.rate == 0.5 and params.epsilon == 0.2
    assert solution.representative() == point
