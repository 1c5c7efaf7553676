from __future__ import annotations

import math

import pytest

import oracles
from conestack import BracketNotFound, Curve, arc_length, plan_bands


def test_default_plan_shape(default_plan):
    assert default_plan.count == 18
    assert len(default_plan.tangent_points) == 18
    assert len(default_plan.cones) == 18
    assert default_plan.tangent_points[0] == 0.5
    assert default_plan.curve_name == "reciprocal"


def test_tangent_points_strictly_increasing(default_plan):
    pts = default_plan.tangent_points
    assert all(b > a for a, b in zip(pts, pts[1:]))


def test_cone_indices_are_one_based(default_plan):
    assert [c.index for c in default_plan.cones] == list(range(1, 19))
    assert [c.tangent_x for c in default_plan.cones] == list(default_plan.tangent_points)


def test_arc_spacing_against_adaptive_integrator(recip, default_plan):
    for i, a in enumerate(default_plan.tangent_points):
        assert abs(arc_length(recip, 0.5, a) - 0.25 * i) <= 1e-9


def test_arc_spacing_against_fixed_grid_oracle(default_plan):
    # the seventeen solved points, re-verified by an implementation-independent rule
    for i, a in enumerate(default_plan.tangent_points[1:], start=1):
        oracle = oracles.reciprocal_arc_length(0.5, a, panels=200_000)
        assert abs(oracle - 0.25 * i) <= 1e-8


def test_single_band_has_no_solves(recip):
    plan = plan_bands(recip, 0.7, 0.5, 1)
    assert plan.tangent_points == (0.7,)
    assert len(plan.cones) == 1
    assert plan.cones[0].tangent_x == 0.7


def test_straight_line_spacing(linear):
    plan = plan_bands(linear, 0.0, math.sqrt(2.0) / 2.0, 2)
    assert plan.tangent_points[0] == 0.0
    assert plan.tangent_points[1] == pytest.approx(0.5, abs=1e-9)


def test_straight_line_spacing_decimal_flag_value(linear):
    # the 8-digit decimal spacing used in the CLI example
    plan = plan_bands(linear, 0.0, 0.70710678, 2)
    assert plan.tangent_points[1] == pytest.approx(0.5, abs=1e-8)


def test_plan_nesting_under_spacing_halving(recip, default_plan):
    fine = plan_bands(recip, 0.5, 0.125, 36)
    for i, coarse_a in enumerate(default_plan.tangent_points):
        assert abs(fine.tangent_points[2 * i] - coarse_a) <= 1e-8


def test_sector_angles_decrease_along_plan(default_plan):
    angles = [c.sector_angle_deg for c in default_plan.cones]
    assert all(b < a for a, b in zip(angles, angles[1:]))


def test_plan_is_deterministic(recip, default_plan):
    again = plan_bands(recip, 0.5, 0.25, 18)
    assert again.tangent_points == default_plan.tangent_points


def test_failure_names_the_band():
    short = Curve(f=lambda x: 2.0 - x, df=lambda x: -1.0, domain_start=0.0, domain_end=1.0)
    with pytest.raises(BracketNotFound) as excinfo:
        plan_bands(short, 0.0, 2.0, 2)
    assert "band 2" in str(excinfo.value)


def test_plan_input_validation(recip):
    with pytest.raises(ValueError):
        plan_bands(recip, 0.4, 0.25, 3)
    with pytest.raises(ValueError):
        plan_bands(recip, 0.5, 0.0, 3)
    with pytest.raises(ValueError):
        plan_bands(recip, 0.5, 0.25, 0)
