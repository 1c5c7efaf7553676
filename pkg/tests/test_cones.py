from __future__ import annotations

import math

import pytest

from conestack import Curve, ZeroSlope, cone_at, tangent_x_intercept


def _log_spaced(lo: float, hi: float, n: int) -> list[float]:
    ratio = hi / lo
    return [lo * ratio ** (i / (n - 1)) for i in range(n)]


def test_intercept_reciprocal_examples(recip):
    assert tangent_x_intercept(recip, 0.5) == pytest.approx(1.0, rel=1e-12)
    assert tangent_x_intercept(recip, 1.0) == pytest.approx(2.0, rel=1e-12)


def test_intercept_linear_is_the_curve_root(linear):
    # a straight curve is its own tangent line everywhere
    assert tangent_x_intercept(linear, 0.3) == pytest.approx(2.0, rel=1e-12)


def test_zero_slope_rejected():
    plateau = Curve(f=lambda x: 1.0, df=lambda x: 0.0, domain_start=0.0)
    with pytest.raises(ZeroSlope):
        tangent_x_intercept(plateau, 0.5)


def test_cone_at_unit_abscissa(recip):
    cone = cone_at(recip, 1.0, index=1)
    assert cone.base_radius == 1.0
    assert cone.apex_x == pytest.approx(2.0, rel=1e-12)
    assert cone.slant == pytest.approx(math.sqrt(2.0), rel=1e-12)
    assert cone.sector_angle_deg == pytest.approx(254.5584412271571, rel=1e-9)


def test_cone_at_domain_start(recip):
    cone = cone_at(recip, 0.5)
    assert cone.base_radius == 2.0
    assert cone.apex_x == pytest.approx(1.0, rel=1e-12)
    assert cone.slant == pytest.approx(math.sqrt(4.25), rel=1e-12)
    assert cone.sector_angle_deg == pytest.approx(360.0 / math.sqrt(1.0625), rel=1e-9)


def test_cone_at_linear_unit_legs(linear):
    cone = cone_at(linear, 1.0)
    assert cone.base_radius == 1.0
    assert cone.apex_x == pytest.approx(2.0, rel=1e-12)
    assert cone.slant == pytest.approx(math.sqrt(2.0), rel=1e-12)
    assert cone.sector_angle_deg == pytest.approx(254.5584412271571, rel=1e-9)


def test_general_pipeline_reproduces_closed_forms(recip):
    # apex at 2a and sector angle 360/sqrt(a^4+1), without ever using them
    for a in _log_spaced(0.5, 50.0, 200):
        cone = cone_at(recip, a)
        assert abs(cone.apex_x - 2.0 * a) <= 1e-12 * 2.0 * a
        want = 360.0 / math.sqrt(a**4 + 1.0)
        assert abs(cone.sector_angle_deg - want) <= 1e-9 * want


def test_sector_angle_decreasing_in_a(recip):
    grid = _log_spaced(0.5, 20.0, 100)
    angles = [cone_at(recip, a).sector_angle_deg for a in grid]
    assert all(b < a for a, b in zip(angles, angles[1:]))


def test_sector_angle_bounds(recip):
    for a in _log_spaced(0.5, 50.0, 50):
        cone = cone_at(recip, a)
        assert 0.0 < cone.sector_angle_deg < 360.0


def test_unrolling_is_isometric(recip):
    for a in _log_spaced(0.5, 50.0, 100):
        cone = cone_at(recip, a)
        sector_arc = math.radians(cone.sector_angle_deg) * cone.slant
        base_circumference = 2.0 * math.pi * cone.base_radius
        assert abs(sector_arc - base_circumference) <= 1e-9 * base_circumference


def test_tangent_point_sits_on_the_lateral_line(recip):
    for a in (0.5, 1.0, 2.5, 7.0):
        cone = cone_at(recip, a)
        apex_to_point = math.hypot(cone.apex_x - a, recip.f(a))
        assert apex_to_point == pytest.approx(cone.slant, rel=1e-12)
        assert cone.apex_x > a


def test_slant_is_consistent_with_legs(recip):
    cone = cone_at(recip, 3.0)
    legs = (cone.apex_x - cone.tangent_x) ** 2 + cone.base_radius**2
    assert cone.slant**2 == pytest.approx(legs, rel=1e-12)
