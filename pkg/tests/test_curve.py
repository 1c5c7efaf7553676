from __future__ import annotations

import math

import pytest

from conestack import (
    ConcavityViolation,
    Curve,
    MonotonicityViolation,
    PositivityViolation,
    validate,
)


def test_reciprocal_values(recip):
    assert recip.f(0.5) == 2.0
    assert recip.f(1.0) == 1.0
    assert recip.df(1.0) == -1.0
    assert recip.domain_start == 0.5
    assert math.isinf(recip.domain_end)
    assert recip.name == "reciprocal"


def test_reciprocal_sampling_horizon(recip):
    assert recip.sample_end() == 100.5


def test_contains_is_half_open(linear):
    assert linear.contains(0.0)
    assert linear.contains(1.999)
    assert not linear.contains(2.0)
    assert not linear.contains(-0.1)


def test_empty_domain_rejected():
    with pytest.raises(ValueError):
        Curve(f=lambda x: 1.0, df=lambda x: -1.0, domain_start=2.0, domain_end=2.0)


@pytest.mark.parametrize("samples", [2, 10, 100, 1000])
def test_reciprocal_validates_at_any_sample_count(recip, samples):
    validate(recip, samples)


def test_linear_validates():
    # weakly concave (df constant) is acceptable
    half_open = Curve(f=lambda x: 2.0 - x, df=lambda x: -1.0, domain_start=0.0, domain_end=1.0)
    validate(half_open, 1000)


def test_rising_curve_rejected():
    wavy = Curve(f=lambda x: math.sin(x) + 2.0, df=math.cos, domain_start=0.0, domain_end=3.0)
    with pytest.raises(MonotonicityViolation):
        validate(wavy, 1000)


def test_negative_curve_rejected_at_first_bad_sample():
    dips = Curve(f=lambda x: 1.0 - x, df=lambda x: -1.0, domain_start=0.0, domain_end=3.0)
    with pytest.raises(PositivityViolation) as excinfo:
        validate(dips, 1000)
    assert excinfo.value.x >= 1.0
    assert excinfo.value.x < 1.01


def test_concave_down_rejected():
    dome = Curve(f=lambda x: 3.0 - x * x, df=lambda x: -2.0 * x, domain_start=0.1, domain_end=1.0)
    with pytest.raises(ConcavityViolation):
        validate(dome, 500)


def test_flat_slope_rejected():
    plateau = Curve(f=lambda x: 1.0, df=lambda x: 0.0, domain_start=0.0, domain_end=1.0)
    with pytest.raises(MonotonicityViolation):
        validate(plateau, 10)


def test_validate_rejects_tiny_sample_counts(recip):
    with pytest.raises(ValueError):
        validate(recip, 1)


def test_validate_is_deterministic():
    wavy = Curve(f=lambda x: math.sin(x) + 2.0, df=math.cos, domain_start=0.0, domain_end=3.0)
    with pytest.raises(MonotonicityViolation) as first:
        validate(wavy, 321)
    with pytest.raises(MonotonicityViolation) as second:
        validate(wavy, 321)
    assert first.value.x == second.value.x


@pytest.mark.parametrize("samples", [2, 5, 50, 500])
def test_validate_monotone_in_evidence(recip, linear, samples):
    # the n-point grid is the even-index subset of the 2n-point grid, so
    # success with more evidence must imply success with less
    for curve in (recip, linear):
        validate(curve, 2 * samples)
        validate(curve, samples)


def test_validate_window_override(recip):
    validate(recip, 100, lo=1.0, hi=2.0)
    with pytest.raises(ValueError):
        validate(recip, 100, lo=0.1, hi=2.0)
