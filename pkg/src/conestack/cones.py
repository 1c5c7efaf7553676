"""Tangent-cone geometry: axis intercepts, slant heights, sector angles.

Revolving the tangent segment between the tangency point (a, f(a)) and the
tangent line's axis intercept produces a cone with base radius f(a). Cutting
that cone along a lateral line and unrolling it gives a circular sector whose
radius is the slant height and whose central angle satisfies

    angle / 360 = base_radius / slant

because the sector arc must equal the base circumference.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from conestack.curve import Curve


class ZeroSlope(ValueError):
    """The tangent line is horizontal, so it never meets the axis."""

    def __init__(self, a: float):
        super().__init__(f"df({a:.12g}) = 0; tangent line has no axis intercept")
        self.a = a


@dataclass(frozen=True)
class ConeSpec:
    """One tangent cone of the stack, with its unrolled-sector angle."""

    tangent_x: float
    base_radius: float
    apex_x: float
    slant: float
    sector_angle_deg: float
    index: int


def tangent_x_intercept(curve: Curve, a: float) -> float:
    """Where the tangent line at (a, f(a)) meets the axis: a - f(a)/df(a)."""
    d = curve.df(a)
    if d == 0.0:
        raise ZeroSlope(a)
    return a - curve.f(a) / d


def cone_at(curve: Curve, a: float, index: int = 1) -> ConeSpec:
    """Build the tangent cone at abscissa a and unroll it into a sector."""
    base_radius = curve.f(a)
    apex_x = tangent_x_intercept(curve, a)
    slant = math.hypot(apex_x - a, base_radius)
    return ConeSpec(
        tangent_x=a,
        base_radius=base_radius,
        apex_x=apex_x,
        slant=slant,
        sector_angle_deg=360.0 * base_radius / slant,
        index=index,
    )
