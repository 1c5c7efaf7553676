"""Equal-arc-length tangent points and the resulting ordered cone stack."""
from __future__ import annotations

import math
from dataclasses import dataclass

from conestack.cones import ConeSpec, cone_at
from conestack.curve import DOMAIN_HORIZON, Curve
from conestack.numerics import (
    DEFAULT_QUADRATURE,
    DEFAULT_ROOT,
    BracketNotFound,
    MaxIterExceeded,
    QuadratureSettings,
    RootSettings,
    arc_length,
    solve_increasing,
)


@dataclass(frozen=True)
class BandPlan:
    """Tangent points spaced band_spacing apart along the curve, plus their cones."""

    curve_name: str
    start_x: float
    band_spacing: float
    count: int
    tangent_points: tuple[float, ...]
    cones: tuple[ConeSpec, ...]


def plan_bands(
    curve: Curve,
    start_x: float,
    band_spacing: float,
    count: int,
    quadrature: QuadratureSettings = DEFAULT_QUADRATURE,
    root: RootSettings = DEFAULT_ROOT,
) -> BandPlan:
    """Place `count` tangent points, consecutive ones band_spacing apart along the curve.

    The first point sits exactly at start_x; point i is solved so the arc
    length from start_x equals i * band_spacing. Each solve brackets from its
    predecessor and targets the remaining increment, so integrand work grows
    linearly with count and arc-length residuals do not accumulate.
    """
    if not curve.contains(start_x):
        raise ValueError(f"start_x {start_x!r} is outside the curve domain")
    if band_spacing <= 0:
        raise ValueError("band_spacing must be positive")
    if count < 1:
        raise ValueError("count must be >= 1")

    horizon = curve.domain_start + DOMAIN_HORIZON
    if math.isfinite(curve.domain_end):
        horizon = min(horizon, math.nextafter(curve.domain_end, curve.domain_start))

    points = [start_x]
    measured = 0.0  # arc length from start_x to the latest point
    for i in range(1, count):
        prev = points[-1]
        increment = i * band_spacing - measured

        def h(x: float, _prev: float = prev) -> float:
            return arc_length(curve, _prev, x, quadrature)

        try:
            nxt = solve_increasing(h, increment, prev, root, horizon=horizon)
        except (BracketNotFound, MaxIterExceeded) as exc:
            raise type(exc)(f"band {i + 1}: {exc}") from exc
        measured += arc_length(curve, prev, nxt, quadrature)
        points.append(nxt)

    cones = tuple(cone_at(curve, a, index=i + 1) for i, a in enumerate(points))
    return BandPlan(
        curve_name=curve.name,
        start_x=start_x,
        band_spacing=band_spacing,
        count=count,
        tangent_points=tuple(points),
        cones=cones,
    )
