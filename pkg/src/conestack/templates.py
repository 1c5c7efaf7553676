"""Unrolled sector templates in physical units (millimeters).

Local template frame: apex at the origin, sector bisector along +y (down the
page in SVG user space). The sector spans polar angles
90 - angle/2 .. 90 + angle/2, measured from +x toward +y, so geometry is
fully determined and layout and emission can share it.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from conestack.cones import ConeSpec

# Default glue-tab width and the band coloring palette (8-color cycle).
DEFAULT_TAB_WIDTH_MM = 6.0
PALETTE = (
    "#66c2a5",
    "#fc8d62",
    "#8da0cb",
    "#e78ac3",
    "#a6d854",
    "#ffd92f",
    "#e5c494",
    "#b3b3b3",
)

Point = tuple[float, float]


class OverhangTooLarge(ValueError):
    """The requested trim sits at or beyond the cone apex."""


@dataclass(frozen=True)
class TabSpec:
    """Glue tab attached along one straight edge of the sector."""

    width_phys: float
    edge: str = "second"  # "first" | "second"

    def __post_init__(self):
        if self.width_phys <= 0:
            raise ValueError("tab width must be positive")
        if self.edge not in ("first", "second"):
            raise ValueError(f"edge must be 'first' or 'second', got {self.edge!r}")


@dataclass(frozen=True)
class SectorTemplate:
    """One printable sector: radius and angle in physical units, plus decorations."""

    index: int
    radius_phys: float
    angle_deg: float
    label: str
    tab: TabSpec | None = None
    cut_arc_radius_phys: float | None = None
    fill_color: str | None = None

    def __post_init__(self):
        if self.radius_phys <= 0:
            raise ValueError("radius_phys must be positive")
        if not 0 < self.angle_deg < 360:
            raise ValueError("angle_deg must lie strictly between 0 and 360")
        if self.cut_arc_radius_phys is not None and not (
            0 < self.cut_arc_radius_phys < self.radius_phys
        ):
            raise ValueError("cut arc must lie strictly between apex and rim")


def palette_color(index: int) -> str:
    return PALETTE[(index - 1) % len(PALETTE)]


def make_template(
    cone: ConeSpec,
    scale: float,
    tab: TabSpec | None = None,
    fill_color: str | None = None,
    cut_arc_radius_phys: float | None = None,
) -> SectorTemplate:
    """Scale a cone's unrolled sector to physical units (scale is mm per curve unit)."""
    if scale <= 0:
        raise ValueError("scale must be positive")
    return SectorTemplate(
        index=cone.index,
        radius_phys=cone.slant * scale,
        angle_deg=cone.sector_angle_deg,
        label=str(cone.index),
        tab=tab,
        cut_arc_radius_phys=cut_arc_radius_phys,
        fill_color=fill_color,
    )


def cut_line_for_last(last_cone: ConeSpec, axial_overhang: float, scale: float) -> float:
    """Sector radius (mm, from the apex) where the last cone should be trimmed.

    The model only hugs the surface for `axial_overhang` curve units past the
    last tangent point; by similar triangles along the lateral line, the trim
    sits at slant * (reach - overhang) / reach where reach = apex_x - tangent_x.
    """
    reach = last_cone.apex_x - last_cone.tangent_x
    if axial_overhang <= 0:
        raise ValueError("axial_overhang must be positive")
    if axial_overhang >= reach:
        raise OverhangTooLarge(
            f"overhang {axial_overhang:.6g} reaches past the apex (axial reach {reach:.6g})"
        )
    return scale * last_cone.slant * (reach - axial_overhang) / reach


def _dir(angle_deg: float) -> Point:
    rad = math.radians(angle_deg)
    return (math.cos(rad), math.sin(rad))


def edge_angles(template: SectorTemplate) -> tuple[float, float]:
    """Polar angles of the first and second straight edges in the local frame."""
    half = 0.5 * template.angle_deg
    return (90.0 - half, 90.0 + half)


def edge_endpoints(template: SectorTemplate) -> tuple[Point, Point]:
    """Rim endpoints of the first and second straight edges."""
    a1, a2 = edge_angles(template)
    r = template.radius_phys
    d1, d2 = _dir(a1), _dir(a2)
    return (r * d1[0], r * d1[1]), (r * d2[0], r * d2[1])


def sector_centroid(template: SectorTemplate) -> Point:
    """Area centroid of the sector: (2/3) r sin(h)/h along the bisector, h = angle/2."""
    h = math.radians(template.angle_deg) / 2.0
    d = (2.0 / 3.0) * template.radius_phys * math.sin(h) / h
    return (0.0, d)


def tab_polygon(template: SectorTemplate) -> list[Point] | None:
    """Glue-tab outline (closed), or None. The tab sits outside the sector."""
    if template.tab is None:
        return None
    a1, a2 = edge_angles(template)
    if template.tab.edge == "first":
        u = _dir(a1)
        v = _dir(a1 - 90.0)
    else:
        u = _dir(a2)
        v = _dir(a2 + 90.0)
    r = template.radius_phys
    w = template.tab.width_phys
    bevel = min(w, 0.25 * r)
    return [
        (0.0, 0.0),
        (r * u[0], r * u[1]),
        ((r - bevel) * u[0] + w * v[0], (r - bevel) * u[1] + w * v[1]),
        (bevel * u[0] + w * v[0], bevel * u[1] + w * v[1]),
    ]


def template_bbox(template: SectorTemplate) -> tuple[float, float, float, float]:
    """(min_x, min_y, max_x, max_y) of the sector plus tab in the local frame.

    Arc extremes can only occur at the endpoints or where the arc crosses a
    cardinal direction, so the bound is exact.
    """
    a1, a2 = edge_angles(template)
    r = template.radius_phys
    pts: list[Point] = [(0.0, 0.0)]
    pts.extend(edge_endpoints(template))
    for cardinal in (0.0, 90.0, 180.0):
        if a1 <= cardinal <= a2:
            d = _dir(cardinal)
            pts.append((r * d[0], r * d[1]))
    tab = tab_polygon(template)
    if tab is not None:
        pts.extend(tab)
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    return (min(xs), min(ys), max(xs), max(ys))
