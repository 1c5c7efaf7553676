"""Numeric companion report: the band table and truncation-ladder quantities.

The ladder rows make the headline property of the horn checkable at desk
scale: the enclosed volume stays bounded while the lateral area keeps
growing without bound as the truncation point moves out.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path

from conestack.bands import BandPlan
from conestack.curve import Curve
from conestack.numerics import DEFAULT_QUADRATURE, QuadratureSettings, integrate

TRUNCATION_LADDER = (10.0, 100.0, 1000.0)

BANDS_HEADER = "index,a,base_radius,apex_x,slant,sector_angle_deg"
PARADOX_HEADER = "T,volume,volume_closed_form,lateral_area,area_lower_bound"


@dataclass(frozen=True)
class ParadoxReport:
    """Volume and lateral area of the truncated solid of revolution up to x = T."""

    truncation: float
    volume: float
    volume_closed_form: float | None
    lateral_area: float
    area_lower_bound: float


def volume_of_revolution(
    curve: Curve, x0: float, T: float, settings: QuadratureSettings = DEFAULT_QUADRATURE
) -> float:
    """pi times the integral of f(x)^2 over [x0, T]."""
    f = curve.f
    return math.pi * integrate(lambda x: f(x) ** 2, x0, T, settings)


def lateral_area_of_revolution(
    curve: Curve, x0: float, T: float, settings: QuadratureSettings = DEFAULT_QUADRATURE
) -> float:
    """2 pi times the integral of f(x) sqrt(1 + df(x)^2) over [x0, T]."""
    f = curve.f
    df = curve.df
    return 2.0 * math.pi * integrate(
        lambda x: f(x) * math.sqrt(1.0 + df(x) ** 2), x0, T, settings
    )


def paradox_report(
    curve: Curve, x0: float, T: float, settings: QuadratureSettings = DEFAULT_QUADRATURE
) -> ParadoxReport:
    """One ladder row. The area lower bound 2 pi * integral of f holds for any
    curve because sqrt(1 + df^2) >= 1; a closed-form volume is attached only
    for the built-in reciprocal curve."""
    f = curve.f
    closed = math.pi * (1.0 / x0 - 1.0 / T) if curve.name == "reciprocal" else None
    return ParadoxReport(
        truncation=T,
        volume=volume_of_revolution(curve, x0, T, settings),
        volume_closed_form=closed,
        lateral_area=lateral_area_of_revolution(curve, x0, T, settings),
        area_lower_bound=2.0 * math.pi * integrate(f, x0, T, settings),
    )


def _fmt9(value: float | None) -> str:
    return "" if value is None else f"{value:.9g}"


def bands_csv(plan: BandPlan) -> str:
    lines = [BANDS_HEADER]
    for cone in plan.cones:
        lines.append(
            f"{cone.index},{_fmt9(cone.tangent_x)},{_fmt9(cone.base_radius)},"
            f"{_fmt9(cone.apex_x)},{_fmt9(cone.slant)},{_fmt9(cone.sector_angle_deg)}"
        )
    return "\n".join(lines) + "\n"


def paradox_csv(rows: list[ParadoxReport]) -> str:
    lines = [PARADOX_HEADER]
    for row in rows:
        lines.append(
            f"{_fmt9(row.truncation)},{_fmt9(row.volume)},{_fmt9(row.volume_closed_form)},"
            f"{_fmt9(row.lateral_area)},{_fmt9(row.area_lower_bound)}"
        )
    return "\n".join(lines) + "\n"


def notes_text(plan: BandPlan) -> str:
    points = "\n".join(
        f"  {i + 1:2d}  {a!r}" for i, a in enumerate(plan.tangent_points)
    )
    return f"""Slant height convention
-----------------------
Each template's sector radius is the tangent cone's slant height, taken from
the right triangle with legs (apex_x - a) and base_radius:

    slant = sqrt((apex_x - a)^2 + base_radius^2)

For the reciprocal curve y = 1/x this is sqrt(a^2 + 1/a^2). A minus-sign
variant, sqrt(a^2 - 1/a^2), sometimes appears in derivations of this
construction; it is a typo. It is imaginary for a < 1, and it contradicts the
sector angle 360/sqrt(a^4 + 1) that the same derivations reach, which
requires the plus sign so that the sector arc equals the base circumference.
Check at a = 2:

    plus  form: sqrt(4 + 0.25) = {math.sqrt(4.25)!r}
    minus form: sqrt(4 - 0.25) = {math.sqrt(3.75)!r}
    360 / sqrt(2^4 + 1)        = {360.0 / math.sqrt(17.0)!r} degrees
    arc of that sector with the plus-form radius = 2 pi * (1/2), the base
    circumference; the minus form misses it by {2 * math.pi * 0.5 - math.radians(360.0 / math.sqrt(17.0)) * math.sqrt(3.75)!r}.

Tangent points
--------------
Curve {plan.curve_name!r}, start {plan.start_x!r}, band spacing
{plan.band_spacing!r} (arc length along the curve), solved to an arc-length
residual of 1e-10 or a bracket width of 1e-12. Full-precision abscissas:

{points}
"""


def write_report(plan: BandPlan, paradox: list[ParadoxReport], outdir: Path) -> list[Path]:
    """Write bands.csv, paradox.csv, and notes.txt under outdir; returns the paths."""
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    contents = {
        "bands.csv": bands_csv(plan),
        "paradox.csv": paradox_csv(paradox),
        "notes.txt": notes_text(plan),
    }
    written = []
    for name, text in contents.items():
        path = outdir / name
        path.write_bytes(text.encode("utf-8"))
        written.append(path)
    return written
