"""Deterministic SVG emission for packed template pages.

Every coordinate is baked into the path data in page millimeters (no
transform attributes), numbers are formatted identically everywhere, and
element order is fixed, so identical layouts emit byte-identical documents.
"""
from __future__ import annotations

from pathlib import Path

from conestack.pages import PageLayout
from conestack.templates import (
    SectorTemplate,
    edge_endpoints,
    sector_centroid,
    tab_polygon,
)

STROKE_MM = 0.3
LABEL_FONT_MM = 6.0
RULER_FONT_MM = 3.0


def fmt(value: float) -> str:
    """Stable 9-significant-digit numbers; normalizes -0 and sub-nm noise to 0.

    Nine digits keep path coordinates accurate to ~1e-6 mm on a letter page,
    which a round-trip parse needs to recover the narrowest sector's angle to
    1e-6 relative; six digits would lose that.
    """
    if abs(value) < 1e-9:
        return "0"
    return f"{value:.9g}"


def _shift(point: tuple[float, float], offset: tuple[float, float]) -> tuple[float, float]:
    return (point[0] + offset[0], point[1] + offset[1])


def _sector_path(tpl: SectorTemplate, offset: tuple[float, float]) -> str:
    apex = _shift((0.0, 0.0), offset)
    p1, p2 = (_shift(p, offset) for p in edge_endpoints(tpl))
    r = tpl.radius_phys
    large_arc = 1 if tpl.angle_deg > 180.0 else 0
    return (
        f"M {fmt(apex[0])} {fmt(apex[1])} "
        f"L {fmt(p1[0])} {fmt(p1[1])} "
        f"A {fmt(r)} {fmt(r)} 0 {large_arc} 1 {fmt(p2[0])} {fmt(p2[1])} Z"
    )


def _cut_path(tpl: SectorTemplate, offset: tuple[float, float]) -> str:
    r_cut = tpl.cut_arc_radius_phys
    shrink = r_cut / tpl.radius_phys
    p1, p2 = edge_endpoints(tpl)
    c1 = _shift((p1[0] * shrink, p1[1] * shrink), offset)
    c2 = _shift((p2[0] * shrink, p2[1] * shrink), offset)
    large_arc = 1 if tpl.angle_deg > 180.0 else 0
    return (
        f"M {fmt(c1[0])} {fmt(c1[1])} "
        f"A {fmt(r_cut)} {fmt(r_cut)} 0 {large_arc} 1 {fmt(c2[0])} {fmt(c2[1])}"
    )


def _polygon_path(points: list[tuple[float, float]], offset: tuple[float, float]) -> str:
    moved = [_shift(p, offset) for p in points]
    head = f"M {fmt(moved[0][0])} {fmt(moved[0][1])}"
    rest = " ".join(f"L {fmt(x)} {fmt(y)}" for x, y in moved[1:])
    return f"{head} {rest} Z"


def _ruler(page_w: float, page_h: float, margin: float) -> list[str]:
    y = page_h - margin - 4.0
    x0 = margin
    x1 = margin + 100.0
    path = (
        f"M {fmt(x0)} {fmt(y)} L {fmt(x1)} {fmt(y)} "
        f"M {fmt(x0)} {fmt(y - 2)} L {fmt(x0)} {fmt(y + 2)} "
        f"M {fmt(x1)} {fmt(y - 2)} L {fmt(x1)} {fmt(y + 2)}"
    )
    return [
        f'  <g id="ruler">\n'
        f'    <path d="{path}" fill="none" stroke="black" stroke-width="{fmt(STROKE_MM)}"/>\n'
        f'    <text x="{fmt(x0 + 50.0)}" y="{fmt(y - 1.5)}" font-family="sans-serif" '
        f'font-size="{fmt(RULER_FONT_MM)}" text-anchor="middle" fill="black">100 mm</text>\n'
        f"  </g>\n"
    ]


def emit_svg(layout: PageLayout) -> list[str]:
    """Render one SVG document per page, in page order."""
    spec = layout.page_spec
    docs = []
    for page in layout.pages:
        parts = [
            '<?xml version="1.0" encoding="UTF-8"?>\n',
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{fmt(spec.width_mm)}mm" '
            f'height="{fmt(spec.height_mm)}mm" '
            f'viewBox="0 0 {fmt(spec.width_mm)} {fmt(spec.height_mm)}">\n',
        ]
        for placed in page.placements:
            tpl = placed.template
            offset = placed.translation
            fill = tpl.fill_color if tpl.fill_color is not None else "none"
            parts.append(f'  <g id="sector-{tpl.index}">\n')
            parts.append(
                f'    <path d="{_sector_path(tpl, offset)}" fill="{fill}" '
                f'stroke="black" stroke-width="{fmt(STROKE_MM)}"/>\n'
            )
            tab = tab_polygon(tpl)
            if tab is not None:
                parts.append(
                    f'    <path d="{_polygon_path(tab, offset)}" fill="none" '
                    f'stroke="black" stroke-width="{fmt(STROKE_MM)}"/>\n'
                )
            if tpl.cut_arc_radius_phys is not None:
                parts.append(
                    f'    <path d="{_cut_path(tpl, offset)}" fill="none" stroke="black" '
                    f'stroke-width="{fmt(STROKE_MM)}" stroke-dasharray="4 2"/>\n'
                )
            cx, cy = _shift(sector_centroid(tpl), offset)
            parts.append(
                f'    <text x="{fmt(cx)}" y="{fmt(cy + 2.0)}" font-family="sans-serif" '
                f'font-size="{fmt(LABEL_FONT_MM)}" text-anchor="middle" '
                f'fill="black">{tpl.label}</text>\n'
            )
            parts.append("  </g>\n")
        parts.extend(_ruler(spec.width_mm, spec.height_mm, spec.margin_mm))
        parts.append("</svg>\n")
        docs.append("".join(parts))
    return docs


def write_pages(layout: PageLayout, outdir: Path) -> list[Path]:
    """Write page_<k>.svg files (k starting at 1) under outdir; returns the paths."""
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    written = []
    for k, doc in enumerate(emit_svg(layout), start=1):
        path = outdir / f"page_{k}.svg"
        path.write_bytes(doc.encode("utf-8"))
        written.append(path)
    return written
