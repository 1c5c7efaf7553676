"""Page packing: first-fit decreasing shelf layout of sector templates.

Templates are sorted by bounding-box height (ties broken by index), then each
is placed on the first shelf with room for it; a template that fits no open
shelf starts a new shelf, and a new page is opened when the current pages are
full. Sectors are large and few, so shelf packing keeps the layout simple and
byte-deterministic; rotation_deg is carried but always 0 for now.
"""
from __future__ import annotations

from dataclasses import dataclass

from conestack.templates import SectorTemplate, template_bbox

# Strip reserved at the bottom of every page for the 100 mm scale ruler, and
# the clearance kept between placed templates.
RULER_STRIP_MM = 10.0
GAP_MM = 5.0


class TemplateTooLarge(ValueError):
    """A template's bounding box exceeds the usable page area."""

    def __init__(self, index: int, required: tuple[float, float], available: tuple[float, float]):
        super().__init__(
            f"template {index} needs {required[0]:.1f} x {required[1]:.1f} mm but the "
            f"page offers {available[0]:.1f} x {available[1]:.1f} mm; reduce the scale"
        )
        self.index = index
        self.required = required
        self.available = available


@dataclass(frozen=True)
class PageSpec:
    width_mm: float
    height_mm: float
    margin_mm: float = 12.7

    def __post_init__(self):
        if self.margin_mm < 0:
            raise ValueError("margin must be nonnegative")
        if self.width_mm <= 2 * self.margin_mm or self.height_mm <= 2 * self.margin_mm:
            raise ValueError("page must be larger than twice its margin")


LETTER = PageSpec(215.9, 279.4)
A4 = PageSpec(210.0, 297.0)


@dataclass(frozen=True)
class PlacedTemplate:
    """A template plus the page position of its local origin (the sector apex)."""

    template: SectorTemplate
    translation: tuple[float, float]
    rotation_deg: float = 0.0


@dataclass(frozen=True)
class Page:
    placements: tuple[PlacedTemplate, ...]


@dataclass(frozen=True)
class PageLayout:
    page_spec: PageSpec
    pages: tuple[Page, ...]


class _OpenPage:
    def __init__(self):
        self.placements: list[PlacedTemplate] = []
        self.shelves: list[list[float]] = []  # [y, height, x_cursor]
        self.y_cursor = 0.0


def layout(templates: list[SectorTemplate], page: PageSpec) -> PageLayout:
    usable_w = page.width_mm - 2 * page.margin_mm
    usable_h = page.height_mm - 2 * page.margin_mm - RULER_STRIP_MM

    boxes = {t.index: template_bbox(t) for t in templates}
    for t in templates:
        x0, y0, x1, y1 = boxes[t.index]
        if x1 - x0 > usable_w or y1 - y0 > usable_h:
            raise TemplateTooLarge(t.index, (x1 - x0, y1 - y0), (usable_w, usable_h))

    def bbox_h(t: SectorTemplate) -> float:
        x0, y0, x1, y1 = boxes[t.index]
        return y1 - y0

    def bbox_w(t: SectorTemplate) -> float:
        x0, y0, x1, y1 = boxes[t.index]
        return x1 - x0

    open_pages: list[_OpenPage] = []
    for t in sorted(templates, key=lambda t: (-bbox_h(t), t.index)):
        w, h = bbox_w(t), bbox_h(t)
        spot = None
        for pg in open_pages:
            for shelf in pg.shelves:
                if h <= shelf[1] and shelf[2] + w <= usable_w:
                    spot = (pg, shelf)
                    break
            if spot is None and pg.y_cursor + h <= usable_h:
                shelf = [pg.y_cursor, h, 0.0]
                pg.shelves.append(shelf)
                pg.y_cursor += h + GAP_MM
                spot = (pg, shelf)
            if spot is not None:
                break
        if spot is None:
            pg = _OpenPage()
            open_pages.append(pg)
            shelf = [0.0, h, 0.0]
            pg.shelves.append(shelf)
            pg.y_cursor = h + GAP_MM
            spot = (pg, shelf)

        pg, shelf = spot
        x0, y0, _, _ = boxes[t.index]
        place_x = page.margin_mm + shelf[2]
        place_y = page.margin_mm + shelf[0]
        shelf[2] += w + GAP_MM
        pg.placements.append(
            PlacedTemplate(template=t, translation=(place_x - x0, place_y - y0))
        )

    return PageLayout(
        page_spec=page,
        pages=tuple(Page(placements=tuple(pg.placements)) for pg in open_pages),
    )
