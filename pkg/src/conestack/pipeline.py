"""End-to-end orchestration shared by the HTTP service and the CLI client.

A run resolves and validates the curve, solves the band plan, builds and
packs the sector templates, and renders every artifact as an in-memory
document. Failures carry the stage they occurred in so clients can report a
single meaningful diagnostic.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from conestack.bands import BandPlan, plan_bands
from conestack.config import RunConfig, resolve_curve, resolve_page
from conestack.curve import validate
from conestack.pages import PageLayout, layout
from conestack.report import (
    TRUNCATION_LADDER,
    ParadoxReport,
    bands_csv,
    notes_text,
    paradox_csv,
    paradox_report,
)
from conestack.svgout import emit_svg
from conestack.templates import (
    DEFAULT_TAB_WIDTH_MM,
    TabSpec,
    cut_line_for_last,
    make_template,
    palette_color,
)

VALIDATION_SAMPLES = 1000


class StageError(RuntimeError):
    """A pipeline failure, tagged with the stage it happened in."""

    def __init__(self, stage: str, message: str):
        super().__init__(f"{stage}: {message}")
        self.stage = stage


@dataclass
class RunResult:
    plan: BandPlan
    page_layout: PageLayout | None
    paradox: list[ParadoxReport]
    artifacts: dict[str, str] = field(default_factory=dict)

    @property
    def page_count(self) -> int:
        return 0 if self.page_layout is None else len(self.page_layout.pages)


def _validated_curve(config: RunConfig):
    """Resolve the curve and check admissibility over the window the plan uses.

    Tangent points never pass start_x + count * spacing because arc length
    grows at least as fast as x, so sampling that window (clipped to the
    domain) is enough even for curves that eventually go negative.
    """
    curve = resolve_curve(config.curve, config.start_x)
    if not curve.contains(config.start_x):
        raise ValueError(f"start_x {config.start_x!r} is outside the curve domain")
    window_end = min(
        config.start_x + config.count * config.band_spacing, curve.sample_end()
    )
    validate(curve, VALIDATION_SAMPLES, lo=config.start_x, hi=window_end)
    return curve


def plan_only(config: RunConfig) -> BandPlan:
    """Validate and solve the band plan without building pages or reports."""
    try:
        curve = _validated_curve(config)
    except ValueError as exc:
        raise StageError("curve validation", str(exc)) from exc
    try:
        return plan_bands(curve, config.start_x, config.band_spacing, config.count)
    except (ArithmeticError, ValueError) as exc:  # expression curves can leave their domain
        raise StageError("solve", str(exc)) from exc


def run(config: RunConfig) -> RunResult:
    """Execute a full run and return every artifact as an in-memory document."""
    try:
        curve = _validated_curve(config)
    except ValueError as exc:
        raise StageError("curve validation", str(exc)) from exc

    try:
        plan = plan_bands(curve, config.start_x, config.band_spacing, config.count)
    except (ArithmeticError, ValueError) as exc:
        raise StageError("solve", str(exc)) from exc

    page_layout = None
    if not config.report_only:
        try:
            page = resolve_page(config.page, config.margin_mm)
            tab = TabSpec(width_phys=DEFAULT_TAB_WIDTH_MM) if config.tabs else None
            templates = []
            for cone in plan.cones:
                cut = None
                if cone.index == plan.count:
                    cut = cut_line_for_last(cone, config.overhang, config.scale_mm_per_unit)
                fill = palette_color(cone.index) if config.color_mode == "color" else None
                templates.append(
                    make_template(
                        cone,
                        config.scale_mm_per_unit,
                        tab=tab,
                        fill_color=fill,
                        cut_arc_radius_phys=cut,
                    )
                )
            page_layout = layout(templates, page)
        except ValueError as exc:
            raise StageError("layout", str(exc)) from exc

    ladder = [T for T in TRUNCATION_LADDER if config.start_x <= T < curve.domain_end]
    try:
        paradox = [paradox_report(curve, config.start_x, T) for T in ladder]
    except (ArithmeticError, ValueError) as exc:
        raise StageError("report", str(exc)) from exc

    result = RunResult(plan=plan, page_layout=page_layout, paradox=paradox)
    if page_layout is not None:
        for k, doc in enumerate(emit_svg(page_layout), start=1):
            result.artifacts[f"page_{k}.svg"] = doc
    result.artifacts["bands.csv"] = bands_csv(plan)
    result.artifacts["paradox.csv"] = paradox_csv(paradox)
    result.artifacts["notes.txt"] = notes_text(plan)
    return result
