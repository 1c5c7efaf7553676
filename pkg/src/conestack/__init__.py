"""Papercraft cone-stack templates for surfaces of revolution.

Approximates a positive, decreasing, concave-up generating curve by a stack
of tangent cones spaced evenly along the curve, unrolls each cone into a
printable sector, packs the sectors onto pages as SVG, and reports the
finite-volume / unbounded-area numbers for truncations of the solid.
"""

__version__ = "0.1.0"

from conestack.bands import BandPlan, plan_bands
from conestack.cones import ConeSpec, ZeroSlope, cone_at, tangent_x_intercept
from conestack.config import RunConfig, resolve_curve, resolve_page
from conestack.curve import (
    ConcavityViolation,
    Curve,
    CurveValidationError,
    MonotonicityViolation,
    PositivityViolation,
    reciprocal,
    validate,
)
from conestack.expressions import ParseError, parse_expression
from conestack.numerics import (
    BracketNotFound,
    MaxDepthExceeded,
    MaxIterExceeded,
    NonFiniteIntegrand,
    QuadratureSettings,
    RootSettings,
    arc_length,
    integrate,
    solve_increasing,
)
from conestack.pages import (
    A4,
    LETTER,
    Page,
    PageLayout,
    PageSpec,
    PlacedTemplate,
    TemplateTooLarge,
    layout,
)
from conestack.pipeline import RunResult, StageError, run
from conestack.report import (
    ParadoxReport,
    lateral_area_of_revolution,
    paradox_report,
    volume_of_revolution,
    write_report,
)
from conestack.svgout import emit_svg, write_pages
from conestack.templates import (
    OverhangTooLarge,
    SectorTemplate,
    TabSpec,
    cut_line_for_last,
    make_template,
)

__all__ = [
    "A4",
    "BandPlan",
    "BracketNotFound",
    "ConcavityViolation",
    "ConeSpec",
    "Curve",
    "CurveValidationError",
    "LETTER",
    "MaxDepthExceeded",
    "MaxIterExceeded",
    "MonotonicityViolation",
    "NonFiniteIntegrand",
    "OverhangTooLarge",
    "Page",
    "PageLayout",
    "PageSpec",
    "ParadoxReport",
    "ParseError",
    "PlacedTemplate",
    "PositivityViolation",
    "QuadratureSettings",
    "RootSettings",
    "RunConfig",
    "RunResult",
    "SectorTemplate",
    "StageError",
    "TabSpec",
    "TemplateTooLarge",
    "ZeroSlope",
    "arc_length",
    "cone_at",
    "cut_line_for_last",
    "emit_svg",
    "integrate",
    "lateral_area_of_revolution",
    "layout",
    "make_template",
    "paradox_report",
    "parse_expression",
    "plan_bands",
    "reciprocal",
    "resolve_curve",
    "resolve_page",
    "run",
    "solve_increasing",
    "tangent_x_intercept",
    "validate",
    "volume_of_revolution",
    "write_pages",
    "write_report",
]
