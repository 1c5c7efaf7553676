"""Run configuration shared by the HTTP service and the CLI client.

The defaults reproduce the reference model: the reciprocal curve from
x = 0.5, eighteen cones spaced 0.25 apart along the curve, inch scale
(25.4 mm per curve unit), US Letter pages, colored bands, glue tabs, and a
quarter-unit trim on the last cone.
"""
from __future__ import annotations

import re
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field

from conestack.curve import Curve, reciprocal
from conestack.expressions import ParseError, parse_expression
from conestack.pages import A4, LETTER, PageSpec

_CURVE_PAIR = re.compile(r"^\s*f\s*=\s*(?P<f>[^;]+);\s*df\s*=\s*(?P<df>.+)$")
_PAGE_DIMS = re.compile(r"^\s*(?P<w>\d+(\.\d+)?)\s*[xX]\s*(?P<h>\d+(\.\d+)?)\s*$")


class RunConfig(BaseModel):
    model_config = ConfigDict(extra="forbid")

    curve: str = "reciprocal"
    start_x: float = 0.5
    band_spacing: float = Field(default=0.25, gt=0)
    count: int = Field(default=18, ge=1)
    scale_mm_per_unit: float = Field(default=25.4, gt=0)
    page: str = "letter"
    margin_mm: float = Field(default=12.7, gt=0)
    color_mode: Literal["color", "white"] = "color"
    tabs: bool = True
    overhang: float = Field(default=0.25, gt=0)
    report_only: bool = False


def resolve_curve(spec: str, start_x: float) -> Curve:
    """Build a Curve from a builtin name or an 'f=EXPR; df=EXPR' pair.

    Expression curves take their domain start from start_x and run unbounded
    to the right; validation happens later, over the window a run uses.
    """
    name = spec.strip()
    if name == "reciprocal":
        return reciprocal()
    pair = _CURVE_PAIR.match(spec)
    if pair is None:
        raise ValueError(
            f"unknown curve {spec!r}: expected 'reciprocal' or 'f=EXPR; df=EXPR'"
        )
    try:
        f = parse_expression(pair.group("f"))
        df = parse_expression(pair.group("df"))
    except ParseError as exc:
        raise ValueError(f"bad curve expression: {exc}") from exc
    return Curve(f=f, df=df, domain_start=start_x, name=name)


def resolve_page(spec: str, margin_mm: float) -> PageSpec:
    """Named page size ('letter', 'a4') or explicit 'WxH' in millimeters."""
    name = spec.strip().lower()
    if name == "letter":
        return PageSpec(LETTER.width_mm, LETTER.height_mm, margin_mm)
    if name == "a4":
        return PageSpec(A4.width_mm, A4.height_mm, margin_mm)
    dims = _PAGE_DIMS.match(spec)
    if dims is None:
        raise ValueError(f"unknown page {spec!r}: expected 'letter', 'a4', or 'WxH' in mm")
    return PageSpec(float(dims.group("w")), float(dims.group("h")), margin_mm)
