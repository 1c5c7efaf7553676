"""HTTP surface: template generation as a stateless service.

POST /plan returns the solved cone table; POST /generate returns the full
artifact set (SVG pages plus CSV/notes reports) as in-memory documents, so
any client can persist them however it likes.
"""
from __future__ import annotations

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel

from conestack import __version__
from conestack.config import RunConfig
from conestack.pipeline import StageError, plan_only, run


class ConeRecord(BaseModel):
    index: int
    a: float
    base_radius: float
    apex_x: float
    slant: float
    sector_angle_deg: float


class PlanResponse(BaseModel):
    curve: str
    start_x: float
    band_spacing: float
    count: int
    cones: list[ConeRecord]


class ArtifactFile(BaseModel):
    filename: str
    content: str


class GenerateResponse(BaseModel):
    cone_count: int
    page_count: int
    artifacts: list[ArtifactFile]


app = FastAPI(title="conestack", version=__version__)


@app.get("/health")
def health() -> dict:
    return {"status": "ok", "version": __version__}


@app.post("/plan", response_model=PlanResponse)
def plan(config: RunConfig) -> PlanResponse:
    try:
        plan = plan_only(config)
    except StageError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc
    return PlanResponse(
        curve=plan.curve_name,
        start_x=plan.start_x,
        band_spacing=plan.band_spacing,
        count=plan.count,
        cones=[
            ConeRecord(
                index=c.index,
                a=c.tangent_x,
                base_radius=c.base_radius,
                apex_x=c.apex_x,
                slant=c.slant,
                sector_angle_deg=c.sector_angle_deg,
            )
            for c in plan.cones
        ],
    )


@app.post("/generate", response_model=GenerateResponse)
def generate(config: RunConfig) -> GenerateResponse:
    try:
        result = run(config)
    except StageError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc
    return GenerateResponse(
        cone_count=result.plan.count,
        page_count=result.page_count,
        artifacts=[
            ArtifactFile(filename=name, content=content)
            for name, content in result.artifacts.items()
        ],
    )
