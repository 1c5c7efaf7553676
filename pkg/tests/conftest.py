from __future__ import annotations

import pytest

from conestack import Curve, RunConfig, plan_bands, reciprocal
from conestack.pipeline import run as run_pipeline


@pytest.fixture(scope="session")
def recip() -> Curve:
    return reciprocal()


@pytest.fixture(scope="session")
def linear() -> Curve:
    """Straight generator f = 2 - x, kept positive by stopping the domain at 2."""
    return Curve(
        f=lambda x: 2.0 - x,
        df=lambda x: -1.0,
        domain_start=0.0,
        domain_end=2.0,
        name="linear",
    )


@pytest.fixture(scope="session")
def default_plan(recip):
    """The reproduction target: start cone at 0.5 plus seventeen solved cones."""
    return plan_bands(recip, 0.5, 0.25, 18)


@pytest.fixture(scope="session")
def default_result():
    """Full default pipeline run (pages, CSVs, notes) shared across tests."""
    return run_pipeline(RunConfig())
