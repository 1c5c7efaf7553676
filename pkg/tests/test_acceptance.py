"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with `pytest tests/test_acceptance.py -v -s` to see the lines live.
"""
from __future__ import annotations

import contextlib
import math
import subprocess
import sys
import time

import oracles
import svgparse
from conestack import RunConfig, arc_length, cone_at, plan_bands, reciprocal
from conestack.numerics import DEFAULT_QUADRATURE, DEFAULT_ROOT, solve_increasing
from conestack.pipeline import run as run_pipeline
from conestack.report import lateral_area_of_revolution, volume_of_revolution

TWO_PI = 2.0 * math.pi


@contextlib.contextmanager
def criterion(number: int, name: str):
    try:
        yield
    except BaseException:
        print(f"ACCEPTANCE {number} {name}: FAIL")
        raise
    print(f"ACCEPTANCE {number} {name}: PASS")


def test_criterion_1_paper_formula_equivalence():
    with criterion(1, "closed-form equivalence of the general cone pipeline"):
        curve = reciprocal()
        started = time.perf_counter()
        n = 1000
        ratio = 50.0 / 0.5
        for i in range(n):
            a = 0.5 * ratio ** (i / (n - 1))
            cone = cone_at(curve, a)
            assert abs(cone.apex_x - 2.0 * a) <= 1e-12 * abs(2.0 * a)
            want = 360.0 / math.sqrt(a**4 + 1.0)
            assert abs(cone.sector_angle_deg - want) <= 1e-9 * want
        assert time.perf_counter() - started < 1.0


def test_criterion_2_seventeen_solve_reproduction():
    with criterion(2, "seventeen equal-arc solves vs fixed-grid oracle"):
        started = time.perf_counter()
        plan = plan_bands(reciprocal(), 0.5, 0.25, 18)
        assert plan.tangent_points[0] == 0.5
        assert len(plan.tangent_points) == 18
        pts = plan.tangent_points
        assert all(b > a for a, b in zip(pts, pts[1:]))
        for i, a in enumerate(pts):
            oracle = oracles.reciprocal_arc_length(0.5, a, panels=1_000_000)
            assert abs(oracle - 0.25 * i) <= 1e-8
        assert time.perf_counter() - started < 10.0


def test_criterion_3_paradox_at_desk_scale():
    with criterion(3, "finite volume, unbounded area on truncations"):
        started = time.perf_counter()
        curve = reciprocal()
        areas = []
        for T in (10.0, 100.0, 1000.0):
            volume = volume_of_revolution(curve, 0.5, T)
            assert abs(volume - math.pi * (2.0 - 1.0 / T)) <= 1e-8
            assert volume < TWO_PI
            area = lateral_area_of_revolution(curve, 0.5, T)
            assert area > TWO_PI * math.log(2.0 * T) - 1e-8
            areas.append(area)
        for smaller, larger in zip(areas, areas[1:]):
            assert larger - smaller > TWO_PI * math.log(10.0) - 1e-6
        assert time.perf_counter() - started < 5.0


def test_criterion_4_unrolling_isometry(default_plan):
    with criterion(4, "sector arc equals base circumference for every cone"):
        for cone in default_plan.cones:
            sector_arc = math.radians(cone.sector_angle_deg) * cone.slant
            base = TWO_PI * cone.base_radius
            assert abs(sector_arc - base) <= 1e-9 * base


def test_criterion_5_numerics_property_suite(default_plan):
    with criterion(5, "numerics properties at quantified tolerances"):
        curve = reciprocal()
        for x0, m, x1 in [(0.5, 0.9, 1.7), (0.5, 3.0, 20.0), (1.2, 1.2, 2.4)]:
            whole = arc_length(curve, x0, x1)
            assert abs(arc_length(curve, x0, m) + arc_length(curve, m, x1) - whole) <= (
                10.0 * DEFAULT_QUADRATURE.abs_tol
            )
            assert whole >= (x1 - x0) - 1e-10
        h = lambda a: arc_length(curve, 0.5, a)
        for target in (0.25, 1.0, 3.3):
            assert abs(h(solve_increasing(h, target, 0.5)) - target) <= DEFAULT_ROOT.f_tol
        fine = plan_bands(curve, 0.5, 0.125, 36)
        for i, coarse_a in enumerate(default_plan.tangent_points):
            assert abs(fine.tangent_points[2 * i] - coarse_a) <= 1e-8


def test_criterion_6_svg_round_trip(default_result):
    with criterion(6, "SVG round-trip, coordinate bounds, determinism"):
        assert default_result.page_layout is not None
        docs = [v for k, v in default_result.artifacts.items() if k.endswith(".svg")]
        assert len(docs) == len(default_result.page_layout.pages)
        matched = 0
        for page, doc in zip(default_result.page_layout.pages, docs):
            width, height = svgparse.viewbox(doc)
            for x, y in svgparse.path_coordinates(doc):
                assert 0.0 <= x <= width
                assert 0.0 <= y <= height
            sectors = svgparse.sector_paths(doc)
            assert len(sectors) == len(page.placements)
            for placed, sector in zip(page.placements, sectors):
                radius, angle = svgparse.recover_radius_angle(sector)
                tpl = placed.template
                assert abs(radius - tpl.radius_phys) <= 1e-6 * tpl.radius_phys
                assert abs(angle - tpl.angle_deg) <= 1e-6 * tpl.angle_deg
                matched += 1
        assert matched == 18
        rerun = run_pipeline(RunConfig())
        assert rerun.artifacts == default_result.artifacts


def test_criterion_7_cli_end_to_end(tmp_path):
    with criterion(7, "default CLI run: exit 0, full tree, byte-identical reruns"):
        started = time.perf_counter()
        trees = []
        for name in ("first", "second"):
            outdir = tmp_path / name
            proc = subprocess.run(
                [sys.executable, "-m", "conestack", "--out", str(outdir)],
                capture_output=True,
                text=True,
                cwd=tmp_path,
            )
            assert proc.returncode == 0, proc.stderr
            assert proc.stderr == ""
            files = sorted(p.name for p in outdir.iterdir())
            assert "bands.csv" in files
            assert "paradox.csv" in files
            assert "notes.txt" in files
            assert sum(1 for f in files if f.endswith(".svg")) >= 1
            trees.append({f: (outdir / f).read_bytes() for f in files})
        assert trees[0] == trees[1]
        assert time.perf_counter() - started < 15.0
