"""Generating curves for the cone-stack construction.

A curve is admissible when it is positive, strictly decreasing, and concave
up. Under those conditions every tangent line crosses the axis to the right
of its tangency point, so the revolved tangent segments nest into a stack of
cones that hugs the surface of revolution.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

# Finite sampling horizon used when the domain is unbounded; template plans
# only ever use a finite prefix of the curve.
DOMAIN_HORIZON = 100.0


class CurveValidationError(ValueError):
    """A sampled point violated one of the admissibility conditions."""

    def __init__(self, x: float, message: str):
        super().__init__(f"{message} at x={x:.12g}")
        self.x = x


class PositivityViolation(CurveValidationError):
    pass


class MonotonicityViolation(CurveValidationError):
    pass


class ConcavityViolation(CurveValidationError):
    pass


@dataclass(frozen=True)
class Curve:
    """A generating curve y = f(x) with analytic derivative, on [domain_start, domain_end)."""

    f: Callable[[float], float]
    df: Callable[[float], float]
    domain_start: float
    domain_end: float = math.inf
    name: str = "curve"

    def __post_init__(self):
        if not self.domain_start < self.domain_end:
            raise ValueError(
                f"domain_start {self.domain_start!r} must be below domain_end {self.domain_end!r}"
            )

    def contains(self, x: float) -> bool:
        return self.domain_start <= x < self.domain_end

    def sample_end(self) -> float:
        """Right end for whole-domain sampling; finite even when the domain is not."""
        return min(self.domain_end, self.domain_start + DOMAIN_HORIZON)


def reciprocal() -> Curve:
    """The classic horn generator y = 1/x on [0.5, inf)."""
    return Curve(
        f=lambda x: 1.0 / x,
        df=lambda x: -1.0 / (x * x),
        domain_start=0.5,
        name="reciprocal",
    )


def validate(curve: Curve, samples: int, lo: float | None = None, hi: float | None = None) -> None:
    """Check positivity, strict decrease, and upward concavity on a sample grid.

    Evaluates f and df at `samples` evenly spaced points over [lo, hi) and
    raises the violation naming the first offending x. Defaults cover the
    whole domain, capped at the horizon when the domain is unbounded. The
    concavity check accepts equality (straight segments degrade nothing in
    the construction), but df must be strictly negative because the tangent
    intercept divides by it.
    """
    if samples < 2:
        raise ValueError("samples must be >= 2")
    if lo is None:
        lo = curve.domain_start
    if hi is None:
        hi = curve.sample_end()
    if not curve.domain_start <= lo < hi <= curve.domain_end:
        raise ValueError(f"sampling window [{lo!r}, {hi!r}) outside curve domain")
    step = (hi - lo) / samples
    prev_df = None
    for i in range(samples):
        x = lo + i * step
        y = curve.f(x)
        if not y > 0.0:
            raise PositivityViolation(x, f"f(x) = {y:.6g} is not positive")
        d = curve.df(x)
        if not d < 0.0:
            raise MonotonicityViolation(x, f"df(x) = {d:.6g} is not negative")
        if prev_df is not None and d < prev_df:
            raise ConcavityViolation(x, f"df fell from {prev_df:.6g} to {d:.6g}")
        prev_df = d
