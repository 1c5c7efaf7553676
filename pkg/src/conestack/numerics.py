"""Adaptive quadrature and bracketed root finding for the band solver.

The quadrature kernel is adaptive Simpson with a Richardson error estimate:
a panel is accepted when |S_fine - S_coarse| <= 15 * tol, and the
extrapolated value S_fine + (S_fine - S_coarse) / 15 is returned, one order
better than plain Simpson. The panel tolerance is halved per subdivision so
the error budget is split proportionally to interval width.

The root finder assumes a monotone increasing objective. It expands the
upper bracket by step doubling, then refines with a bisection step plus an
optional secant step per iteration, keeping a sign-changing bracket at all
times. Bisection alone guarantees convergence; the secant step supplies the
speed on smooth objectives such as arc length.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from conestack.curve import DOMAIN_HORIZON, Curve

_INITIAL_BRACKET_STEP = 0.0625


class MaxDepthExceeded(ArithmeticError):
    """Tolerance was not met before the subdivision depth limit."""


class NonFiniteIntegrand(ArithmeticError):
    """The integrand returned inf or nan."""

    def __init__(self, x: float):
        super().__init__(f"integrand is not finite at x={x:.12g}")
        self.x = x


class BracketNotFound(ArithmeticError):
    """Step doubling reached the horizon without enclosing the target."""


class MaxIterExceeded(ArithmeticError):
    """Root refinement ran out of iterations."""


@dataclass(frozen=True)
class QuadratureSettings:
    abs_tol: float = 1e-10
    rel_tol: float = 1e-10
    max_depth: int = 60

    def __post_init__(self):
        if not (self.abs_tol > 0 and self.rel_tol > 0 and self.max_depth >= 1):
            raise ValueError("tolerances must be positive and max_depth >= 1")


@dataclass(frozen=True)
class RootSettings:
    x_tol: float = 1e-12
    f_tol: float = 1e-10
    max_iter: int = 200

    def __post_init__(self):
        if not (self.x_tol > 0 and self.f_tol > 0 and self.max_iter >= 1):
            raise ValueError("tolerances must be positive and max_iter >= 1")


DEFAULT_QUADRATURE = QuadratureSettings()
DEFAULT_ROOT = RootSettings()


def _sample(g: Callable[[float], float], x: float) -> float:
    try:
        y = g(x)
    except (ArithmeticError, ValueError) as exc:
        # 1/x at 0 raises rather than returning inf; sqrt/log leave their domain
        raise NonFiniteIntegrand(x) from exc
    if not math.isfinite(y):
        raise NonFiniteIntegrand(x)
    return y


def _simpson(fa: float, fm: float, fb: float, width: float) -> float:
    return width / 6.0 * (fa + 4.0 * fm + fb)


def _adaptive(g, a, fa, b, fb, m, fm, whole, tol, depth):
    lm = 0.5 * (a + m)
    rm = 0.5 * (m + b)
    flm = _sample(g, lm)
    frm = _sample(g, rm)
    left = _simpson(fa, flm, fm, m - a)
    right = _simpson(fm, frm, fb, b - m)
    delta = left + right - whole
    if abs(delta) <= 15.0 * tol:
        return left + right + delta / 15.0
    if depth <= 0:
        raise MaxDepthExceeded(
            f"interval [{a:.12g}, {b:.12g}] still above tolerance at max depth"
        )
    half = tol / 2.0
    return _adaptive(g, a, fa, m, fm, lm, flm, left, half, depth - 1) + _adaptive(
        g, m, fm, b, fb, rm, frm, right, half, depth - 1
    )


def integrate(
    g: Callable[[float], float],
    lo: float,
    hi: float,
    settings: QuadratureSettings = DEFAULT_QUADRATURE,
) -> float:
    """Integrate g over [lo, hi] to abs_tol/rel_tol via adaptive Simpson."""
    if lo > hi:
        raise ValueError(f"lo {lo!r} must not exceed hi {hi!r}")
    if lo == hi:
        return 0.0
    fa = _sample(g, lo)
    fb = _sample(g, hi)
    m = 0.5 * (lo + hi)
    fm = _sample(g, m)
    whole = _simpson(fa, fm, fb, hi - lo)
    tol = max(settings.abs_tol, settings.rel_tol * abs(whole))
    return _adaptive(g, lo, fa, hi, fb, m, fm, whole, tol, settings.max_depth)


def arc_length(
    curve: Curve,
    x0: float,
    x1: float,
    settings: QuadratureSettings = DEFAULT_QUADRATURE,
) -> float:
    """Length of the curve between abscissas x0 <= x1: integral of sqrt(1 + df^2)."""
    if not curve.domain_start <= x0 <= x1:
        raise ValueError(f"need domain_start <= x0 <= x1, got x0={x0!r} x1={x1!r}")
    if not x1 < curve.domain_end:
        raise ValueError(f"x1={x1!r} is outside the half-open domain")
    df = curve.df
    return integrate(lambda x: math.sqrt(1.0 + df(x) ** 2), x0, x1, settings)


def solve_increasing(
    h: Callable[[float], float],
    target: float,
    bracket_lo: float,
    settings: RootSettings = DEFAULT_ROOT,
    horizon: float | None = None,
) -> float:
    """Solve h(x) = target for monotone increasing h, searching right of bracket_lo.

    Requires h(bracket_lo) <= target. Returns x with |h(x) - target| <= f_tol
    or with the enclosing bracket narrower than x_tol. The upper bracket is
    found by step doubling, capped at `horizon` (bracket_lo + the domain
    horizon by default).
    """
    if horizon is None:
        horizon = bracket_lo + DOMAIN_HORIZON
    lo = bracket_lo
    glo = h(lo) - target
    if glo > settings.f_tol:
        raise ValueError(f"h(bracket_lo) = target + {glo:.6g} is above the target")
    if abs(glo) <= settings.f_tol:
        return lo

    step = _INITIAL_BRACKET_STEP
    hi = None
    ghi = 0.0
    while hi is None:
        cand = min(lo + step, horizon)
        g = h(cand) - target
        if abs(g) <= settings.f_tol:
            return cand
        if g >= 0.0:
            hi, ghi = cand, g
        elif cand >= horizon:
            raise BracketNotFound(
                f"h stays {-g:.6g} below the target out to the horizon {horizon:.12g}"
            )
        else:
            lo, glo = cand, g
            step *= 2.0

    def _try(x: float) -> float | None:
        """Evaluate one candidate, shrink the bracket, return x when converged."""
        nonlocal lo, glo, hi, ghi
        g = h(x) - target
        if abs(g) <= settings.f_tol:
            return x
        if g < 0.0:
            lo, glo = x, g
        else:
            hi, ghi = x, g
        return None

    for _ in range(settings.max_iter):
        if hi - lo <= settings.x_tol:
            return lo if abs(glo) <= abs(ghi) else hi
        found = _try(0.5 * (lo + hi))
        if found is not None:
            return found
        if ghi > glo:
            secant = lo - glo * (hi - lo) / (ghi - glo)
            if lo < secant < hi:
                found = _try(secant)
                if found is not None:
                    return found
    raise MaxIterExceeded(
        f"bracket [{lo:.12g}, {hi:.12g}] not converged after {settings.max_iter} iterations"
    )
