"""Fluctuation recursion on the reduced map and its fixed-point constants.

A disturbance ``delta`` of chi about a base value propagates as

    delta' = f(chi + delta) - f(chi)          (exact)
    delta' = f'(chi) * delta                  (linearized)

with ``f'(chi) = 8 chi - 4``.  The linearized map is stable where
``|8 chi - 4| <= 1``, i.e. on [3/8, 5/8].
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

from scipy.optimize import brentq

from ljfixed.errors import ArgumentError
from ljfixed.potential import f_reduced

CHI_PLUS = Fraction(3, 8)
CHI_MINUS = Fraction(5, 8)
CHI_MID = Fraction(1, 2)
U_C_STAR = Fraction(-15, 16)
DEEP_F = Fraction(-17, 16)
QIEE = Fraction(1, 8)

DIVERGENCE_CUTOFF = 0.5
MARGINAL_TOL = 1e-12

Mode = Literal["exact", "linearized"]


def slope(chi):
    """Derivative of the reduced map, ``8 chi - 4``."""
    return 8 * chi - 4


def step_exact(chi: float, delta: float) -> float:
    # algebraically f(chi + delta) - f(chi); this form has no cancellation
    return delta * (8 * chi - 4 + 4 * delta)


def step_linear(chi: float, delta: float) -> float:
    return slope(chi) * delta


@dataclass(frozen=True)
class TrajectoryStep:
    index: int
    delta: float
    f_value: float


@dataclass(frozen=True)
class FluctuationTrajectory:
    mode: Mode
    base_chi: float
    steps: tuple[TrajectoryStep, ...]
    terminated_by: Literal["completed", "diverged"]

    @property
    def deltas(self) -> list[float]:
        return [s.delta for s in self.steps]


def iterate(chi: float, delta0: float, n_steps: int, mode: Mode = "exact") -> FluctuationTrajectory:
    """Apply the recursion ``n_steps`` times starting from ``delta0``.

    Step 0 records the initial disturbance.  Iteration stops early (and
    the trajectory is marked ``diverged``) as soon as a recorded
    ``|delta|`` exceeds ``DIVERGENCE_CUTOFF``.
    """
    if not isinstance(n_steps, int) or n_steps < 1:
        raise ArgumentError(f"n_steps must be an integer >= 1, got {n_steps!r}")
    if mode == "exact":
        step = step_exact
    elif mode == "linearized":
        step = step_linear
    else:
        raise ArgumentError(f"mode must be 'exact' or 'linearized', got {mode!r}")

    delta = delta0
    steps = [TrajectoryStep(0, delta, f_reduced(chi + delta))]
    terminated = "diverged" if abs(delta) > DIVERGENCE_CUTOFF else "completed"
    n = 0
    while terminated == "completed" and n < n_steps:
        n += 1
        delta = step(chi, delta)
        steps.append(TrajectoryStep(n, delta, f_reduced(chi + delta)))
        if abs(delta) > DIVERGENCE_CUTOFF:
            terminated = "diverged"
    return FluctuationTrajectory(mode, chi, tuple(steps), terminated)


@dataclass(frozen=True)
class StabilityReport:
    chi: float
    slope: float
    s: float
    classification: Literal["contracting", "marginal", "expanding"]


def stability_at(chi: float) -> StabilityReport:
    m = slope(chi)
    s = abs(m)
    if abs(s - 1) <= MARGINAL_TOL:
        cls = "marginal"
    elif s < 1:
        cls = "contracting"
    else:
        cls = "expanding"
    return StabilityReport(chi, m, s, cls)


@dataclass(frozen=True)
class BifurcationConstants:
    """Exact rational constants of the fixed point."""

    chi_plus: Fraction
    chi_minus: Fraction
    u_c_star: Fraction
    deep_point: tuple[Fraction, Fraction]
    qiee: Fraction


def bifurcation_constants() -> BifurcationConstants:
    return BifurcationConstants(
        chi_plus=CHI_PLUS,
        chi_minus=CHI_MINUS,
        u_c_star=U_C_STAR,
        deep_point=(CHI_MID, DEEP_F),
        qiee=QIEE,
    )


def shifted_f(chi_s):
    """Reduced map in the frame centred on (1/2, -17/16): ``4 chi'**2 + 1/16``."""
    return f_reduced(chi_s + 0.5) + 17.0 / 16.0


def shifted_slope(chi_s):
    return slope(chi_s + 0.5)


def self_similar_residual(chi_s: float) -> float:
    """``df'/dchi' - f'/chi'``; zero where the shifted map is self-similar."""
    return shifted_slope(chi_s) - shifted_f(chi_s) / chi_s


def self_similar_points(lo: float = 1e-4, hi: float = 0.5) -> tuple[tuple[float, float], tuple[float, float]]:
    """Roots of the self-similar condition, (chi', f') for chi' < 0 then chi' > 0."""
    pos = brentq(self_similar_residual, lo, hi, xtol=1e-16)
    neg = brentq(self_similar_residual, -hi, -lo, xtol=1e-16)
    return (neg, shifted_f(neg)), (pos, shifted_f(pos))


def tangent_line(chi0: float):
    """Return (slope, intercept) of the tangent to the reduced map at ``chi0``."""
    m = slope(chi0)
    return m, f_reduced(chi0) - m * chi0


def tangent_intersection(chi_a: float = 0.375, chi_b: float = 0.625) -> tuple[float, float]:
    """Where the tangents at the two bifurcation points cross."""
    m1, b1 = tangent_line(chi_a)
    m2, b2 = tangent_line(chi_b)
    if m1 == m2:
        raise ArgumentError("tangents are parallel")
    chi = (b2 - b1) / (m1 - m2)
    return chi, m1 * chi + b1
