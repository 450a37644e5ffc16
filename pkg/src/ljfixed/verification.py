"""Self-contained re-derivation of every fixed-point constant.

Each check pairs a computed value with an independent expectation and a
tolerance.  ``run_checks`` is what ``ljfixed verify`` prints.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from scipy.optimize import bisect

from ljfixed.cascade import build, lindemann_ratio, order_count
from ljfixed.potential import PotentialSpec, chi_of, crossings, evaluate, f_reduced
from ljfixed.recursion import (
    CHI_MID,
    CHI_MINUS,
    CHI_PLUS,
    DEEP_F,
    QIEE,
    U_C_STAR,
    iterate,
    self_similar_points,
    self_similar_residual,
    stability_at,
    step_exact,
    step_linear,
    tangent_intersection,
)

# high-precision values of the closed forms (40-digit evaluation, rounded)
LINDEMANN_EXACT = 0.10464892334840566
Q8R_OVER_SIGMA1 = 2.1370679439148104
Q7R_OVER_SIGMA1 = 1.9626530716674680

PAPER_LINDEMANN = 0.1047
PAPER_Q8R = 2.137

SEED = 20070101


@dataclass(frozen=True)
class Check:
    name: str
    expected: float
    computed: float
    error: float
    passed: bool


def _check(name, expected, computed, tol, error=None) -> Check:
    if error is None:
        error = abs(float(computed) - float(expected))
    return Check(name, float(expected), float(computed), float(error), bool(error <= tol))


def _bisect_level(spec: PotentialSpec, u_c: float, lo: float, hi: float) -> float:
    return bisect(lambda q: evaluate(spec, q) - u_c, lo, hi, xtol=1e-14 * spec.sigma, rtol=8.9e-16, maxiter=400)


def run_checks() -> list[Check]:
    rng = random.Random(SEED)
    out: list[Check] = []
    add = out.append

    # 1. fixed point
    add(_check("U_c* at chi=3/8", -0.9375, f_reduced(0.375), 1e-15))
    add(_check("U_c* at chi=5/8", -0.9375, f_reduced(0.625), 1e-15))

    # 2. stability interval on a 1e5 grid
    n = 100_000
    bad = 0
    for k in range(n + 1):
        chi = k / n
        cls = stability_at(chi).classification
        inside = 0.375 < chi < 0.625
        edge = chi in (0.375, 0.625)
        want = "marginal" if edge else ("contracting" if inside else "expanding")
        bad += cls != want
    add(_check("stability flips at 3/8 and 5/8 (misclassified points)", 0, bad, 0))

    # 3. self-similar condition in the shifted frame
    (neg, f_neg), (pos, f_pos) = self_similar_points()
    res = max(abs(self_similar_residual(neg)), abs(self_similar_residual(pos)))
    add(_check("self-similar chi' = +1/8", 0.125, pos, 1e-12))
    add(_check("self-similar chi' = -1/8", -0.125, neg, 1e-12))
    add(_check("self-similar residual", 0.0, res, 1e-12))
    back = max(
        abs(f_reduced(neg + 0.5) + 0.9375), abs(f_reduced(pos + 0.5) + 0.9375),
        abs(f_neg - 17 / 16 + 0.9375), abs(f_pos - 17 / 16 + 0.9375),
    )
    add(_check("self-similar points map to (3/8|5/8, -15/16)", 0.0, back, 1e-12))

    # 4. deep attractive point
    chi_d, f_d = tangent_intersection()
    add(_check("tangent intersection chi", 0.5, chi_d, 1e-12))
    add(_check("tangent intersection f (-17/16)", -1.0625, f_d, 1e-12))
    sym = abs(abs(U_C_STAR + 1) - abs(DEEP_F + 1))
    add(_check("reflection about well bottom |gap| = 1/16", 0, sym, 0))

    # 5. QIEE ledger, exact rationals
    gaps = [-DEEP_F - (-U_C_STAR), CHI_MID - CHI_PLUS, CHI_MINUS - CHI_MID]
    add(_check("QIEE spacings all equal 1/8", 0, max(abs(g - QIEE) for g in gaps), 0))
    add(_check("sum rule chi+ + chi- = 1", 1, CHI_PLUS + CHI_MINUS, 0))
    add(_check("f(chi+ + chi-) = 0", 0, f_reduced(CHI_PLUS + CHI_MINUS), 0))
    add(_check("f(3/8) = f(5/8) = -15/16 (rational)", 0,
               abs(f_reduced(CHI_PLUS) - U_C_STAR) + abs(f_reduced(CHI_MINUS) - U_C_STAR), 0))

    # 6. Lindemann ratio
    d_l = lindemann_ratio()
    add(_check("lindemann (closed form)", LINDEMANN_EXACT, d_l, 1e-15))
    add(_check("lindemann vs paper 0.1047", PAPER_LINDEMANN, d_l, 2e-4))
    levels = build(1.0, 1.0, 8)
    spread = max(abs(lv.lindemann - d_l) for lv in levels[1:])
    add(_check("per-level lindemann spread", 0.0, spread, 1e-12))

    # 7. order count
    wrong = sum(order_count(10 ** rng.uniform(-1, 2)) != 8 for _ in range(100))
    add(_check("M = 8 for 100 random sigma_1 (failures)", 0, wrong, 0))
    add(_check("M", 8, order_count(1.0), 0))
    add(_check("q_8R / sigma_1 vs paper 2.137", PAPER_Q8R, levels[7].q_right, 1e-3))
    add(_check("q_8R / sigma_1", Q8R_OVER_SIGMA1, levels[7].q_right, 1e-12))
    add(_check("q_7R / sigma_1", Q7R_OVER_SIGMA1, levels[6].q_right, 1e-12))
    add(_check("q_7R < 2 sigma_1", 1, levels[6].q_right < 2.0, 0))

    # 8. sharp-angle crossings
    worst = 0.0
    for lo, hi in zip(levels, levels[1:]):
        for s in (lo.spec(1.0), hi.spec(1.0)):
            worst = max(worst, abs(evaluate(s, lo.q_right) + 0.9375) / 0.9375)
    add(_check("sharp angles at -15/16 (max rel residual)", 0.0, worst, 1e-12))
    chis = max(
        max(abs(chi_of(lo.spec(), lo.q_right) - 0.375), abs(chi_of(hi.spec(), hi.q_left) - 0.625))
        for lo, hi in zip(levels, levels[1:])
    )
    add(_check("chi assignments 3/8, 5/8", 0.0, chis, 1e-12))

    # 9. oracle equivalence (bisection)
    unit = PotentialSpec()
    worst = 0.0
    for _ in range(100):
        u = rng.uniform(-0.999, -0.001)
        pair = crossings(unit, u)
        ql = _bisect_level(unit, u, 1e-3, unit.q_min)
        qr = _bisect_level(unit, u, unit.q_min, 1e3)
        worst = max(worst, abs(pair.q_left - ql) / ql, abs(pair.q_right - qr) / qr)
    add(_check("crossings vs bisection (max rel)", 0.0, worst, 1e-10))
    worst = 0.0
    for lv in levels:
        pair = crossings(lv.spec(1.0), -0.9375)
        worst = max(worst, abs(pair.q_left - lv.q_left) / lv.q_left, abs(pair.q_right - lv.q_right) / lv.q_right)
    add(_check("cascade radii vs crossings solver (max rel)", 0.0, worst, 1e-10))

    # 10. recursion identities
    worst = 0.0
    for _ in range(1000):
        chi, d = rng.uniform(0, 1), rng.uniform(-0.1, 0.1)
        worst = max(worst, abs(step_exact(chi, d) - step_linear(chi, d) - 4 * d * d))
    add(_check("exact - linear = 4 delta^2", 0.0, worst, 1e-14))
    flip = iterate(0.375, 0.01, 100, "linearized").deltas
    keep = iterate(0.625, 0.01, 100, "linearized").deltas
    err = max(
        max(abs(d - 0.01 * (-1) ** k) for k, d in enumerate(flip)),
        max(abs(d - 0.01) for d in keep),
    )
    add(_check("marginal sign flip at 3/8 / keep at 5/8", 0.0, err, 1e-12))
    return out


def format_table(checks: list[Check]) -> str:
    width = max(len(c.name) for c in checks)
    lines = [f"{'check':<{width}}  {'expected':>22}  {'computed':>22}  {'|error|':>10}  result"]
    for c in checks:
        lines.append(
            f"{c.name:<{width}}  {c.expected:>22.17g}  {c.computed:>22.17g}  "
            f"{c.error:>10.3g}  {'pass' if c.passed else 'FAIL'}"
        )
    n_pass = sum(c.passed for c in checks)
    lines.append(f"{n_pass}/{len(checks)} checks passed")
    return "\n".join(lines) + "\n"
