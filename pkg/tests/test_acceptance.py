"""Exit criteria, one test per criterion at its stated tolerance.

A pass/fail line per criterion is printed in the terminal summary.
"""

import io
import random
import time
from fractions import Fraction
from pathlib import Path

import pytest

from ljfixed import (
    PotentialSpec,
    bifurcation_constants,
    build,
    chi_of,
    crossings,
    evaluate,
    f_reduced,
    iterate,
    lindemann_ratio,
    order_count,
    self_similar_points,
    stability_at,
    step_exact,
    step_linear,
    tangent_intersection,
)
from ljfixed.cli import run
from ljfixed.recursion import self_similar_residual
from oracles import crossing_by_bisection, hp, rational_f

LINDEMANN_TRUE = hp(lambda m: (m.mpf(8) / 3) ** (m.mpf(1) / 6) * ((m.mpf(5) / 3) ** (m.mpf(1) / 6) - 1))


@pytest.mark.criterion(1, "fixed point f(3/8) = f(5/8) = -15/16, |err| < 1e-15")
def test_c01_fixed_point():
    assert abs(f_reduced(3 / 8) + 15 / 16) < 1e-15
    assert abs(f_reduced(5 / 8) + 15 / 16) < 1e-15


@pytest.mark.criterion(2, "stability flips exactly at chi = 3/8 and 5/8 on a 1e5-point scan")
def test_c02_stability_interval():
    n = 100_000
    classes = [stability_at(k / n).classification for k in range(n + 1)]
    i_lo, i_hi = 37_500, 62_500
    assert set(classes[:i_lo]) == {"expanding"}
    assert classes[i_lo] == "marginal" and classes[i_hi] == "marginal"
    assert set(classes[i_lo + 1 : i_hi]) == {"contracting"}
    assert set(classes[i_hi + 1 :]) == {"expanding"}


@pytest.mark.criterion(3, "self-similar roots chi' = +-1/8, residual < 1e-12, map back to (3/8|5/8, -15/16)")
def test_c03_self_similar():
    (neg, f_neg), (pos, f_pos) = self_similar_points()
    assert abs(pos - 0.125) < 1e-12 and abs(neg + 0.125) < 1e-12
    assert abs(self_similar_residual(pos)) < 1e-12
    assert abs(self_similar_residual(neg)) < 1e-12
    for chi_s, f_s, chi in ((neg, f_neg, 0.375), (pos, f_pos, 0.625)):
        assert abs(chi_s + 0.5 - chi) < 1e-12
        assert abs(f_s - 17 / 16 + 15 / 16) < 1e-12
        assert abs(f_reduced(chi_s + 0.5) + 15 / 16) < 1e-12


@pytest.mark.criterion(4, "tangent intersection (1/2, -17/16) within 1e-12; 1/16 reflection gaps exact")
def test_c04_deep_point():
    chi, f = tangent_intersection()
    assert abs(chi - 0.5) < 1e-12 and abs(f + 1.0625) < 1e-12
    assert abs(Fraction(-15, 16) - (-1)) == abs(Fraction(-17, 16) - (-1)) == Fraction(1, 16)


@pytest.mark.criterion(5, "QIEE ledger 17/16-15/16 = 1/2-3/8 = 5/8-1/2 = 1/8 (exact)")
def test_c05_qiee():
    c = bifurcation_constants()
    chi_mid, f_deep = c.deep_point
    assert -f_deep - (-c.u_c_star) == chi_mid - c.chi_plus == c.chi_minus - chi_mid == c.qiee == Fraction(1, 8)
    assert rational_f(c.chi_plus) == rational_f(c.chi_minus) == c.u_c_star


@pytest.mark.criterion(6, "Lindemann within 2e-4 of 0.1047; per-level ratios agree to 1e-12")
def test_c06_lindemann():
    d = lindemann_ratio()
    assert abs(d - 0.1047) < 2e-4
    assert abs(d - LINDEMANN_TRUE) < 1e-15
    per_level = [lv.lindemann for lv in build(1.0, 1.0, 8)[1:]]
    assert max(abs(r - d) for r in per_level) < 1e-12


@pytest.mark.criterion(7, "M = 8 for 100 random sigma_1; q8R = 2.137 +- 1e-3; q7R < 2")
def test_c07_order_count():
    rng = random.Random(2007)
    assert all(order_count(rng.uniform(0.1, 100)) == 8 for _ in range(100))
    levels = build(1.0, 1.0, 8)
    assert abs(levels[7].q_right - 2.137) < 1e-3
    q7 = hp(lambda m: (m.mpf(5) / 3) * (m.mpf(8) / 3) ** (m.mpf(1) / 6))
    assert abs(levels[6].q_right - q7) < 1e-12
    assert levels[6].q_right < 2


@pytest.mark.criterion(8, "7 sharp-angle pairs both at -15/16 eps1, relative residual < 1e-12")
def test_c08_sharp_angles():
    levels = build(1.0, 1.0, 8)
    pairs = list(zip(levels, levels[1:]))
    assert len(pairs) == 7
    for lo, hi in pairs:
        for lv in (lo, hi):
            assert abs(evaluate(lv.spec(1.0), lo.q_right) + 0.9375) / 0.9375 < 1e-12


@pytest.mark.criterion(9, "closed-form crossings = bisection oracle (1e-10); cascade = crossings solver (1e-10)")
def test_c09_oracles():
    unit = PotentialSpec()
    rng = random.Random(9)
    for _ in range(100):
        u = rng.uniform(-0.999, -0.001)
        pair = crossings(unit, u)
        ql, qr = crossing_by_bisection(1.0, 1.0, u)
        assert abs(pair.q_left - ql) / ql < 1e-10
        assert abs(pair.q_right - qr) / qr < 1e-10
    for lv in build(1.0, 1.0, 8):
        pair = crossings(lv.spec(1.0), -0.9375)
        assert abs(pair.q_left - lv.q_left) / lv.q_left < 1e-10
        assert abs(pair.q_right - lv.q_right) / lv.q_right < 1e-10
        assert abs(chi_of(lv.spec(), pair.q_right) - 0.375) < 1e-12


@pytest.mark.criterion(10, "exact - linear = 4 delta^2 (1e-14); marginal flip/keep over 100 steps")
def test_c10_recursion():
    rng = random.Random(10)
    for _ in range(1000):
        chi, d = rng.uniform(0, 1), rng.uniform(-0.1, 0.1)
        assert abs(step_exact(chi, d) - step_linear(chi, d) - 4 * d * d) < 1e-14
    flip = iterate(0.375, 0.01, 100, "linearized").deltas
    keep = iterate(0.625, 0.01, 100, "linearized").deltas
    assert len(flip) == len(keep) == 101
    assert all(abs(d - 0.01 * (-1) ** k) < 1e-12 for k, d in enumerate(flip))
    assert all(abs(d - 0.01) < 1e-12 for d in keep)


GOLDEN = Path(__file__).parent / "golden"


@pytest.mark.criterion(11, "CLI verify exits 0 in < 1 s; golden CSVs byte-stable")
def test_c11_cli():
    out = io.StringIO()
    t0 = time.perf_counter()
    code = run(["verify"], stdout=out, stderr=io.StringIO())
    elapsed = time.perf_counter() - t0
    assert code == 0
    assert elapsed < 1.0
    assert "FAIL" not in out.getvalue()
    for name, argv in [
        ("cascade_8.csv", ["cascade", "--orders", "8", "--format", "csv"]),
        ("path_8.csv", ["path", "--orders", "8"]),
        ("profile_family_61.csv", ["profile", "--samples", "61"]),
    ]:
        runs = []
        for _ in range(2):
            buf = io.StringIO()
            assert run(argv, stdout=buf, stderr=io.StringIO()) == 0
            runs.append(buf.getvalue().encode())
        assert runs[0] == runs[1] == (GOLDEN / name).read_bytes()
