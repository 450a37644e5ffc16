"""Eight-order self-similar cluster cascade.

Consecutive orders are chained so that the outer crossing of order i at
the fixed-point level coincides with the inner crossing of order i+1:

    sigma_i   = sigma_1 (5/3)**((i-1)/6)
    q_{i,R}   = sigma_i (8/3)**(1/6)         chi = 3/8
    q_{i,L}   = sigma_i (8/5)**(1/6)         chi = 5/8

Every order uses the same well depth, eps_i = eps_1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from ljfixed.errors import ArgumentError, DomainError
from ljfixed.potential import PotentialSpec, evaluate
from ljfixed.recursion import CHI_MINUS, CHI_PLUS, DEEP_F, QIEE, U_C_STAR

MAX_ORDERS = 64

# sigma ratio between orders; equals chi_minus / chi_plus under the sixth root
GROWTH = float(CHI_MINUS / CHI_PLUS) ** (1.0 / 6.0)
RIGHT_FACTOR = float(1 / CHI_PLUS) ** (1.0 / 6.0)
LEFT_FACTOR = float(1 / CHI_MINUS) ** (1.0 / 6.0)

E_C = Fraction(20, 3)
K_T_C = Fraction(8)

SHARP_ANGLE_RTOL = 1e-12


@dataclass(frozen=True)
class CascadeLevel:
    order: int
    sigma_i: float
    q_left: float
    q_right: float
    gap_prev: float | None = None
    lindemann: float | None = None

    def spec(self, epsilon: float = 1.0) -> PotentialSpec:
        return PotentialSpec(self.sigma_i, epsilon)


def _sigma(sigma1: float, order: int) -> float:
    return sigma1 * GROWTH ** (order - 1)


def build(sigma1: float, eps1: float, max_orders: int) -> list[CascadeLevel]:
    """Closed-form cascade of ``max_orders`` levels.

    Each sharp-angled point is re-evaluated under both adjacent curves
    and must sit at ``-15/16 eps1``; a mismatch means the closed forms
    are wrong and raises ``AssertionError``.
    """
    if not (isinstance(max_orders, int) and 1 <= max_orders <= MAX_ORDERS):
        raise ArgumentError(f"max_orders must be an integer in [1, {MAX_ORDERS}], got {max_orders!r}")
    try:
        PotentialSpec(sigma1, eps1)
    except DomainError as exc:
        raise ArgumentError(str(exc)) from None

    levels = []
    prev = None
    for i in range(1, max_orders + 1):
        sigma_i = _sigma(sigma1, i)
        q_right = sigma_i * RIGHT_FACTOR
        if prev is None:
            q_left = sigma_i * LEFT_FACTOR
            gap = ratio = None
        else:
            # chain continuity: reuse the previous outer radius exactly
            q_left = prev.q_right
            gap = q_right - prev.q_right
            ratio = gap / prev.sigma_i
        level = CascadeLevel(i, sigma_i, q_left, q_right, gap, ratio)
        levels.append(level)
        prev = level

    target = float(U_C_STAR) * eps1
    for lo, hi in zip(levels, levels[1:]):
        for spec in (lo.spec(eps1), hi.spec(eps1)):
            u = evaluate(spec, lo.q_right)
            assert abs(u - target) <= SHARP_ANGLE_RTOL * abs(target), (lo.order, u)
    return levels


def lindemann_ratio() -> float:
    """Gap-to-size ratio ``(8/3)**(1/6) [(5/3)**(1/6) - 1]`` (about 0.10465)."""
    return RIGHT_FACTOR * (GROWTH - 1.0)


def order_count(sigma1: float = 1.0) -> int:
    """Smallest order whose outer crossing exceeds 2 sigma_1 (8 for any sigma_1)."""
    if not sigma1 > 0:
        raise DomainError(f"sigma1 must be positive, got {sigma1!r}")
    i = 1
    while not _sigma(sigma1, i) * RIGHT_FACTOR > 2.0 * sigma1:
        i += 1
    return i


def vacancy_check(levels: list[CascadeLevel], sigma1: float) -> list[bool]:
    """Per level: does a sigma_1-sized vacancy fit, i.e. q_{i,R} > 2 sigma_1."""
    if not levels:
        raise ArgumentError("levels must be nonempty")
    return [lv.q_right > 2.0 * sigma1 for lv in levels]


@dataclass(frozen=True)
class EnergyLedger:
    u_c_star: float
    qiee: float
    deep_attractive: float
    e_c: float
    k_t_c: float


def energy_ledger(eps1: float = 1.0) -> EnergyLedger:
    """Fixed-point energies scaled by ``eps1``.

    Pass a ``Fraction`` to keep the identities exact.
    """
    if not eps1 > 0:
        raise DomainError(f"eps1 must be positive, got {eps1!r}")
    return EnergyLedger(
        u_c_star=U_C_STAR * eps1,
        qiee=QIEE * eps1,
        deep_attractive=DEEP_F * eps1,
        e_c=E_C * eps1,
        k_t_c=K_T_C * eps1,
    )
