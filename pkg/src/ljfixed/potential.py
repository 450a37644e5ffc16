"""12-6 Lennard-Jones potential in radial and reduced (chi) coordinates.

The reduced variable is ``chi = (sigma / q)**6``; in it the potential
becomes the parabola ``U / epsilon = -4 chi (1 - chi)``.

Potential levels are signed values in (-epsilon, 0).  The depth
convention ``depth = -u_c`` in (0, epsilon) is handled by callers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from ljfixed.errors import DegenerateLevelError, DomainError, LevelOutOfRangeError

SIXTH_ROOT_TWO = 2.0 ** (1.0 / 6.0)


@dataclass(frozen=True)
class PotentialSpec:
    """One L-J curve: diameter ``sigma`` and well depth ``epsilon``."""

    sigma: float = 1.0
    epsilon: float = 1.0

    def __post_init__(self):
        if not (self.sigma > 0 and math.isfinite(self.sigma)):
            raise DomainError(f"sigma must be positive and finite, got {self.sigma!r}")
        if not (self.epsilon > 0 and math.isfinite(self.epsilon)):
            raise DomainError(f"epsilon must be positive and finite, got {self.epsilon!r}")

    @property
    def q_min(self) -> float:
        """Radius of the well bottom, 2**(1/6) sigma."""
        return SIXTH_ROOT_TWO * self.sigma


@dataclass(frozen=True)
class CrossingPair:
    u_c: float
    q_left: float
    q_right: float


def _check_radius(q):
    if not q > 0:
        raise DomainError(f"radius q must be positive, got {q!r}")


def chi_of(spec: PotentialSpec, q: float) -> float:
    _check_radius(q)
    return (spec.sigma / q) ** 6


def q_of_chi(spec: PotentialSpec, chi: float) -> float:
    if not chi > 0:
        raise DomainError(f"chi must be positive, got {chi!r}")
    return spec.sigma * chi ** (-1.0 / 6.0)


def f_reduced(chi):
    """Reduced potential ``-4 chi (1 - chi)`` in units of epsilon.

    Works on floats, Fractions and numpy arrays alike.
    """
    return -4 * chi * (1 - chi)


def evaluate(spec: PotentialSpec, q: float) -> float:
    """``4 eps [(sigma/q)**12 - (sigma/q)**6]``.

    The twelfth power is formed as the square of the sixth so that very
    small radii overflow to ``inf`` rather than raising.
    """
    _check_radius(q)
    x6 = (spec.sigma / q) ** 6
    return 4.0 * spec.epsilon * (x6 * x6 - x6)


def crossings(spec: PotentialSpec, u_c: float) -> CrossingPair:
    """Both radii at which the curve takes the value ``u_c``.

    Solves the quadratic ``4 chi**2 - 4 chi - u_c/eps = 0`` in closed form;
    the larger chi root is the inner (repulsive side) radius.

    Raises
    ------
    DegenerateLevelError
        ``u_c == -epsilon`` (double root at the well bottom).
    LevelOutOfRangeError
        ``u_c`` outside the open interval (-epsilon, 0).
    """
    eps = spec.epsilon
    if u_c == -eps:
        raise DegenerateLevelError(
            f"u_c = {u_c!r} is the well bottom -epsilon; crossings coincide at q = {spec.q_min!r}"
        )
    if not (-eps < u_c < 0):
        raise LevelOutOfRangeError(
            f"u_c = {u_c!r} outside the open interval ({-eps!r}, 0)"
        )
    root = math.sqrt(1.0 + u_c / eps)
    chi_hi = 0.5 * (1.0 + root)
    # 1 - root cancels badly near u_c -> 0; use the product of roots instead
    chi_lo = (-u_c / (4.0 * eps)) / chi_hi
    return CrossingPair(u_c=u_c, q_left=q_of_chi(spec, chi_hi), q_right=q_of_chi(spec, chi_lo))
