"""Fixed point of self-similar Lennard-Jones potentials.

Reduced geometric-phase map, fluctuation recursion, the eight-order
cluster cascade and figure-data emission.
"""

from ljfixed.errors import (
    ArgumentError,
    DegenerateLevelError,
    DomainError,
    LevelOutOfRangeError,
)
from ljfixed.potential import (
    CrossingPair,
    PotentialSpec,
    chi_of,
    crossings,
    evaluate,
    f_reduced,
    q_of_chi,
)
from ljfixed.recursion import (
    BifurcationConstants,
    FluctuationTrajectory,
    StabilityReport,
    bifurcation_constants,
    iterate,
    self_similar_points,
    stability_at,
    step_exact,
    step_linear,
    tangent_intersection,
)
from ljfixed.cascade import (
    CascadeLevel,
    EnergyLedger,
    build,
    energy_ledger,
    lindemann_ratio,
    order_count,
    vacancy_check,
)
from ljfixed.profile import (
    FigureRow,
    PathPoint,
    ProfileRow,
    delocalization_path,
    recursion_figure,
    sample_family,
    serialize,
)

__version__ = "0.1.0"
