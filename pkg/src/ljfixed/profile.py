"""Figure-ready tables: curve family and envelope, the sharp-angled
delocalization path, and the recursion tent in the (chi, f) plane.

Serialization is deterministic: every float is written with 17
significant digits so CSV/JSON round-trip bit-exactly.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from ljfixed.cascade import CascadeLevel
from ljfixed.errors import ArgumentError
from ljfixed.potential import evaluate, f_reduced
from ljfixed.recursion import CHI_MID, CHI_MINUS, CHI_PLUS, DEEP_F, U_C_STAR, slope


@dataclass(frozen=True)
class ProfileRow:
    q: float
    per_order_u: tuple[float, ...]
    envelope: float


@dataclass(frozen=True)
class PathPoint:
    label: str
    q: float
    u: float


@dataclass(frozen=True)
class FigureRow:
    chi: float
    f_parabola: float
    f_tent: float | None


def sample_family(
    levels: Sequence[CascadeLevel],
    eps1: float,
    q_min: float,
    q_max: float,
    n_samples: int,
) -> list[ProfileRow]:
    """Evaluate every cascade curve on a uniform grid ``[q_min, q_max]``.

    Values are not clamped; near ``q -> 0`` they grow like ``q**-12``.
    """
    if not levels:
        raise ArgumentError("levels must be nonempty")
    if not (0 < q_min < q_max):
        raise ArgumentError(f"need 0 < q_min < q_max, got q_min={q_min!r}, q_max={q_max!r}")
    if not (isinstance(n_samples, int) and n_samples >= 2):
        raise ArgumentError(f"n_samples must be an integer >= 2, got {n_samples!r}")
    specs = [lv.spec(eps1) for lv in levels]
    rows = []
    for q in np.linspace(q_min, q_max, n_samples).tolist():
        us = tuple(evaluate(s, q) for s in specs)
        rows.append(ProfileRow(q, us, min(us)))
    return rows


def delocalization_path(levels: Sequence[CascadeLevel], eps1: float) -> list[PathPoint]:
    """``q_{1,L}`` followed by every ``q_{i,R}``, all at the fixed-point level."""
    if not levels:
        raise ArgumentError("levels must be nonempty")
    u = float(U_C_STAR) * eps1
    points = [PathPoint("q1L", levels[0].q_left, u)]
    points += [PathPoint(f"q{lv.order}R", lv.q_right, u) for lv in levels]
    return points


def tent(chi: float) -> float | None:
    """Two-segment path 3/8 -> 1/2 -> 5/8 along the bifurcation tangents.

    ``None`` outside [3/8, 5/8].
    """
    if not (CHI_PLUS <= chi <= CHI_MINUS):
        return None
    # tangent at 3/8 on the left half, tangent at 5/8 on the right
    anchor = CHI_PLUS if chi <= CHI_MID else CHI_MINUS
    return float(U_C_STAR) + float(slope(anchor)) * (chi - float(anchor))


def recursion_figure(delta0: float, n_samples: int) -> list[FigureRow]:
    if not (0 < delta0 < 0.125):
        raise ArgumentError(f"delta0 must lie in (0, 1/8), got {delta0!r}")
    if not (isinstance(n_samples, int) and n_samples >= 2):
        raise ArgumentError(f"n_samples must be an integer >= 2, got {n_samples!r}")
    grid = np.linspace(0.375 - delta0, 0.625 + delta0, n_samples).tolist()
    return [FigureRow(c, f_reduced(c), tent(c)) for c in grid]


# ---------------------------------------------------------------- output

def _columns(rows) -> list[str]:
    first = rows[0]
    if isinstance(first, ProfileRow):
        m = len(first.per_order_u)
        return ["q"] + [f"u_{i}" for i in range(1, m + 1)] + ["envelope"]
    if isinstance(first, CascadeLevel):
        return ["order", "sigma", "q_left", "q_right", "gap_prev", "lindemann"]
    if isinstance(first, dict):
        return list(first)
    return list(first.__dataclass_fields__)


def _record(row) -> dict:
    if isinstance(row, ProfileRow):
        rec = {"q": row.q}
        rec.update({f"u_{i}": u for i, u in enumerate(row.per_order_u, 1)})
        rec["envelope"] = row.envelope
        return rec
    if isinstance(row, CascadeLevel):
        return {
            "order": row.order,
            "sigma": row.sigma_i,
            "q_left": row.q_left,
            "q_right": row.q_right,
            "gap_prev": row.gap_prev,
            "lindemann": row.lindemann,
        }
    if isinstance(row, dict):
        return row
    return {k: getattr(row, k) for k in row.__dataclass_fields__}


def format_number(x) -> str:
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, int):
        return str(x)
    return format(float(x), ".17g")


def _csv_cell(x) -> str:
    if x is None:
        return ""
    if isinstance(x, str):
        return x
    return format_number(x)


def _json_value(x) -> str:
    if x is None:
        return "null"
    if isinstance(x, str):
        return json.dumps(x)
    if isinstance(x, float) and not math.isfinite(x):
        raise ArgumentError(f"non-finite value {x!r} cannot be written as JSON")
    return format_number(x)


def serialize(rows, format: str = "csv") -> bytes:
    """Render tabular rows as CSV (header + one line per row) or JSON.

    Accepts ProfileRow, PathPoint, FigureRow, CascadeLevel, any other
    flat dataclass, or plain dicts sharing the same keys.
    """
    rows = list(rows)
    if not rows:
        raise ArgumentError("rows must be nonempty")
    cols = _columns(rows)
    records = [_record(r) for r in rows]
    if format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(cols)
        for rec in records:
            writer.writerow([_csv_cell(rec[c]) for c in cols])
        return buf.getvalue().encode("utf-8")
    if format == "json":
        objs = [
            "{" + ", ".join(f"{json.dumps(c)}: {_json_value(rec[c])}" for c in cols) + "}"
            for rec in records
        ]
        return ("[\n  " + ",\n  ".join(objs) + "\n]\n").encode("utf-8")
    raise ArgumentError(f"format must be 'csv' or 'json', got {format!r}")
