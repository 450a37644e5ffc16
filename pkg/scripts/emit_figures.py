#!/usr/bin/env python3
"""Write the data behind the curve-family, delocalization-path and
recursion-tent figures as CSV files.

Usage:
  python scripts/emit_figures.py                 # into ./figures
  python scripts/emit_figures.py -o out --orders 8 --samples 801
"""

import argparse
from pathlib import Path

from ljfixed import build, delocalization_path, recursion_figure, sample_family, serialize


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("-o", "--outdir", default="figures")
    ap.add_argument("--orders", type=int, default=8)
    ap.add_argument("--samples", type=int, default=801)
    ap.add_argument("--sigma1", type=float, default=1.0)
    ap.add_argument("--eps1", type=float, default=1.0)
    args = ap.parse_args()

    out = Path(args.outdir)
    out.mkdir(parents=True, exist_ok=True)
    levels = build(args.sigma1, args.eps1, args.orders)

    # start a little inside sigma_1 so the first repulsive wall is visible
    family = sample_family(levels, args.eps1, 0.95 * args.sigma1, 1.1 * levels[-1].q_right, args.samples)
    files = {
        "family_envelope.csv": serialize(family),
        "delocalization_path.csv": serialize(delocalization_path(levels, args.eps1)),
        "recursion_tent.csv": serialize(recursion_figure(0.1, args.samples)),
    }
    for name, data in files.items():
        (out / name).write_bytes(data)
        print(f"wrote {out / name} ({len(data)} bytes)")


if __name__ == "__main__":
    main()
