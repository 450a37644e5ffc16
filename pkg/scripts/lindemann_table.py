#!/usr/bin/env python3
"""Print the cascade order by order with the vacancy test, the Lindemann
ratio and a few trajectories of the fluctuation recursion."""

import sys

from ljfixed import build, iterate, lindemann_ratio, order_count, stability_at, vacancy_check

n = int(sys.argv[1]) if len(sys.argv) > 1 else 10
levels = build(1.0, 1.0, n)
fits = vacancy_check(levels, 1.0)

print(f"{'i':>3} {'sigma_i':>10} {'q_iL':>10} {'q_iR':>10} {'dq/sigma':>10}  vacancy")
for lv, ok in zip(levels, fits):
    ratio = f"{lv.lindemann:10.7f}" if lv.lindemann is not None else " " * 10
    print(f"{lv.order:>3} {lv.sigma_i:10.7f} {lv.q_left:10.7f} {lv.q_right:10.7f} {ratio}  {'yes' if ok else 'no'}")

print(f"\nLindemann ratio  {lindemann_ratio():.10f}")
print(f"order count M    {order_count(1.0)}")

print("\nlinearized recursion, delta0 = 0.01, 12 steps")
for chi in (0.30, 0.375, 0.45, 0.5, 0.625, 0.70):
    traj = iterate(chi, 0.01, 12, "linearized")
    rep = stability_at(chi)
    print(f"  chi={chi:5.3f}  s={rep.s:4.2f} {rep.classification:<11}  "
          f"last delta={traj.deltas[-1]:+.3e}  ({traj.terminated_by})")
