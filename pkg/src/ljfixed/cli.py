"""Command-line front end.

Exit status: 0 success, 1 domain error, 2 usage error, 3 failed verification.
"""

from __future__ import annotations

import argparse
import sys

from ljfixed import cascade, potential, profile, recursion, verification
from ljfixed.errors import ArgumentError, DomainError

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE, EXIT_VERIFY = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


class _UsageError(Exception):
    pass


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--sigma1", type=float, default=1.0, help="first-order diameter (default 1)")
    p.add_argument("--eps1", type=float, default=1.0, help="well depth, all orders (default 1)")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--json", dest="format", action="store_const", const="json", help="same as --format json")
    p.add_argument("--out", metavar="FILE", help="write output to FILE instead of stdout")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = _Parser(prog="ljfixed", description="Self-similar Lennard-Jones fixed-point toolkit")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sub.add_parser("verify", parents=[common], help="re-derive all constants and report pass/fail")

    p = sub.add_parser("cascade", parents=[common], help="cluster cascade levels")
    p.add_argument("--orders", type=int, default=8)
    p.add_argument("--vacancy", action="store_true", help="append the q_R > 2 sigma_1 column")

    p = sub.add_parser("crossings", parents=[common], help="radii where U(q) = u_c")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--uc", type=float, help="signed level in (-eps1, 0)")
    g.add_argument("--depth", type=float, help="positive depth in (0, eps1); u_c = -depth")

    p = sub.add_parser("recur", parents=[common], help="iterate the fluctuation recursion")
    p.add_argument("--chi", type=float, default=0.375)
    p.add_argument("--delta", type=float, default=0.01)
    p.add_argument("--steps", type=int, default=10)
    p.add_argument("--linearized", action="store_true")

    p = sub.add_parser("stability", parents=[common], help="stability of the linearized map")
    p.add_argument("--chi", type=float, nargs="+", default=[0.375, 0.5, 0.625])

    p = sub.add_parser("profile", parents=[common], help="curve family/envelope or recursion figure data")
    p.add_argument("--figure", choices=("family", "recursion"), default="family")
    p.add_argument("--orders", type=int, default=8)
    p.add_argument("--q-min", type=float, default=None, help="default sigma1")
    p.add_argument("--q-max", type=float, default=None, help="default 2.5 sigma1")
    p.add_argument("--samples", type=int, default=201)
    p.add_argument("--delta", type=float, default=0.0625, help="chi margin for --figure recursion")

    p = sub.add_parser("path", parents=[common], help="sharp-angled delocalization path")
    p.add_argument("--orders", type=int, default=8)

    sub.add_parser("ledger", parents=[common], help="fixed-point constants and energy ledger")
    return parser


def _ledger_rows(args) -> list[dict]:
    led = cascade.energy_ledger(args.eps1)
    const = recursion.bifurcation_constants()
    (neg, f_neg), (pos, f_pos) = recursion.self_similar_points()
    chi_d, f_d = recursion.tangent_intersection()
    rows = [
        ("chi_plus", const.chi_plus),
        ("chi_minus", const.chi_minus),
        ("u_c_star", led.u_c_star),
        ("qiee", led.qiee),
        ("deep_attractive", led.deep_attractive),
        ("e_c", led.e_c),
        ("k_t_c", led.k_t_c),
        ("deep_point_chi", chi_d),
        ("deep_point_f", f_d),
        ("self_similar_chi_shifted_neg", neg),
        ("self_similar_chi_shifted_pos", pos),
        ("self_similar_f_shifted", f_pos),
        ("lindemann", cascade.lindemann_ratio()),
        ("order_count", cascade.order_count(args.sigma1)),
    ]
    return [{"name": k, "value": float(v) if not isinstance(v, int) else v} for k, v in rows]


def _dispatch(args, err) -> tuple[str, int]:
    fmt = args.format
    cmd = args.command
    if cmd == "verify":
        checks = verification.run_checks()
        status = EXIT_OK if all(c.passed for c in checks) else EXIT_VERIFY
        if fmt == "json":
            return profile.serialize(checks, "json").decode(), status
        return verification.format_table(checks), status

    if cmd == "cascade":
        levels = cascade.build(args.sigma1, args.eps1, args.orders)
        if args.vacancy:
            flags = cascade.vacancy_check(levels, args.sigma1)
            rows = [
                {"order": lv.order, "sigma": lv.sigma_i, "q_left": lv.q_left, "q_right": lv.q_right,
                 "gap_prev": lv.gap_prev, "lindemann": lv.lindemann, "vacancy": ok}
                for lv, ok in zip(levels, flags)
            ]
        else:
            rows = levels
    elif cmd == "crossings":
        u_c = args.uc if args.uc is not None else -args.depth
        spec = potential.PotentialSpec(args.sigma1, args.eps1)
        pair = potential.crossings(spec, u_c)
        rows = [{
            "u_c": pair.u_c,
            "q_left": pair.q_left,
            "q_right": pair.q_right,
            "chi_left": potential.chi_of(spec, pair.q_left),
            "chi_right": potential.chi_of(spec, pair.q_right),
        }]
    elif cmd == "recur":
        mode = "linearized" if args.linearized else "exact"
        traj = recursion.iterate(args.chi, args.delta, args.steps, mode)
        err.write(f"# mode={traj.mode} base_chi={traj.base_chi!r} terminated_by={traj.terminated_by}\n")
        rows = list(traj.steps)
    elif cmd == "stability":
        rows = [recursion.stability_at(c) for c in args.chi]
    elif cmd == "profile":
        if args.figure == "recursion":
            rows = profile.recursion_figure(args.delta, args.samples)
        else:
            levels = cascade.build(args.sigma1, args.eps1, args.orders)
            q_min = args.q_min if args.q_min is not None else args.sigma1
            q_max = args.q_max if args.q_max is not None else 2.5 * args.sigma1
            rows = profile.sample_family(levels, args.eps1, q_min, q_max, args.samples)
    elif cmd == "path":
        levels = cascade.build(args.sigma1, args.eps1, args.orders)
        rows = profile.delocalization_path(levels, args.eps1)
    elif cmd == "ledger":
        rows = _ledger_rows(args)
    else:  # pragma: no cover - argparse restricts choices
        raise AssertionError(cmd)
    return profile.serialize(rows, fmt).decode(), EXIT_OK


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        stderr.write(f"{exc}\n")
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)

    try:
        text, status = _dispatch(args, stderr)
    except (DomainError, ArgumentError) as exc:
        stderr.write(f"ljfixed {args.command}: error: {exc}\n")
        return EXIT_DOMAIN

    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return status


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
