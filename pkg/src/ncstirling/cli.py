"""Command-line front end: emit triangles, evaluate entries, and run the
exact verification suite with an optional numerical derivative-expansion grid.

All JSON output renders numbers as decimal strings so arbitrary-precision
values survive a round trip; exit status is 0 exactly when every check passed.
"""
from __future__ import annotations

import argparse
import io
import json
import sys

from .exact import format_rational, parse_rational
from .identities import reports_to_json_records, run_suite, structural_checks
from .jets import GRID_MAX_ORDER, evaluate_expansion, expansion_grid, residuals_to_json_records
from .noncentral import (
    NoncentralTriangle,
    build_by_explicit,
    build_by_recurrence,
    corrupt_entry,
    triangle_to_json,
)
from .stirling import build_stirling_table

MAX_FAILURES_PRINTED = 25


def _rational_argument(text: str):
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ncstirling",
        description="Non-central Stirling numbers of the first kind: exact "
                    "polynomial triangles, identity verification, and a "
                    "numerical derivative-expansion cross-check.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    tri = sub.add_parser("triangle", help="emit the polynomial triangle")
    tri.add_argument("--n-max", type=int, default=64, help="largest row (default 64)")
    tri.add_argument("--construction", choices=("recurrence", "explicit"),
                     default="recurrence", help="which construction to run")
    tri.add_argument("--format", choices=("json", "csv"), default="json")
    tri.add_argument("--out", default=None, help="output path (default stdout)")

    ver = sub.add_parser(
        "verify",
        help="run every exact check up to --n-max; nonzero exit on any failure",
    )
    ver.add_argument("--n-max", type=int, default=20)
    ver.add_argument("--with-oracle", action="store_true",
                     help="also run the numerical derivative-expansion grid")
    ver.add_argument("--tol", type=float, default=1e-6,
                     help="relative residual tolerance for the grid (default 1e-6)")
    ver.add_argument("--seed", type=int, default=0,
                     help="seed for the random rational sample (default 0)")
    ver.add_argument("--format", choices=("json", "csv"), default="json")
    ver.add_argument("--out", default=None, help="write the full report here")
    ver.add_argument("--corrupt", metavar="N,K", default=None,
                     help="test hook: perturb one triangle coefficient before "
                          "verifying (must flip the exit status to 1)")

    ev = sub.add_parser("eval", help="print s(n, k, alpha) exactly")
    ev.add_argument("--n", type=int, required=True)
    ev.add_argument("--k", type=int, required=True)
    ev.add_argument("--alpha", type=_rational_argument, required=True,
                    help='rational, e.g. "-2" or "7/3"')
    ev.add_argument("--beta", type=float, default=None,
                    help="with --x0: also evaluate the derivative expansion")
    ev.add_argument("--x0", type=float, default=None)
    return parser


def _emit(text: str, out_path) -> bool:
    if out_path is None:
        sys.stdout.write(text)
        return True
    try:
        with open(out_path, "w") as handle:
            handle.write(text)
    except OSError as exc:
        print("cannot write %s: %s" % (out_path, exc), file=sys.stderr)
        return False
    return True


def triangle_to_csv(triangle: NoncentralTriangle) -> str:
    """CSV triangle dump: one row per (n, k), coefficients space-separated low-to-high."""
    out = io.StringIO()
    out.write("n,k,degree,coeffs\n")
    for n in range(triangle.n_max + 1):
        for k in range(n + 1):
            entry = triangle.entry(n, k)
            out.write("%d,%d,%d,%s\n" % (n, k, entry.degree,
                                         " ".join(entry.coefficient_strings())))
    return out.getvalue()


def cmd_triangle(args) -> int:
    if args.n_max < 0:
        print("--n-max must be nonnegative", file=sys.stderr)
        return 2
    if args.construction == "explicit":
        triangle = build_by_explicit(args.n_max)
    else:
        triangle = build_by_recurrence(args.n_max)
    if args.format == "json":
        text = triangle_to_json(triangle)
    else:
        text = triangle_to_csv(triangle)
    return 0 if _emit(text, args.out) else 1


def _structural_json_records(checks) -> list:
    return [
        {
            "check": c.check,
            "n": str(c.n),
            "k": None if c.k is None else str(c.k),
            "ok": c.ok,
            "detail": c.detail,
        }
        for c in checks
    ]


def _verify_csv(checks, identity_reports, oracle_reports) -> str:
    out = io.StringIO()
    out.write("identity,n,alpha,holds\n")
    for c in checks:
        out.write("%s,%d,,%s\n" % (c.check, c.n, "true" if c.ok else "false"))
    for r in identity_reports:
        out.write("%s,%d,%s,%s\n" % (r.identity, r.n,
                                     "" if r.alpha is None else format_rational(r.alpha),
                                     "true" if r.holds else "false"))
    for r in oracle_reports:
        out.write("derivative_expansion,%d,%s,%s\n" % (r.n, format_rational(r.alpha),
                                                       "true" if r.passed else "false"))
    return out.getvalue()


def cmd_verify(args) -> int:
    if args.n_max < 0:
        print("--n-max must be nonnegative", file=sys.stderr)
        return 2
    if not args.tol > 0:
        print("--tol must be positive", file=sys.stderr)
        return 2
    table = build_stirling_table(args.n_max)
    by_recurrence = build_by_recurrence(args.n_max)
    by_explicit = build_by_explicit(args.n_max, table)
    if args.corrupt is not None:
        try:
            n_str, k_str = args.corrupt.split(",")
            by_recurrence = corrupt_entry(by_recurrence, int(n_str), int(k_str))
        except (ValueError, IndexError) as exc:
            print("bad --corrupt argument %r: %s" % (args.corrupt, exc), file=sys.stderr)
            return 2
        print("test hook: corrupted entry (%s, %s)" % (n_str.strip(), k_str.strip()))

    checks = structural_checks(by_recurrence, by_explicit, table)
    identity_reports = run_suite(table, by_recurrence, args.n_max, seed=args.seed)
    oracle_reports = []
    if args.with_oracle:
        oracle_reports = expansion_grid(by_recurrence, rel_tol=args.tol,
                                        max_order=min(GRID_MAX_ORDER, args.n_max))

    failed_checks = [c for c in checks if not c.ok]
    failed_identities = [r for r in identity_reports if not r.holds]
    failed_oracle = [r for r in oracle_reports if not r.passed]
    failures = len(failed_checks) + len(failed_identities) + len(failed_oracle)

    print("structural checks: %d run, %d failing" % (len(checks), len(failed_checks)))
    print("identity suite:    %d reports, %d failing (seed=%d)"
          % (len(identity_reports), len(failed_identities), args.seed))
    if args.with_oracle:
        worst = max((r.rel_residual for r in oracle_reports), default=0.0)
        print("expansion grid:    %d points, %d over tol %g, max residual %.3e"
              % (len(oracle_reports), len(failed_oracle), args.tol, worst))

    shown = 0
    for record in failed_checks + failed_identities + failed_oracle:
        if shown >= MAX_FAILURES_PRINTED:
            print("... %d more failing records" % (failures - shown))
            break
        print("FAIL %r" % (record,))
        shown += 1

    if args.out is not None:
        if args.format == "json":
            doc = {
                "seed": str(args.seed),
                "n_max": str(args.n_max),
                "structural": _structural_json_records(checks),
                "identities": reports_to_json_records(identity_reports),
                "oracle": residuals_to_json_records(oracle_reports),
            }
            text = json.dumps(doc, separators=(",", ":")) + "\n"
        else:
            text = _verify_csv(checks, identity_reports, oracle_reports)
        if not _emit(text, args.out):
            return 1

    print("VERIFY: %s" % ("PASS" if failures == 0 else "FAIL"))
    return 0 if failures == 0 else 1


def cmd_eval(args, parser: argparse.ArgumentParser) -> int:
    if args.n < 0 or args.k < 0:
        parser.error("--n and --k must be nonnegative")
    if args.k > args.n:
        parser.error("--k must not exceed --n")
    if (args.beta is None) != (args.x0 is None):
        parser.error("--beta and --x0 must be given together")
    triangle = build_by_recurrence(args.n)
    print(format_rational(triangle.evaluate(args.n, args.k, args.alpha)))
    if args.beta is not None:
        if not args.x0 > 1.0:
            parser.error("--x0 must exceed 1")
        value = evaluate_expansion(args.x0, args.alpha, args.beta, args.n, triangle)
        print("expansion n=%d alpha=%s beta=%r x0=%r -> %r"
              % (args.n, format_rational(args.alpha), args.beta, args.x0, value))
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "triangle":
        return cmd_triangle(args)
    if args.command == "verify":
        return cmd_verify(args)
    return cmd_eval(args, parser)


if __name__ == "__main__":
    sys.exit(main())
