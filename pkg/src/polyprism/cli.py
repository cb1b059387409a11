"""Command-line front end: graph generation, invariant reports, closed-form
verification sweeps, and CSV emission.

Exit codes: 0 on success, 1 when a verification check fails, 2 on usage errors.
Numeric tolerances are fixed: 1e-9 relative for spectral routes, 1e-6 relative
for the float spanning-tree probe. Chain length 1 is always reported
informationally and never fails a run.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from datetime import datetime, timezone
from fractions import Fraction

from . import formulas, verify
from .errors import InvalidParameterError
from .exact import fraction_to_decimal
from .graphs import (
    Graph,
    linear_polyomino,
    standard_graph,
    strong_prism_polyomino,
    to_dot,
    to_json,
)
from .invariants import invariant_report

FAMILIES = ("polyomino", "prism-polyomino", "cycle", "path", "complete")

_EPILOG = """\
families:
  polyomino        chain of n unit squares (2n+2 vertices)
  prism-polyomino  strong prism of the chain (4n+4 vertices)
  cycle            cycle on n vertices (n >= 3)
  path             path on n vertices
  complete         complete graph on n vertices

checks (verify): decomposition, ls-spectrum, minors, coeffs, kfstar, tau,
gutman, ratio, lemma22 - or 'all'. Tolerances: 1e-9 relative for spectral
routes, 1e-8 absolute for the eigenvalue decomposition, 1e-6 relative for
the float spanning-tree probe (lemma22); all other checks are exact.
"""


def _build_graph(family: str, n: int) -> Graph:
    if family == "polyomino":
        return linear_polyomino(n)
    if family == "prism-polyomino":
        return strong_prism_polyomino(n)
    return standard_graph(family, n)


def _validate_family_n(parser: argparse.ArgumentParser, family: str, n: int) -> Graph:
    try:
        return _build_graph(family, n)
    except InvalidParameterError as err:
        parser.error(f"{family} with n={n}: {err}")
        raise  # unreachable; parser.error exits


def _timestamp_line(args, prefix: str) -> list[str]:
    if args.no_timestamp:
        return []
    return [f"{prefix}{datetime.now(timezone.utc).isoformat()}"]


def cmd_gen(parser: argparse.ArgumentParser, args) -> int:
    g = _validate_family_n(parser, args.family, args.n)
    payload = to_dot(g) if args.format == "dot" else to_json(g)
    counts = f"{g.n_vertices} vertices, {g.n_edges} edges"
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(payload)
        print(f"wrote {args.family} n={args.n} ({counts}) to {args.output}")
    else:
        sys.stdout.write(payload)
        print(counts, file=sys.stderr)
    return 0


def _prism_exact_fields(n: int, report) -> dict:
    tau_closed = formulas.spanning_trees_closed(n)
    kf_star_exact = formulas.degree_kirchhoff_closed(n)
    gut_closed = formulas.gutman_closed(n)
    ref = float(kf_star_exact)
    return {
        "pattern_regime": formulas.pattern_regime(n),
        "tau_closed": str(tau_closed),
        "kf_star_exact": f"{kf_star_exact.numerator}/{kf_star_exact.denominator}",
        "kf_star_exact_decimal": fraction_to_decimal(kf_star_exact, 20),
        "gutman_closed": str(gut_closed),
        "closed_match": {
            "tau": tau_closed == report.tau.exact,
            "gutman": gut_closed == report.gutman,
            "kf_star_rel_delta": abs(report.kf_star.value - ref) / ref,
        },
    }


def cmd_invariants(parser: argparse.ArgumentParser, args) -> int:
    g = _validate_family_n(parser, args.family, args.n)
    report = invariant_report(g, f"{args.family}(n={args.n})")
    warnings = list(report.warnings)
    extras = dict(report.extras)
    if args.family == "prism-polyomino":
        if not formulas.pattern_regime(args.n):
            warnings.append(
                "pattern-regime: n=1 prism is 5-regular; closed forms come from "
                "the n>=2 degree pattern and are reported for comparison only")
        if args.exact:
            extras.update(_prism_exact_fields(args.n, report))
    payload = report.to_dict()
    if warnings:
        payload["warnings"] = warnings
    payload.update(extras)
    if not args.no_timestamp:
        payload["generated_at"] = datetime.now(timezone.utc).isoformat()
    json.dump(payload, sys.stdout, indent=2)
    sys.stdout.write("\n")
    return 0


def _format_rows(rows: list[verify.VerificationRow]) -> list[str]:
    header = f"{'n':>4}  {'check':<14} {'regime':<8} {'status':<11} detail"
    lines = [header, "-" * len(header)]
    for r in rows:
        regime = "pattern" if r.pattern_regime else "n=1"
        if r.exact_equal is not None:
            detail = "exact equality" if r.exact_equal else "exact mismatch"
        elif r.delta is not None:
            detail = f"delta={r.delta:.3e}"
        else:
            detail = ""
        routes = "; ".join(f"{k}: {v}" for k, v in r.routes)
        if routes:
            detail = f"{detail}  [{routes}]" if detail else f"[{routes}]"
        if r.note:
            detail += f"  ({r.note})"
        lines.append(f"{r.n:>4}  {r.check:<14} {regime:<8} {r.status:<11} {detail}")
    return lines


def cmd_verify(parser: argparse.ArgumentParser, args) -> int:
    if not 1 <= args.min_n <= args.max_n:
        parser.error("need 1 <= --min-n <= --max-n")
    if args.checks == ["all"]:
        check_ids = list(verify.CHECK_ORDER)
    else:
        check_ids = args.checks
        unknown = [c for c in check_ids if c not in verify.CHECKS]
        if unknown:
            parser.error(f"unknown checks: {', '.join(unknown)} "
                         f"(valid: {', '.join(verify.CHECK_ORDER)}, all)")
    rows = verify.run_checks(args.min_n, args.max_n, check_ids, jobs=args.jobs)
    for line in _timestamp_line(args, "generated at "):
        print(line)
    for line in _format_rows(rows):
        print(line)
    failures = [r for r in rows if r.pattern_regime and not r.passed]
    if failures:
        print(f"\n{len(failures)} check(s) failed:")
        for r in failures:
            routes = "; ".join(f"{k}: {v}" for k, v in r.routes)
            print(f"  {r.check} at n={r.n}: {routes}")
        return 1
    print(f"\nall {sum(1 for r in rows if r.pattern_regime)} pattern-regime "
          f"check(s) passed ({sum(1 for r in rows if not r.pattern_regime)} informational)")
    return 0


def _sweep_row(n: int) -> str:
    kf_star = formulas.degree_kirchhoff_closed(n)
    tau = formulas.spanning_trees_closed(n)
    gut = formulas.gutman_closed(n)
    ratio = Fraction(kf_star) / gut
    return ",".join([
        str(n),
        f"{kf_star.numerator}/{kf_star.denominator}",
        str(tau),
        str(gut),
        fraction_to_decimal(ratio, 20),
        str(formulas.pattern_regime(n)).lower(),
    ])


def cmd_sweep(parser: argparse.ArgumentParser, args) -> int:
    if args.max_n < 2:
        parser.error("--max-n must be >= 2")
    ns = range(2, args.max_n + 1)
    if args.jobs > 1:
        with ThreadPoolExecutor(max_workers=args.jobs) as pool:
            rows = list(pool.map(_sweep_row, ns))
    else:
        rows = [_sweep_row(n) for n in ns]
    lines = _timestamp_line(args, "# generated_at=")
    lines.append("n,kf_star_exact,tau_exact,gutman_exact,ratio_decimal,pattern_regime")
    lines.extend(rows)
    text = "\n".join(lines) + "\n"
    try:
        with open(args.output, "w") as fh:
            fh.write(text)
    except OSError as err:
        print(f"cannot write {args.output}: {err}", file=sys.stderr)
        return 1
    print(f"wrote {len(rows)} rows to {args.output}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polyprism",
        description=(
            "Construct strong prisms of linear polyomino chains and verify their "
            "closed-form invariants against independent numeric and exact routes."),
        epilog=_EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("gen", help="generate a graph as DOT or JSON")
    p_gen.add_argument("--family", required=True, choices=FAMILIES)
    p_gen.add_argument("--n", required=True, type=int)
    p_gen.add_argument("--format", default="json", choices=("dot", "json"))
    p_gen.add_argument("--output", help="output file (default: stdout)")
    p_gen.add_argument("--no-timestamp", action="store_true")
    p_gen.set_defaults(func=cmd_gen)

    p_inv = sub.add_parser("invariants", help="compute all invariants as JSON")
    p_inv.add_argument("--family", required=True, choices=FAMILIES)
    p_inv.add_argument("--n", required=True, type=int)
    p_inv.add_argument("--exact", action="store_true",
                       help="include closed-form fields for prism-polyomino")
    p_inv.add_argument("--no-timestamp", action="store_true")
    p_inv.set_defaults(func=cmd_invariants)

    p_ver = sub.add_parser("verify", help="run closed-form verification checks")
    p_ver.add_argument("--min-n", type=int, default=2)
    p_ver.add_argument("--max-n", type=int, default=12)
    p_ver.add_argument("--checks", default="all",
                       type=lambda s: s.split(","),
                       help="comma-separated check ids, or 'all'")
    p_ver.add_argument("--jobs", type=int, default=1)
    p_ver.add_argument("--no-timestamp", action="store_true")
    p_ver.set_defaults(func=cmd_verify)

    p_sw = sub.add_parser("sweep", help="emit closed-form values as CSV")
    p_sw.add_argument("--max-n", required=True, type=int)
    p_sw.add_argument("--output", required=True)
    p_sw.add_argument("--jobs", type=int, default=1)
    p_sw.add_argument("--no-timestamp", action="store_true")
    p_sw.set_defaults(func=cmd_sweep)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(parser, args)


if __name__ == "__main__":
    sys.exit(main())
