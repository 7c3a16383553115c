"""Command-line interface.

Exact integers print as plain decimal strings; floats print at 15
significant digits except the constants command, which prints the
12 digits the reference tables carry.  Progress and timing go to
standard error so standard output stays byte-identical across runs.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
import time
from fractions import Fraction
from typing import Sequence

from .asymptotics import (AsymptoticValue, asy_equal_window, asy_fixed_part,
                          asy_finite_profile, asy_turan, asy_turan_tutte,
                          far_tail_bound)
from .blowup import BlowupBase, blowup_vertex_transitive
from .exact import ao_exact, ao_one_large_part, chromatic_eval, h_s_exact
from .montecarlo import random_runs_estimate
from .partition_sums import partition_sum, quadratic_model
from .proportions import asy_fixed_proportion
from .saddle import SaddleProblem, solve_saddle
from .tables import RunReport, verify_tables


def _fmt(x: float) -> str:
    return f"{x:.15g}"


def parse_parts(text: str) -> tuple[int, ...]:
    try:
        parts = tuple(int(tok) for tok in text.split(",") if tok.strip())
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad part list {text!r}") from exc
    if not parts or any(p < 1 for p in parts):
        raise argparse.ArgumentTypeError("parts must be positive integers")
    return parts


def parse_exact_scalar(text: str):
    """Scalar for exact evaluation paths: int, p/q as a Fraction, or float."""
    text = text.strip()
    try:
        return int(text)
    except ValueError:
        pass
    if "/" in text:
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise argparse.ArgumentTypeError(f"bad rational {text!r}") from exc
    try:
        return float(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad number {text!r}") from exc


def parse_alphas(text: str) -> tuple[float, ...]:
    try:
        return tuple(float(tok) for tok in text.split(",") if tok.strip())
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad proportion list {text!r}") from exc


def _print_asymptotic(value: AsymptoticValue) -> None:
    print(f"log_value {_fmt(value.log_value)}")
    for key in sorted(value.ingredients):
        print(f"{key} {_fmt(value.ingredients[key])}")


def _report_text(report: RunReport) -> str:
    lines = []
    for table in report.reports:
        ok = sum(1 for row in table.rows if row.passed)
        lines.append(f"{table.table_id}: {ok}/{len(table.rows)} rows pass")
        for row in table.rows:
            label = " ".join(f"{k}={v}" for k, v in row.inputs.items())
            status = "PASS" if row.passed else "FAIL"
            lines.append(f"  [{status}] {label}  got={_fmt(row.got)} "
                         f"expected={_fmt(row.expected)} tol={row.tol:g}")
    lines.append(f"summary: {report.total_rows - report.failed_rows}/"
                 f"{report.total_rows} rows pass")
    return "\n".join(lines)


def _report_json(report: RunReport) -> str:
    payload = {
        "tables": [
            {
                "table_id": table.table_id,
                "rows": [
                    {"inputs": dict(row.inputs), "got": row.got,
                     "expected": row.expected, "tol": row.tol,
                     "pass": row.passed}
                    for row in table.rows
                ],
                "summary": {
                    "rows": len(table.rows),
                    "failures": sum(1 for r in table.rows if not r.passed),
                    "passed": table.passed,
                },
            }
            for table in report.reports
        ],
        "summary": {
            "rows": report.total_rows,
            "failures": report.failed_rows,
            "passed": report.all_passed,
        },
    }
    return json.dumps(payload, indent=1, sort_keys=True)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="aocount",
        description="Exact and asymptotic acyclic-orientation counts for "
                    "complete multipartite graphs and blow-ups.")
    sub = parser.add_subparsers(dest="command", required=True)

    exact = sub.add_parser("exact", help="exact evaluations")
    exact_sub = exact.add_subparsers(dest="exact_command", required=True)
    for name, extra in (("ao", ()), ("chromatic", ("q",)), ("hs", ("s",))):
        p = exact_sub.add_parser(name)
        p.add_argument("--parts", type=parse_parts, required=True,
                       help="comma-separated part sizes, e.g. 3,3")
        for flag in extra:
            p.add_argument(f"--{flag}", type=parse_exact_scalar, required=True)

    closed = sub.add_parser("closed-form", help="closed-form exact counts")
    closed_sub = closed.add_subparsers(dest="closed_command", required=True)
    olp = closed_sub.add_parser("one-large-part")
    olp.add_argument("--n", type=int, required=True, help="total vertex count")
    olp.add_argument("--large", type=int, required=True, help="size of the large part")

    psum = sub.add_parser("partition-sum", help="exact partition sums")
    psum.add_argument("--n", type=int, required=True)
    psum.add_argument("--distinct", action="store_true")
    group = psum.add_mutually_exclusive_group()
    group.add_argument("--max-part", type=int, default=None)
    group.add_argument("--R", type=float, default=None,
                       help="truncate parts at floor(R*sqrt(n))")

    qm = sub.add_parser("quadratic-model", help="quadratic-energy model DP")
    qm.add_argument("--n", type=int, required=True)
    qm.add_argument("--distinct", action="store_true")
    qm.add_argument("--eta", type=float, default=1.0)

    consts = sub.add_parser("constants", help="saddle constants c and C")
    consts.add_argument("--kind", choices=("bose", "fermi"), required=True)
    consts.add_argument("--R", type=float, default=None,
                        help="truncation radius (omit for untruncated)")
    consts.add_argument("--eta", type=float, default=1.0)

    asy = sub.add_parser("asymptotic", help="asymptotic formula evaluators")
    asy_sub = asy.add_subparsers(dest="asy_command", required=True)
    a = asy_sub.add_parser("turan")
    a.add_argument("--N", type=int, required=True)
    a.add_argument("--p", type=int, required=True)
    a = asy_sub.add_parser("tutte")
    a.add_argument("--N", type=int, required=True)
    a.add_argument("--p", type=int, required=True)
    a.add_argument("--s", type=float, required=True)
    a = asy_sub.add_parser("fixed-part")
    a.add_argument("--k", type=int, required=True)
    a.add_argument("--r", type=int, required=True)
    a.add_argument("--s", type=float, default=1.0)
    a.add_argument("--uncorrected", action="store_true")
    a = asy_sub.add_parser("profile")
    a.add_argument("--profile", type=parse_parts, required=True,
                   help="r_1,r_2,...: number of parts of each size")
    a.add_argument("--s", type=float, default=1.0)
    a = asy_sub.add_parser("window")
    a.add_argument("--m", type=int, required=True)
    a.add_argument("--n", type=int, required=True)
    a.add_argument("--order", type=int, default=3)
    a.add_argument("--s", type=float, default=1.0)
    a = asy_sub.add_parser("proportion")
    a.add_argument("--parts", type=parse_parts, required=True)
    a.add_argument("--alphas", type=parse_alphas, default=None)
    a.add_argument("--s", type=float, default=1.0)
    a = asy_sub.add_parser("blowup")
    a.add_argument("--base", choices=("complete", "cycle"), required=True)
    a.add_argument("--p", type=int, required=True)
    a.add_argument("--N", type=int, required=True)
    a.add_argument("--s", type=float, default=1.0)
    a = asy_sub.add_parser("far-tail")
    a.add_argument("--A", type=float, required=True)
    a.add_argument("--distinct", action="store_true")

    mc = sub.add_parser("mc", help="Monte-Carlo estimators")
    mc_sub = mc.add_subparsers(dest="mc_command", required=True)
    runs = mc_sub.add_parser("runs")
    runs.add_argument("--parts", type=parse_parts, required=True)
    runs.add_argument("--samples", type=int, required=True)
    runs.add_argument("--seed", type=int, required=True,
                      help="mandatory: runs are reproducible, never wall-clock seeded")

    ver = sub.add_parser("verify", help="recompute embedded reference tables")
    ver.add_argument("selection", help="table id or 'all'")
    ver.add_argument("--json", action="store_true", dest="as_json")

    return parser


def _run(args: argparse.Namespace) -> int:
    if args.command == "exact":
        if args.exact_command == "ao":
            print(ao_exact(args.parts))
        elif args.exact_command == "chromatic":
            print(chromatic_eval(args.parts, args.q))
        else:
            print(h_s_exact(args.parts, args.s))
        return 0
    if args.command == "closed-form":
        print(ao_one_large_part(args.large, args.n))
        return 0
    if args.command == "partition-sum":
        max_part = args.max_part
        if args.R is not None:
            max_part = int(args.R * math.sqrt(args.n))
        def progress(k: int, k_max: int) -> None:
            print(f"part size {k}/{k_max}", file=sys.stderr)
        print(partition_sum(args.n, distinct=args.distinct,
                            max_part=max_part, progress=progress))
        return 0
    if args.command == "quadratic-model":
        result = quadratic_model(args.n, distinct=args.distinct, eta=args.eta)
        print(f"log_Z {_fmt(result.log_Z)}")
        print(f"log_Z_per_sqrt_n {_fmt(result.log_Z / math.sqrt(args.n))}")
        return 0
    if args.command == "constants":
        problem = SaddleProblem(kind=args.kind, R=args.R, eta=args.eta)
        result = solve_saddle(problem)
        print(f"c {result.a_star:.12f}")
        print(f"C {result.C_value:.12f}")
        return 0
    if args.command == "asymptotic":
        return _run_asymptotic(args)
    if args.command == "mc":
        est = random_runs_estimate(args.parts, args.samples, args.seed)
        print(f"mean {_fmt(est.mean)}")
        print(f"std_error {_fmt(est.std_error)}")
        print(f"samples {est.samples}")
        print(f"seed {est.seed}")
        return 0
    if args.command == "verify":
        start = time.perf_counter()
        names = None if args.selection == "all" else [args.selection]
        report = verify_tables(names)
        print(_report_json(report) if args.as_json else _report_text(report))
        print(f"wall time {time.perf_counter() - start:.2f}s", file=sys.stderr)
        return 0 if report.all_passed else 1
    raise AssertionError("unreachable")


def _run_asymptotic(args: argparse.Namespace) -> int:
    cmd = args.asy_command
    if cmd == "turan":
        _print_asymptotic(asy_turan(args.N, args.p))
    elif cmd == "tutte":
        _print_asymptotic(asy_turan_tutte(args.N, args.p, args.s))
    elif cmd == "fixed-part":
        _print_asymptotic(asy_fixed_part(args.k, args.r, args.s,
                                         corrected=not args.uncorrected))
    elif cmd == "profile":
        _print_asymptotic(asy_finite_profile(args.profile, args.s))
    elif cmd == "window":
        _print_asymptotic(asy_equal_window(args.m, args.n, args.order, args.s))
    elif cmd == "proportion":
        _print_asymptotic(asy_fixed_proportion(args.parts, args.alphas, args.s))
    elif cmd == "blowup":
        base = (BlowupBase.complete(args.p) if args.base == "complete"
                else BlowupBase.cycle(args.p))
        _print_asymptotic(blowup_vertex_transitive(base, args.N, args.s))
    else:
        print(_fmt(far_tail_bound(args.A, args.distinct)))
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _run(args)
    except KeyError as exc:
        print(f"error: {exc.args[0]}", file=sys.stderr)
        return 2
    except (ValueError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
