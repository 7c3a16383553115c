#!/usr/bin/env python3
"""Scan the equal-window residual R(n) and its rescaling n R(n).

For n parts of equal size m = n^power this compares the exact count
against the order-3 window prediction:

    R(n) = log AO(K_{m x n}) - log predicted(m, n)

As n grows, n R(n) settles toward a constant, which is the sharpest
visible check that the window exponent's gamma coefficients are right;
an error in any gamma_j would make n R(n) diverge at scale n^j.
"""
from __future__ import annotations

import argparse
import math
import sys

from aocount.asymptotics import asy_equal_window
from aocount.exact import ao_exact


def residual(m: int, n: int, order: int) -> float:
    exact_log = math.log(ao_exact((m,) * n))
    return exact_log - asy_equal_window(m, n, order=order).log_value


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--power", type=int, choices=(1, 2, 3), default=2,
                        help="part size m = n^power (default 2)")
    parser.add_argument("--start", type=int, default=3,
                        help="first n in the scan (default 3)")
    parser.add_argument("--stop", type=int, default=8,
                        help="last n, inclusive; m = n^power grows fast (default 8)")
    parser.add_argument("--order", type=int, choices=(1, 2, 3, 4, 5), default=3,
                        help="window expansion order (default 3)")
    args = parser.parse_args(argv)
    if args.start < 2 or args.stop < args.start:
        parser.error("need 2 <= start <= stop")

    print(f"# m = n^{args.power}, order-{args.order} window prediction")
    print(f"{'n':>4} {'m':>6} {'N':>8} {'R':>16} {'n*R':>16}")
    for n in range(args.start, args.stop + 1):
        m = n ** args.power
        r = residual(m, n, args.order)
        print(f"{n:>4} {m:>6} {m * n:>8} {r:>16.12f} {n * r:>16.12f}")
        sys.stdout.flush()
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
