#!/usr/bin/env python3
"""Scan the partition-sum drift toward its limiting entropy constant.

For each n in the requested range this prints the normalized drift

    d(n) = (log B(n) - log n!) / sqrt(n)

for the unrestricted and distinct-part sums, next to the limiting
constants C and C_d from the saddle solve, and the remaining gaps.
The drift increases monotonely in n and the gaps shrink like log n /
sqrt(n), which this scan makes visible directly.
"""
from __future__ import annotations

import argparse
import math
import sys

from aocount.partition_sums import partition_sum
from aocount.saddle import SaddleProblem, solve_saddle


def drift(n: int, distinct: bool) -> float:
    total = partition_sum(n, distinct=distinct)
    return (math.log(total) - math.lgamma(n + 1)) / math.sqrt(n)


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--start", type=int, default=10,
                        help="first n in the scan (default 10)")
    parser.add_argument("--stop", type=int, default=200,
                        help="last n in the scan, inclusive (default 200)")
    parser.add_argument("--step", type=int, default=10,
                        help="spacing between scan points (default 10)")
    args = parser.parse_args(argv)
    if args.start < 1 or args.stop < args.start or args.step < 1:
        parser.error("need 1 <= start <= stop and step >= 1")

    cap = solve_saddle(SaddleProblem(kind="bose")).C_value
    cap_d = solve_saddle(SaddleProblem(kind="fermi")).C_value
    print(f"# limiting constants: C = {cap:.12f}  C_d = {cap_d:.12f}")
    print(f"{'n':>6} {'drift':>16} {'gap':>12} {'drift_d':>16} {'gap_d':>12}")
    for n in range(args.start, args.stop + 1, args.step):
        d = drift(n, distinct=False)
        dd = drift(n, distinct=True)
        print(f"{n:>6} {d:>16.10f} {cap - d:>12.8f} "
              f"{dd:>16.10f} {cap_d - dd:>12.8f}")
        sys.stdout.flush()
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
