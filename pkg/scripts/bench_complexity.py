#!/usr/bin/env python3
"""Measure how solve time grows with n and fit the growth exponent.

Times max-bisection on all-distinct uniform instances (the densest regime:
every point is its own level) and prints the bench CSV plus the fitted
log-log slope.  The per-level transition scan is bounded by the previous
level's multiplicity, so the expected exponent is about 3.
"""

from __future__ import annotations

import argparse
import csv
import sys

from linecut.cli import CSV_FIELDS, run_bench


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", type=int, nargs="+", default=[100, 200, 400])
    parser.add_argument("--trials", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    records, slope = run_bench(args.sizes, args.trials, args.seed)
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(CSV_FIELDS)
    for record in records:
        writer.writerow(record.row())
    print(f"# log-log slope: {slope:.4f}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
