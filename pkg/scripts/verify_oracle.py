#!/usr/bin/env python3
"""Hammer the solver against the exhaustive oracle on random small instances.

Every trial draws a seeded instance (kinds cycle between uniform, duplicates
and clustered) and compares values for the unconstrained maximum and for both
objectives at every feasible first-set size.  Exits nonzero and dumps the
first counterexample if anything disagrees.
"""

from __future__ import annotations

import argparse
import sys

from linecut.cli import run_verify


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n-max", type=int, default=8)
    parser.add_argument("--trials", type=int, default=500)
    parser.add_argument("--seed", type=int, default=7)
    parser.add_argument("--workers", type=int, default=None,
                        help="process count (default: LINECUT_THREADS or all cores)")
    args = parser.parse_args()

    report = run_verify(args.n_max, args.trials, args.seed, workers=args.workers)
    sys.stdout.write(report.render())
    return 0 if report.ok else 1


if __name__ == "__main__":
    sys.exit(main())
