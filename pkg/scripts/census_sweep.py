#!/usr/bin/env python3
"""Sweep max-pile censuses over a range of lengths and print the atlas.

Example:
    python scripts/census_sweep.py --max 4 --orbits
"""

from __future__ import annotations

import argparse
import math
import time

from cdsgame import census, divisibility_report, format_permutation, parity_report


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--min", type=int, default=2)
    parser.add_argument("--max", type=int, default=4)
    parser.add_argument("--orbits", action="store_true")
    parser.add_argument("--threads", type=int, default=1)
    args = parser.parse_args()

    for n in range(args.min, args.max + 1):
        start = time.monotonic()
        report = census(n, include_orbits=args.orbits, max_n=args.max, threads=args.threads)
        elapsed = time.monotonic() - start
        m = 2 * n - 1
        top = math.comb(m, 2)
        print(f"\nlength {2 * n}: {report.total} max-pile permutations ({elapsed:.2f}s)")
        print(f"  context counts range over [{m}, {top}]")
        for k in sorted(report.histogram, reverse=True):
            marker = ""
            if k == top:
                marker = "  <- full count: cyclic shifts of the evens-then-odds family"
            elif k == top - 4:
                marker = "  <- one full orbit of the 4-2 swap family"
            elif k == m:
                marker = "  <- minimum: descending + halved-stride families"
            print(f"    k={k:3d}: {report.histogram[k]:5d}{marker}")
        div = divisibility_report(n, report)
        par = parity_report(n, report)
        print(
            "  checks:"
            f" periodic multiples {'ok' if div['periodic_multiple_ok'] else 'FAIL'},"
            f" coprime squares {'ok' if div['coprime_class_square_ok'] else 'FAIL'},"
            f" parity gap {'ok' if par['gap_ok'] else 'FAIL'}"
        )
        if report.orbits:
            print("  orbit atlas (representative, size, k):")
            for rep, size, k in report.orbits:
                print(f"    {format_permutation(rep):24s} {size:5d}  k={k}")


if __name__ == "__main__":
    main()
