#!/usr/bin/env python3
"""Run the formula-vs-oracle verification over the named fixtures.

Example:
    python3 scripts/verify_fixtures.py --qmax 9
"""

import argparse
import sys
import time

from simplexcount import (
    affine_count_poly,
    diagonal,
    fourfold,
    koras_russell,
    russell,
    verify_formula,
)


def fixture_list():
    return [
        ("russell", russell()),
        ("fourfold", fourfold()),
        ("diagonal 2 3", diagonal(2, 3)),
        ("diagonal 2 3 5", diagonal(2, 3, 5)),
        ("diagonal 3 4 5", diagonal(3, 4, 5)),
        ("koras_russell 2 3", koras_russell(2, 3)),
        ("koras_russell 2 3 5", koras_russell(2, 3, 5)),
    ]


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--qmax", type=int, default=7,
                        help="largest prime power to enumerate (default 7)")
    parser.add_argument("--jobs", type=int, default=1)
    args = parser.parse_args()

    failures = 0
    for name, poly in fixture_list():
        start = time.perf_counter()
        report = verify_formula(poly, args.qmax, jobs=args.jobs)
        elapsed = time.perf_counter() - start
        status = "pass" if report.verdict else "MISMATCH"
        print(f"{name:22s} affine={affine_count_poly(poly)!s:8s} "
              f"torus={report.torus_formula!s:28s} "
              f"q<={args.qmax} {status} ({elapsed:.2f}s)")
        if not report.verdict:
            failures += 1
            for row in report.rows:
                if row.match is False:
                    print(f"    q={row.q} {row.region}: "
                          f"formula={row.formula} oracle={row.oracle}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
