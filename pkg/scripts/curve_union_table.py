#!/usr/bin/env python3
"""Tabulate point counts for the curve/complement disjoint union.

For each good prime p, prints the count of the affine curve y^2 = f(x), of
its complement realized by z*(y^2 - f(x)) = 1, their union (always p^2), and
the complement of the union in 5-space (always p^5 - p^2).  The last column,
p - curve, shows the curve count alone is not a polynomial in p.

Example:
    python3 scripts/curve_union_table.py --pmax 31
"""

import argparse
import sys

from simplexcount import (
    DegenerateCubicError,
    curve_union_counts,
    default_cubic,
    is_prime,
    make_field,
    parse_polynomial,
)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--f", default=None, help="cubic in x (default: x^3 - x)")
    parser.add_argument("--pmax", type=int, default=31)
    args = parser.parse_args()

    cubic = default_cubic() if args.f is None else parse_polynomial(args.f, vars=("x",))
    print(f"f = {cubic}")
    print(f"{'p':>4} {'curve':>8} {'complement':>12} {'union':>8} "
          f"{'5-space complement':>20} {'p - curve':>10}")
    for p in range(2, args.pmax + 1):
        if not is_prime(p):
            continue
        try:
            c = curve_union_counts(cubic, make_field(p))
        except DegenerateCubicError as exc:
            print(f"{p:>4} skipped: {exc}")
            continue
        print(f"{p:>4} {c.curve:>8} {c.complement:>12} {c.union:>8} "
              f"{c.ambient_complement:>20} {p - c.curve:>10}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
