"""Command-line interface.

Subcommands:

* ``analyze``  decide simplex equivalence, print witness, table, and counts
* ``verify``   check the closed-form counts against brute force up to a bound
* ``count``    brute-force count of one region over one finite field
* ``fdelta``   print the subset table for any polynomial
* ``fixture``  print a named example, or the curve-union count table

Exit codes: 0 success, 1 usage or parse error, 2 input outside the method's
scope, 3 formula/oracle mismatch, 4 work or subset cap exceeded.  All numbers
in JSON output are decimal strings so consumers never lose precision.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Optional, Sequence

from .ffield import as_prime_power, is_prime, make_field
from .fixtures import build_fixture, default_cubic, NAMED_FIXTURES
from .formula import (
    affine_count_poly,
    bad_primes,
    f_delta,
    torus_count_poly,
    CountPolynomial,
    DEFAULT_SUBSET_CAP,
    NotApplicableError,
    SubsetCapError,
    UnsupportedFaceError,
)
from .lattice import matrix_to_json, simplex_equivalence, vector_to_json
from .oracle import (
    brute_force_count,
    curve_union_counts,
    verify_formula,
    DegenerateCubicError,
    DEFAULT_WORK_CAP,
    Region,
    WorkCapError,
)
from .poly import parse_polynomial, support, MultiPoly, PolyParseError

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NOT_APPLICABLE = 2
EXIT_MISMATCH = 3
EXIT_CAP = 4


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse exits with 2 on bad usage; this CLI reserves 2, so raise."""

    def error(self, message):
        raise _UsageError(message)


def build_parser() -> _Parser:
    parser = _Parser(prog="simplexcount", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add_poly_arguments(p):
        p.add_argument(
            "input",
            nargs="+",
            help="polynomial text, or: fixture NAME [EXPONENT...]",
        )
        p.add_argument("--vars", help="comma-separated variable names, in order")

    def add_format(p):
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("analyze", help="decide simplex equivalence and print the counts")
    add_poly_arguments(p)
    add_format(p)
    p.add_argument("--subset-cap", type=int, default=DEFAULT_SUBSET_CAP)

    p = sub.add_parser("verify", help="check the formulas against brute force")
    add_poly_arguments(p)
    add_format(p)
    p.add_argument("--qmax", type=int, default=9, help="largest prime power to test")
    p.add_argument("--include-bad", action="store_true",
                   help="also compute rows for excluded field sizes")
    p.add_argument("--subset-cap", type=int, default=DEFAULT_SUBSET_CAP)
    p.add_argument("--work-cap", type=int, default=DEFAULT_WORK_CAP)
    p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("count", help="brute-force count of one region at one q")
    add_poly_arguments(p)
    add_format(p)
    p.add_argument("--q", required=True, help="prime power, e.g. 9 or 3^2")
    p.add_argument("--region", required=True, choices=("affine", "torus"))
    p.add_argument("--work-cap", type=int, default=DEFAULT_WORK_CAP)
    p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("fdelta", help="print the subset table for any polynomial")
    add_poly_arguments(p)
    add_format(p)
    p.add_argument("--subset-cap", type=int, default=DEFAULT_SUBSET_CAP)

    p = sub.add_parser("fixture", help="print a named example polynomial or table")
    p.add_argument("name", help=f"one of {sorted(NAMED_FIXTURES)} or curve-union")
    p.add_argument("exponents", nargs="*", type=int)
    add_format(p)
    p.add_argument("--f", default=None, help="cubic for curve-union, default x^3 - x")
    p.add_argument("--pmax", type=int, default=31, help="largest prime for curve-union")
    p.add_argument("--work-cap", type=int, default=DEFAULT_WORK_CAP)

    return parser


# ---------------------------------------------------------------------------
# shared helpers


def _parse_input(ns) -> MultiPoly:
    tokens: list[str] = ns.input
    if tokens[0] == "fixture":
        if len(tokens) < 2:
            raise _UsageError("fixture form needs a name: fixture NAME [EXPONENT...]")
        try:
            exponents = tuple(int(t) for t in tokens[2:])
        except ValueError:
            raise _UsageError(f"fixture exponents must be integers, got {tokens[2:]}")
        return build_fixture(tokens[1], exponents)
    text = " ".join(tokens)
    names = None
    if getattr(ns, "vars", None):
        names = tuple(v.strip() for v in ns.vars.split(",") if v.strip())
        if not names:
            raise _UsageError("--vars must name at least one variable")
    return parse_polynomial(text, vars=names)


_QPOWER_RE = re.compile(r"^(\d+)\^(\d+)$")


def _parse_q(text: str) -> int:
    m = _QPOWER_RE.match(text)
    if m:
        p, k = int(m.group(1)), int(m.group(2))
        if not is_prime(p) or k < 1:
            raise _UsageError(f"{text} is not a prime power")
        return p ** k
    try:
        q = int(text)
    except ValueError:
        raise _UsageError(f"cannot read field size {text!r}")
    try:
        as_prime_power(q)
    except ValueError as exc:
        raise _UsageError(str(exc))
    return q


def _count_json(c: Optional[CountPolynomial]):
    if c is None:
        return None
    return c.coeff_strings()


def _print_matrix(rows):
    width = max((len(str(x)) for row in rows for x in row), default=1)
    for row in rows:
        print("  [" + " ".join(str(x).rjust(width) for x in row) + "]")


def _emit(ns, payload: dict, text_lines: list[str]):
    if ns.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        for line in text_lines:
            print(line)


# ---------------------------------------------------------------------------
# subcommands


def cmd_analyze(ns) -> int:
    poly = _parse_input(ns)
    sup = support(poly)
    verdict = simplex_equivalence(sup)
    primes = bad_primes(poly)
    table = f_delta(poly, subset_cap=ns.subset_cap)

    torus: Optional[CountPolynomial] = None
    affine: Optional[CountPolynomial] = None
    affine_error: Optional[str] = None
    if verdict.accepted:
        torus = torus_count_poly(poly)
        try:
            affine = affine_count_poly(poly, subset_cap=ns.subset_cap)
        except UnsupportedFaceError as exc:
            affine_error = str(exc)

    payload = {
        "polynomial": str(poly),
        "variables": list(poly.vars),
        "n": str(poly.num_vars),
        "support": [vector_to_json(p) for p in sup.sorted_points()],
        "accepted": verdict.accepted,
        "reason": verdict.reason,
        "witness": None,
        "D": str(primes.coefficient_product),
        "primes": [str(p) for p in primes.primes],
        "f_delta": table.to_json(),
        "torus_count": _count_json(torus),
        "affine_count": _count_json(affine),
        "affine_count_error": affine_error,
    }
    if verdict.witness is not None:
        payload["witness"] = {
            "matrix": matrix_to_json(verdict.witness.map.matrix),
            "offset": vector_to_json(verdict.witness.map.offset),
            "vertex_order": [str(i) for i in verdict.witness.vertex_order],
        }

    if ns.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(f"polynomial: {poly}")
        print(f"variables: {', '.join(poly.vars)}")
        print(f"support points: {len(sup)}")
        if verdict.accepted:
            print("simplex-equivalent: yes")
            print("witness matrix:")
            _print_matrix(verdict.witness.map.matrix)
            print(f"witness offset: ({', '.join(str(x) for x in verdict.witness.map.offset)})")
        else:
            print("simplex-equivalent: no")
            print(f"reason: {verdict.reason}")
        print(f"coefficient product: {primes.coefficient_product}")
        if primes.primes:
            print(f"excluded characteristics: {', '.join(str(p) for p in primes.primes)}")
        else:
            print("excluded characteristics: none")
        print("subset table (r = subset size, n = surviving dimension + 1):")
        for r, n, f in table.rows():
            print(f"  r={r} n={n} f={f}")
        if torus is not None:
            print(f"torus count: {torus}")
        if affine is not None:
            print(f"affine count: {affine}")
        elif affine_error is not None:
            print(f"affine count unavailable: {affine_error}")

    if not verdict.accepted or affine_error is not None:
        return EXIT_NOT_APPLICABLE
    return EXIT_OK


def cmd_verify(ns) -> int:
    poly = _parse_input(ns)
    report = verify_formula(
        poly,
        ns.qmax,
        include_bad=ns.include_bad,
        work_cap=ns.work_cap,
        subset_cap=ns.subset_cap,
        jobs=ns.jobs,
    )
    payload = {
        "polynomial": report.polynomial,
        "D": str(report.coefficient_product),
        "primes": [str(p) for p in report.bad_primes],
        "rows": [
            {
                "q": str(row.q),
                "region": row.region,
                "formula": None if row.formula is None else str(row.formula),
                "oracle": None if row.oracle is None else str(row.oracle),
                "match": row.match,
                "skipped": row.skipped,
            }
            for row in report.rows
        ],
        "verdict": "pass" if report.verdict else "mismatch",
    }
    lines = [
        f"polynomial: {report.polynomial}",
        f"affine count: {report.affine_formula}",
        f"torus count: {report.torus_formula}",
        f"coefficient product: {report.coefficient_product}",
    ]
    for row in report.rows:
        if row.formula is None:
            lines.append(f"  q={row.q} {row.region}: skipped (shared factor)")
            continue
        status = "ok" if row.match else "MISMATCH"
        note = " [excluded]" if row.skipped else ""
        lines.append(
            f"  q={row.q} {row.region}: formula={row.formula} oracle={row.oracle} {status}{note}"
        )
    lines.append(f"verdict: {'pass' if report.verdict else 'mismatch'}")
    _emit(ns, payload, lines)
    return EXIT_OK if report.verdict else EXIT_MISMATCH


def cmd_count(ns) -> int:
    """Direct oracle access: enumerate one region over one field.

    No simplex hypothesis; any parseable polynomial counts fine.
    """
    poly = _parse_input(ns)
    q = _parse_q(ns.q)
    field = make_field(q)
    region = Region.affine() if ns.region == "affine" else Region.torus()
    value = brute_force_count(poly, field, region, work_cap=ns.work_cap, jobs=ns.jobs)
    payload = {
        "polynomial": str(poly),
        "q": str(q),
        "region": ns.region,
        "count": str(value),
        "field": field.to_json(),
    }
    _emit(ns, payload, [str(value)])
    return EXIT_OK


def cmd_fdelta(ns) -> int:
    poly = _parse_input(ns)
    table = f_delta(poly, subset_cap=ns.subset_cap)
    payload = {
        "polynomial": str(poly),
        "variables": list(poly.vars),
        "f_delta": table.to_json(),
        "generating_polynomial": table.generating_text(),
    }
    lines = [
        f"polynomial: {poly}",
        "subset table (r = subset size, n = surviving dimension + 1):",
    ]
    lines += [f"  r={r} n={n} f={f}" for r, n, f in table.rows()]
    lines.append(f"as polynomial in x (marking r) and y (marking n): {table.generating_text()}")
    _emit(ns, payload, lines)
    return EXIT_OK


def cmd_fixture(ns) -> int:
    if ns.name in ("curve-union", "curve_union"):
        return _cmd_curve_union(ns)
    if ns.f is not None:
        raise _UsageError("--f only applies to the curve-union fixture")
    poly = build_fixture(ns.name, tuple(ns.exponents))
    payload = {
        "name": ns.name,
        "polynomial": str(poly),
        "variables": list(poly.vars),
    }
    lines = [f"{poly}", f"variables: {', '.join(poly.vars)}"]
    _emit(ns, payload, lines)
    return EXIT_OK


def _cmd_curve_union(ns) -> int:
    if ns.exponents:
        raise _UsageError("curve-union takes no exponents; use --f and --pmax")
    cubic = default_cubic() if ns.f is None else parse_polynomial(ns.f, vars=("x",))
    rows = []
    skipped = []
    for p in range(2, ns.pmax + 1):
        if not is_prime(p):
            continue
        field = make_field(p)
        try:
            counts = curve_union_counts(cubic, field, work_cap=ns.work_cap)
        except DegenerateCubicError as exc:
            skipped.append((p, str(exc)))
            continue
        rows.append(counts)
    ok = all(
        c.union == c.q ** 2 and c.ambient_complement == c.q ** 5 - c.q ** 2
        for c in rows
    )
    payload = {
        "cubic": str(cubic),
        "rows": [
            {
                "p": str(c.q),
                "curve": str(c.curve),
                "complement": str(c.complement),
                "union": str(c.union),
                "expected_union": str(c.q ** 2),
                "ambient_complement": str(c.ambient_complement),
                "expected_ambient_complement": str(c.q ** 5 - c.q ** 2),
            }
            for c in rows
        ],
        "skipped": [{"p": str(p), "reason": r} for p, r in skipped],
        "verdict": "pass" if ok else "mismatch",
    }
    lines = [f"cubic: {cubic}"]
    for c in rows:
        lines.append(
            f"  p={c.q}: curve={c.curve} complement={c.complement} "
            f"union={c.union} (expect {c.q ** 2}) "
            f"ambient_complement={c.ambient_complement} (expect {c.q ** 5 - c.q ** 2})"
        )
    for p, reason in skipped:
        lines.append(f"  p={p}: skipped ({reason})")
    lines.append(f"verdict: {'pass' if ok else 'mismatch'}")
    _emit(ns, payload, lines)
    return EXIT_OK if ok else EXIT_MISMATCH


# ---------------------------------------------------------------------------


_COMMANDS = {
    "analyze": cmd_analyze,
    "verify": cmd_verify,
    "count": cmd_count,
    "fdelta": cmd_fdelta,
    "fixture": cmd_fixture,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
        return _COMMANDS[ns.command](ns)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except PolyParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NotApplicableError as exc:
        print(f"not applicable: {exc}", file=sys.stderr)
        return EXIT_NOT_APPLICABLE
    except (WorkCapError, SubsetCapError) as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except DegenerateCubicError as exc:
        print(f"not applicable: {exc}", file=sys.stderr)
        return EXIT_NOT_APPLICABLE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
