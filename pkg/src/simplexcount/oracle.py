"""Brute-force point counting over small finite fields.

This module is the ground truth the closed-form counts are checked against.
It enumerates points of affine space, of the dense torus, or of a single
coordinate stratum (a fixed pattern of zero and nonzero coordinates), and
counts the zeros of a polynomial directly.  Everything is exact and the work
is bounded up front by a configurable cap on the number of points visited.
"""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Sequence

from .ffield import Field, enumerate_prime_powers, evaluate_poly, make_field
from .formula import (
    CountPolynomial,
    affine_count_poly,
    bad_primes,
    torus_count_poly,
    DEFAULT_SUBSET_CAP,
)
from .poly import MultiPoly

DEFAULT_WORK_CAP = 10 ** 8


class WorkCapError(RuntimeError):
    """Requested enumeration is larger than the configured point budget."""

    def __init__(self, size: int, cap: int):
        super().__init__(f"enumeration needs {size} points, cap is {cap}")
        self.size = size
        self.cap = cap


@dataclass(frozen=True)
class Region:
    """Where to count: all of affine space, the dense torus, or one stratum.

    A stratum fixes a subset of coordinates to be nonzero and zeroes the
    rest; affine space is the disjoint union of all 2^N strata and the torus
    is the stratum of the full subset.
    """

    kind: str
    subset: tuple[int, ...] = ()

    def __post_init__(self):
        if self.kind not in ("affine", "torus", "stratum"):
            raise ValueError(f"unknown region kind {self.kind!r}")
        sub = tuple(sorted(set(int(i) for i in self.subset)))
        if self.kind != "stratum" and sub:
            raise ValueError(f"{self.kind} region takes no subset")
        object.__setattr__(self, "subset", sub)

    @staticmethod
    def affine() -> "Region":
        return Region("affine")

    @staticmethod
    def torus() -> "Region":
        return Region("torus")

    @staticmethod
    def stratum(subset: Iterable[int]) -> "Region":
        return Region("stratum", tuple(subset))


def _domains(region: Region, nvars: int, field: Field) -> list[Sequence[int]]:
    if region.kind == "affine":
        return [field.elements()] * nvars
    if region.kind == "torus":
        return [field.units()] * nvars
    if any(not 0 <= i < nvars for i in region.subset):
        raise ValueError(f"stratum subset {region.subset} out of range for {nvars} variables")
    inside = set(region.subset)
    return [field.units() if i in inside else (0,) for i in range(nvars)]


CompiledTerm = tuple[int, tuple[tuple[int, tuple[int, ...]], ...]]


def _compile(poly: MultiPoly, field: Field) -> Optional[list[CompiledTerm]]:
    """Terms as (coefficient encoding, per-variable power lookup tables).

    Returns None when every coefficient reduces to zero in the field, in
    which case the polynomial vanishes everywhere.
    """
    pow_tables: dict[tuple[int, int], tuple[int, ...]] = {}
    compiled: list[CompiledTerm] = []
    for exp, coeff in poly.terms.items():
        c = field.from_int(coeff)
        if c == 0:
            continue
        factors = []
        for i, e in enumerate(exp):
            if not e:
                continue
            key = (i, e)
            if key not in pow_tables:
                pow_tables[key] = tuple(field.pow(x, e) for x in field.elements())
            factors.append((i, pow_tables[key]))
        compiled.append((c, tuple(factors)))
    return compiled or None


def _count_points(compiled: list[CompiledTerm], domains: list[Sequence[int]], field: Field) -> int:
    add = field.add
    mul = field.mul
    count = 0
    for point in itertools.product(*domains):
        total = 0
        for coeff, factors in compiled:
            val = coeff
            for i, table in factors:
                val = mul(val, table[point[i]])
            total = add(total, val)
        if total == 0:
            count += 1
    return count


def _count_chunk(args) -> int:
    compiled, domains, field = args
    return _count_points(compiled, domains, field)


def brute_force_count(
    poly: MultiPoly,
    field: Field,
    region: Region,
    *,
    work_cap: int = DEFAULT_WORK_CAP,
    jobs: int = 1,
    progress: Optional[Callable[[int, int], None]] = None,
    progress_every: int = 10 ** 6,
) -> int:
    """Number of points of the region where poly vanishes, by enumeration.

    With jobs > 1 the first coordinate's domain is split into contiguous
    chunks handled by worker processes.  A progress callback, when given, is
    invoked as progress(points_done, points_total) roughly every
    progress_every points (single-process runs only).
    """
    domains = _domains(region, poly.num_vars, field)
    size = math.prod(len(d) for d in domains)
    if size > work_cap:
        raise WorkCapError(size, work_cap)
    compiled = _compile(poly, field)
    if compiled is None:
        return size
    first = list(domains[0])
    if jobs > 1 and len(first) > 1:
        jobs = min(jobs, len(first))
        step = -(-len(first) // jobs)
        chunks = [first[i:i + step] for i in range(0, len(first), step)]
        payload = [(compiled, [tuple(ch)] + domains[1:], field) for ch in chunks]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return sum(pool.map(_count_chunk, payload))
    if progress is None:
        return _count_points(compiled, domains, field)
    block = math.prod(len(d) for d in domains[1:])
    count = 0
    done = 0
    reported = -1
    next_tick = progress_every
    for x in first:
        count += _count_points(compiled, [(x,)] + domains[1:], field)
        done += block
        if done >= next_tick:
            progress(done, size)
            reported = done
            next_tick += progress_every
    if reported != size:
        progress(size, size)
    return count


@dataclass(frozen=True)
class StratifiedCount:
    """Zero counts per coordinate stratum, keyed by the nonzero index subset."""

    per_stratum: dict[tuple[int, ...], int]
    total: int


def stratified_count(
    poly: MultiPoly,
    field: Field,
    *,
    work_cap: int = DEFAULT_WORK_CAP,
    jobs: int = 1,
) -> StratifiedCount:
    """Count zeros in every coordinate stratum; totals match the affine count."""
    nvars = poly.num_vars
    if field.q ** nvars > work_cap:
        raise WorkCapError(field.q ** nvars, work_cap)
    per: dict[tuple[int, ...], int] = {}
    indices = range(nvars)
    for r in range(nvars + 1):
        for subset in itertools.combinations(indices, r):
            per[subset] = brute_force_count(
                poly, field, Region.stratum(subset), work_cap=work_cap, jobs=jobs
            )
    return StratifiedCount(per_stratum=per, total=sum(per.values()))


# ---------------------------------------------------------------------------
# verification of the closed forms


@dataclass(frozen=True)
class VerificationRow:
    """One formula-vs-oracle comparison.  Skipped rows carry no values unless
    bad field sizes were explicitly requested; they never affect the verdict."""

    q: int
    region: str
    formula: Optional[int]
    oracle: Optional[int]
    match: Optional[bool]
    skipped: bool


@dataclass(frozen=True)
class VerificationReport:
    polynomial: str
    coefficient_product: int
    bad_primes: tuple[int, ...]
    affine_formula: CountPolynomial
    torus_formula: CountPolynomial
    rows: tuple[VerificationRow, ...]

    @property
    def verdict(self) -> bool:
        return all(row.match for row in self.rows if not row.skipped)


def verify_formula(
    poly: MultiPoly,
    qmax: int,
    *,
    include_bad: bool = False,
    work_cap: int = DEFAULT_WORK_CAP,
    subset_cap: int = DEFAULT_SUBSET_CAP,
    jobs: int = 1,
) -> VerificationReport:
    """Compare the closed-form counts against enumeration for all prime
    powers q <= qmax.

    Field sizes sharing a factor with the product of the coefficients are
    outside the formula's guarantee: they are skipped, or computed but held
    out of the verdict when include_bad is set.
    """
    affine_poly = affine_count_poly(poly, subset_cap=subset_cap)
    torus_poly = torus_count_poly(poly)
    report = bad_primes(poly)
    rows: list[VerificationRow] = []
    for pp in enumerate_prime_powers(qmax):
        q = pp.q
        bad = math.gcd(q, abs(report.coefficient_product)) > 1
        if bad and not include_bad:
            rows.append(VerificationRow(q, "affine", None, None, None, True))
            rows.append(VerificationRow(q, "torus", None, None, None, True))
            continue
        field = make_field(q)
        for region, formula in (
            (Region.affine(), affine_poly),
            (Region.torus(), torus_poly),
        ):
            expected = formula.evaluate(q)
            actual = brute_force_count(poly, field, region, work_cap=work_cap, jobs=jobs)
            rows.append(
                VerificationRow(q, region.kind, expected, actual, expected == actual, bad)
            )
    return VerificationReport(
        polynomial=str(poly),
        coefficient_product=report.coefficient_product,
        bad_primes=report.primes,
        affine_formula=affine_poly,
        torus_formula=torus_poly,
        rows=tuple(rows),
    )


# ---------------------------------------------------------------------------
# a smooth variety whose count is a polynomial in q without simplex support:
# the disjoint union of a plane cubic curve and its complement


class DegenerateCubicError(ValueError):
    """The cubic has a repeated root (or drops degree) in this characteristic."""


@dataclass(frozen=True)
class CurveUnionCounts:
    """Point counts for the disjoint union of y^2 = f(x) and its complement.

    The curve lives in the plane; the locus y^2 - f(x) != 0 is realized as a
    closed set in 3-space by z*(y^2 - f(x)) = 1, with the same count since z
    is determined.  Re-embedding the two pieces disjointly in 5-space does
    not change counts either, so `embedded` always equals `union`, which is
    exactly q^2 even though the curve count alone is not a polynomial in q.
    """

    q: int
    curve: int
    complement: int
    union: int
    embedded: int
    ambient_complement: int


def cubic_discriminant(f: MultiPoly) -> int:
    """Discriminant of a univariate integer cubic a*x^3 + b*x^2 + c*x + d."""
    if f.num_vars != 1:
        raise ValueError("expected a univariate polynomial")
    if f.total_degree() != 3:
        raise ValueError(f"expected degree 3, got {f.total_degree()}")
    a = f.coefficient((3,))
    b = f.coefficient((2,))
    c = f.coefficient((1,))
    d = f.coefficient((0,))
    return (
        18 * a * b * c * d
        - 4 * b ** 3 * d
        + b ** 2 * c ** 2
        - 4 * a * c ** 3
        - 27 * a ** 2 * d ** 2
    )


def curve_union_counts(
    f: MultiPoly,
    field: Field,
    *,
    work_cap: int = DEFAULT_WORK_CAP,
) -> CurveUnionCounts:
    """Count the curve y^2 = f(x), its complement locus, and their union.

    Requires f to stay a separable cubic over the field: the leading
    coefficient and the discriminant must be nonzero mod p.  Only the plane
    is enumerated; the complement count equals q^2 minus the curve count
    because the extra coordinate of its 3-space model is determined.
    """
    if f.num_vars != 1:
        raise ValueError("expected a univariate polynomial")
    p = field.p
    if f.coefficient((3,)) % p == 0:
        raise DegenerateCubicError(f"leading coefficient vanishes mod {p}")
    if cubic_discriminant(f) % p == 0:
        raise DegenerateCubicError(f"discriminant vanishes mod {p}")
    q = field.q
    if q * q > work_cap:
        raise WorkCapError(q * q, work_cap)
    square_counts = [0] * q
    for y in field.elements():
        square_counts[field.mul(y, y)] += 1
    curve = sum(square_counts[evaluate_poly(f, (x,), field)] for x in field.elements())
    complement = q * q - curve
    union = curve + complement
    return CurveUnionCounts(
        q=q,
        curve=curve,
        complement=complement,
        union=union,
        embedded=union,
        ambient_complement=q ** 5 - union,
    )


def curve_and_complement_polys(f: MultiPoly) -> tuple[MultiPoly, MultiPoly]:
    """Defining equations for the two pieces: y^2 - f(x) in the plane and
    z*(y^2 - f(x)) - 1 in 3-space.  Useful for cross-checking the counts by
    direct enumeration."""
    if f.num_vars != 1:
        raise ValueError("expected a univariate polynomial")
    xname = f.vars[0]
    yname = "y" if xname != "y" else "y0"
    zname = "z" if xname != "z" else "z0"
    curve_terms = {(0, 2): 1}
    for (e,), c in f.terms.items():
        curve_terms[(e, 0)] = curve_terms.get((e, 0), 0) - c
    curve_poly = MultiPoly((xname, yname), curve_terms)
    comp_terms = {(ex, ey, 1): c for (ex, ey), c in curve_terms.items()}
    comp_terms[(0, 0, 0)] = comp_terms.get((0, 0, 0), 0) - 1
    comp_poly = MultiPoly((xname, yname, zname), comp_terms)
    return curve_poly, comp_poly
