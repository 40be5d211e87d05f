"""Closed-form point counts for hypersurfaces with unimodular simplex support.

Once the support of a polynomial H in N variables passes
:func:`~simplexcount.lattice.simplex_equivalence`, the number of zeros of H
over F_q is a polynomial in q that depends only on the combinatorics of which
coordinate subsets kill which terms.  This module builds that polynomial
exactly:

* :class:`CountPolynomial` is an integer polynomial in the single symbol q.
* :func:`torus_share_poly` is the count of zeros with all coordinates nonzero
  for an n-term polynomial whose support spans a unimodular simplex.
* :func:`f_delta` tabulates, for every subset S of coordinates, the size r of
  S and the number n of terms of H that survive setting the other coordinates
  to zero (measured through the dimension of their affine hull).
* :func:`affine_count_poly` sums the per-stratum counts into the full affine
  count, and :func:`torus_count_poly` gives the dense-torus count alone.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .lattice import affine_dim_points, simplex_equivalence, SupportSet
from .poly import MultiPoly, support


class NotApplicableError(ValueError):
    """The polynomial's support is not a unimodular simplex; no closed form."""

    def __init__(self, reason: str):
        super().__init__(f"no closed-form count: {reason}")
        self.reason = reason


class SubsetCapError(RuntimeError):
    """Subset enumeration would exceed the configured variable cap."""

    def __init__(self, num_vars: int, cap: int):
        super().__init__(
            f"{num_vars} variables means 2^{num_vars} coordinate subsets; cap is {cap}"
        )
        self.num_vars = num_vars
        self.cap = cap


class UnsupportedFaceError(RuntimeError):
    """A coordinate subset has more surviving terms than coordinates.

    The per-stratum formula multiplies by (q-1)^(r-n), so n > r would need a
    rational function of q.  Supports that pass the simplex test can still
    produce such subsets; the closed affine form does not cover them.
    """

    def __init__(self, r: int, n: int):
        super().__init__(
            f"subset of {r} coordinates keeps {n} spanning terms; "
            f"(q-1)^({r}-{n}) is not a polynomial"
        )
        self.r = r
        self.n = n


@dataclass(frozen=True)
class CountPolynomial:
    """Integer polynomial in q, coefficients listed from the constant term up."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        c = tuple(int(x) for x in self.coeffs)
        while c and c[-1] == 0:
            c = c[:-1]
        object.__setattr__(self, "coeffs", c)

    @staticmethod
    def constant(c: int) -> "CountPolynomial":
        return CountPolynomial((c,))

    @staticmethod
    def q_power(n: int) -> "CountPolynomial":
        return CountPolynomial((0,) * n + (1,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def evaluate(self, q: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * q + c
        return acc

    def __add__(self, other: "CountPolynomial") -> "CountPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return CountPolynomial(tuple(x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)))

    def __sub__(self, other: "CountPolynomial") -> "CountPolynomial":
        return self + CountPolynomial(tuple(-x for x in other.coeffs))

    def __mul__(self, other) -> "CountPolynomial":
        if isinstance(other, int):
            return CountPolynomial(tuple(x * other for x in self.coeffs))
        if not isinstance(other, CountPolynomial):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return CountPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return CountPolynomial(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "CountPolynomial":
        if n < 0:
            raise ValueError("negative power of a count polynomial")
        result = CountPolynomial((1,))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def coeff_strings(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        pieces = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            elif i == 1:
                body = "q" if mag == 1 else f"{mag}*q"
            else:
                body = f"q^{i}" if mag == 1 else f"{mag}*q^{i}"
            if not pieces:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(pieces)


Q_MINUS_ONE = CountPolynomial((-1, 1))


def torus_share_poly(n: int) -> CountPolynomial:
    """Zeros with all coordinates nonzero of an n-term simplex-support form.

    Equals ((q-1)^n + (-1)^n (q-1)) / q for n >= 1, which is an integer
    polynomial; by convention the empty product case n = 0 gives 1.
    """
    if n < 0:
        raise ValueError("term count must be nonnegative")
    if n == 0:
        return CountPolynomial.constant(1)
    numerator = Q_MINUS_ONE ** n + (Q_MINUS_ONE * ((-1) ** n))
    if numerator.coeffs and numerator.coeffs[0] != 0:
        raise AssertionError("torus share numerator must be divisible by q")
    return CountPolynomial(numerator.coeffs[1:])


def mobius_identity_check(n: int) -> bool:
    """Whether sum_k binom(n,k) * torus_share_poly(k) equals q^(n-1).

    This is the consistency identity tying the per-stratum torus counts back
    to the count of the full hyperplane section; it should hold for every n.
    """
    if n < 1:
        raise ValueError("needs at least one variable")
    total = CountPolynomial()
    for k in range(n + 1):
        total = total + math.comb(n, k) * torus_share_poly(k)
    return total == CountPolynomial.q_power(n - 1)


@dataclass(frozen=True)
class FDeltaTable:
    """Counts f[(r, n)] of coordinate subsets by size and surviving dimension.

    For each subset S of the N coordinates, r = |S| and n - 1 is the affine
    dimension of the exponent vectors that survive setting the variables
    outside S to zero (n = 0 when nothing survives).  Only nonzero counts are
    stored.  The table always satisfies sum of all entries = 2^N.
    """

    ambient_dim: int
    entries: dict[tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for (r, n), f in self.entries.items():
            if not 0 <= r <= self.ambient_dim:
                raise ValueError(f"subset size {r} out of range")
            if n < 0:
                raise ValueError(f"negative dimension count n={n}")
            if f < 0:
                raise ValueError(f"negative multiplicity f={f}")
            if f:
                clean[(int(r), int(n))] = int(f)
        object.__setattr__(self, "entries", clean)

    def f(self, r: int, n: int) -> int:
        return self.entries.get((r, n), 0)

    def rows(self) -> list[tuple[int, int, int]]:
        return [(r, n, f) for (r, n), f in sorted(self.entries.items())]

    def total(self) -> int:
        return sum(self.entries.values())

    def generating_text(self) -> str:
        """Render as a two-variable polynomial, x marking r and y marking n."""
        poly = MultiPoly(("x", "y"), {(r, n): f for (r, n), f in self.entries.items()})
        return str(poly)

    def to_json(self) -> list[dict[str, str]]:
        return [{"r": str(r), "n": str(n), "f": str(f)} for r, n, f in self.rows()]


DEFAULT_SUBSET_CAP = 24


def f_delta(p: MultiPoly, subset_cap: int = DEFAULT_SUBSET_CAP) -> FDeltaTable:
    """Tabulate subset sizes against surviving term dimensions for p.

    Walks all 2^N coordinate subsets (N = number of variables), so N is
    capped; raise the cap explicitly to go past 24 variables.
    """
    nvars = p.num_vars
    if nvars > subset_cap:
        raise SubsetCapError(nvars, subset_cap)
    exponents = list(p.terms)
    masks = [sum(1 << i for i, e in enumerate(exp) if e) for exp in exponents]
    entries: dict[tuple[int, int], int] = {}
    for s in range(1 << nvars):
        surviving = [exp for exp, m in zip(exponents, masks) if m & ~s == 0]
        r = s.bit_count()
        n = affine_dim_points(surviving) + 1
        key = (r, n)
        entries[key] = entries.get(key, 0) + 1
    return FDeltaTable(nvars, entries)


def _checked(p: MultiPoly) -> SupportSet:
    sup = support(p)
    verdict = simplex_equivalence(sup)
    if not verdict.accepted:
        raise NotApplicableError(verdict.reason)
    return sup


def torus_count_poly(p: MultiPoly) -> CountPolynomial:
    """Count of zeros of p with every coordinate nonzero, as a polynomial in q."""
    _checked(p)
    return torus_share_poly(p.num_vars)


def affine_count_poly(p: MultiPoly, subset_cap: int = DEFAULT_SUBSET_CAP) -> CountPolynomial:
    """Count of zeros of p over all of affine space, as a polynomial in q.

    Sums torus_share_poly(n) * (q-1)^(r-n) weighted by the subset table.
    Requires n <= r in every row; see :class:`UnsupportedFaceError`.
    """
    _checked(p)
    table = f_delta(p, subset_cap=subset_cap)
    total = CountPolynomial()
    for r, n, f in table.rows():
        if n > r:
            raise UnsupportedFaceError(r, n)
        total = total + f * (torus_share_poly(n) * Q_MINUS_ONE ** (r - n))
    return total


@dataclass(frozen=True)
class BadPrimeReport:
    """Product of the nonzero coefficients and its prime divisors.

    The closed-form counts are only asserted for prime powers q coprime to
    this product.  The product keeps its sign; the primes divide |product|.
    """

    coefficient_product: int
    primes: tuple[int, ...]


def bad_primes(p: MultiPoly) -> BadPrimeReport:
    product = 1
    for c in p.terms.values():
        product *= c
    return BadPrimeReport(coefficient_product=product, primes=_prime_divisors(abs(product)))


def _prime_divisors(n: int) -> tuple[int, ...]:
    if n <= 1:
        return ()
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return tuple(out)
