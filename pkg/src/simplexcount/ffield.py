"""Explicit finite fields F_q for small prime powers q = p^k.

Elements are encoded as the integers 0 .. q-1.  The integer c encodes the
residue polynomial sum(c_i * t^i) with c_i the base-p digits of c, least
significant first, modulo a chosen monic irreducible of degree k.  Encoding 0
is the zero element and encoding 1 is the multiplicative identity, for every
choice of modulus.  For k = 1 this is plain arithmetic mod p.

Fields up to 256 elements precompute full addition and multiplication tables,
which is what the brute-force counting loops hit.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence

FIELD_SIZE_BOUND = 1 << 16
_TABLE_LIMIT = 256

Coeffs = tuple[int, ...]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factorization(n: int) -> dict[int, int]:
    if n < 2:
        raise ValueError(f"{n} has no prime factorization")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


@dataclass(frozen=True)
class PrimePower:
    p: int
    k: int

    @property
    def q(self) -> int:
        return self.p ** self.k


def as_prime_power(q: int) -> PrimePower:
    """Split q into p^k, rejecting anything that is not a prime power."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    factors = prime_factorization(q)
    if len(factors) != 1:
        raise ValueError(f"{q} is not a prime power: it factors as {factors}")
    ((p, k),) = factors.items()
    return PrimePower(p, k)


def enumerate_prime_powers(qmax: int) -> list[PrimePower]:
    """All prime powers q with 2 <= q <= qmax, in increasing order of q."""
    if qmax < 2:
        raise ValueError("qmax must be at least 2")
    out = []
    for q in range(2, qmax + 1):
        factors = prime_factorization(q)
        if len(factors) == 1:
            ((p, k),) = factors.items()
            out.append(PrimePower(p, k))
    return out


# ---------------------------------------------------------------------------
# polynomial arithmetic over F_p, for building the modulus
#
# Coefficient tuples run from the constant term up, mirroring the digit
# encoding of field elements.


def _trim(c: Sequence[int]) -> Coeffs:
    i = len(c)
    while i and c[i - 1] == 0:
        i -= 1
    return tuple(c[:i])


def _poly_mod(a: Coeffs, m: Coeffs, p: int) -> Coeffs:
    """Remainder of a modulo monic m, coefficients mod p."""
    a = list(a)
    dm = len(m) - 1
    while len(a) > dm:
        lead = a[-1] % p
        if lead:
            for i in range(dm + 1):
                a[len(a) - 1 - dm + i] = (a[len(a) - 1 - dm + i] - lead * m[i]) % p
        a.pop()
    return _trim([x % p for x in a])


def _poly_mul(a: Coeffs, b: Coeffs, p: int) -> Coeffs:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def _is_irreducible(m: Coeffs, p: int) -> bool:
    """Trial division by every monic polynomial of degree 1 .. deg(m)//2."""
    deg = len(m) - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for lower in itertools.product(range(p), repeat=d):
            divisor = lower + (1,)
            if not _poly_divides(divisor, m, p):
                continue
            return False
    return True


def _poly_divides(d: Coeffs, a: Coeffs, p: int) -> bool:
    return not _poly_mod(a, d, p)


@lru_cache(maxsize=None)
def default_modulus(p: int, k: int) -> Coeffs:
    """Lexicographically smallest monic irreducible of degree k over F_p.

    Candidates are ordered by their coefficient tuple read from the constant
    term up.  For k = 1 this is the polynomial t, i.e. (0, 1).
    """
    if k == 1:
        return (0, 1)
    for lower in itertools.product(range(p), repeat=k):
        candidate = lower + (1,)
        if _is_irreducible(candidate, p):
            return candidate
    raise AssertionError(f"no irreducible of degree {k} over F_{p}")


# ---------------------------------------------------------------------------


def _digits(value: int, p: int, k: int) -> Coeffs:
    out = []
    for _ in range(k):
        out.append(value % p)
        value //= p
    return _trim(out)


def _undigits(coeffs: Coeffs, p: int) -> int:
    value = 0
    for c in reversed(coeffs):
        value = value * p + c
    return value


class Field:
    """Arithmetic in F_{p^k} on integer-encoded elements.

    A non-default modulus changes which integer encodes which residue
    polynomial, but never the field up to isomorphism, so any count that only
    depends on the field is modulus-independent.
    """

    def __init__(
        self,
        p: int,
        k: int = 1,
        modulus: Optional[Sequence[int]] = None,
        size_bound: int = FIELD_SIZE_BOUND,
    ):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if k < 1:
            raise ValueError("extension degree must be at least 1")
        q = p ** k
        if q > size_bound:
            raise ValueError(f"field size {q} exceeds bound {size_bound}")
        if modulus is None:
            mod = default_modulus(p, k)
        else:
            mod = tuple(int(c) % p for c in modulus)
            if len(mod) != k + 1 or mod[-1] != 1:
                raise ValueError(f"modulus must be monic of degree {k}, got {tuple(modulus)}")
            if not _is_irreducible(mod, p):
                raise ValueError(f"modulus {mod} is reducible over F_{p}")
        self.p = p
        self.k = k
        self.q = q
        self.modulus = mod
        self._add_table: Optional[list[list[int]]] = None
        self._mul_table: Optional[list[list[int]]] = None
        self._inv_table: Optional[list[int]] = None
        self._neg_table: Optional[list[int]] = None
        if q <= _TABLE_LIMIT:
            self._build_tables()

    # -- raw arithmetic on encodings

    def _add_raw(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.p
        da = _digits(a, self.p, self.k)
        db = _digits(b, self.p, self.k)
        n = max(len(da), len(db))
        da += (0,) * (n - len(da))
        db += (0,) * (n - len(db))
        return _undigits(_trim([(x + y) % self.p for x, y in zip(da, db)]), self.p)

    def _mul_raw(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a * b) % self.p
        prod = _poly_mul(_digits(a, self.p, self.k), _digits(b, self.p, self.k), self.p)
        return _undigits(_poly_mod(prod, self.modulus, self.p), self.p)

    def _build_tables(self):
        q = self.q
        add = [[self._add_raw(a, b) for b in range(q)] for a in range(q)]
        mul = [[self._mul_raw(a, b) for b in range(q)] for a in range(q)]
        neg = [0] * q
        inv = [0] * q
        for a in range(q):
            for b in range(q):
                if add[a][b] == 0:
                    neg[a] = b
                if a and mul[a][b] == 1:
                    inv[a] = b
        self._add_table = add
        self._mul_table = mul
        self._neg_table = neg
        self._inv_table = inv

    # -- public operations

    def check(self, a: int) -> int:
        if not 0 <= a < self.q:
            raise ValueError(f"{a} is not an element encoding in F_{self.q}")
        return a

    def add(self, a: int, b: int) -> int:
        if self._add_table is not None:
            return self._add_table[a][b]
        return self._add_raw(a, b)

    def neg(self, a: int) -> int:
        if self._neg_table is not None:
            return self._neg_table[a]
        if self.k == 1:
            return (-a) % self.p
        return _undigits(
            _trim([(-c) % self.p for c in _digits(a, self.p, self.k)]), self.p
        )

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self._mul_table is not None:
            return self._mul_table[a][b]
        return self._mul_raw(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        if self._inv_table is not None:
            return self._inv_table[a]
        return self.pow(a, self.q - 2)

    def pow(self, a: int, n: int) -> int:
        """a**n with 0**0 = 1; negative n inverts first."""
        if n < 0:
            a = self.inv(a)
            n = -n
        result = 1
        base = a
        while n:
            if n & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            n >>= 1
        return result

    def from_int(self, c: int) -> int:
        """Image of the rational integer c, i.e. c mod p under the encoding."""
        return c % self.p

    def elements(self) -> range:
        return range(self.q)

    def units(self) -> range:
        return range(1, self.q)

    def modulus_text(self) -> str:
        pieces = []
        for i in range(len(self.modulus) - 1, -1, -1):
            c = self.modulus[i]
            if not c:
                continue
            if i == 0:
                pieces.append(str(c))
            elif i == 1:
                pieces.append("t" if c == 1 else f"{c}*t")
            else:
                pieces.append(f"t^{i}" if c == 1 else f"{c}*t^{i}")
        return " + ".join(pieces) if pieces else "0"

    def describe(self) -> str:
        if self.k == 1:
            return f"F_{self.q} = Z/{self.p}"
        return f"F_{self.q} = F_{self.p}[t] / ({self.modulus_text()})"

    def to_json(self) -> dict:
        """JSON form with every number rendered as a decimal string."""
        return {
            "p": str(self.p),
            "k": str(self.k),
            "modulus": [str(c) for c in self.modulus],
        }

    def __repr__(self) -> str:
        return f"Field(p={self.p}, k={self.k}, q={self.q})"


@lru_cache(maxsize=None)
def make_field(q: int) -> Field:
    """Field of order q with the default modulus, cached per size."""
    pp = as_prime_power(q)
    return Field(pp.p, pp.k)


def evaluate_poly(poly, point: Sequence[int], field: Field) -> int:
    """Value of an integer MultiPoly at a tuple of field-element encodings."""
    if len(point) != poly.num_vars:
        raise ValueError(f"point has {len(point)} entries for {poly.num_vars} variables")
    total = 0
    for exp, coeff in poly.terms.items():
        val = field.from_int(coeff)
        for x, e in zip(point, exp):
            if e:
                val = field.mul(val, field.pow(x, e))
        total = field.add(total, val)
    return total
