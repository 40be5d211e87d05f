"""Exact integer linear algebra and unimodular equivalence to the standard simplex.

All arithmetic uses Python ints, so nothing here can overflow.  Matrices are
tuples of row tuples.  The central routine is :func:`simplex_equivalence`,
which decides whether a finite set of lattice points is the vertex set of an
image of the standard simplex under an invertible affine map of the lattice,
and constructs the witness map when it is.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

IntVector = tuple[int, ...]
IntMatrix = tuple[tuple[int, ...], ...]

WRONG_SUPPORT_SIZE = "WrongSupportSize"
WRONG_RANK = "WrongRank"
NON_UNIT_INVARIANT_FACTOR = "NonUnitInvariantFactor"


# ---------------------------------------------------------------------------
# matrices


def identity(n: int) -> IntMatrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def matrix_from_columns(cols: Sequence[IntVector], nrows: int) -> IntMatrix:
    for c in cols:
        if len(c) != nrows:
            raise ValueError(f"column of length {len(c)}, expected {nrows}")
    return tuple(tuple(c[i] for c in cols) for i in range(nrows))


def columns(m: IntMatrix) -> list[IntVector]:
    if not m:
        return []
    return [tuple(row[j] for row in m) for j in range(len(m[0]))]


def matmul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    if a and b and len(a[0]) != len(b):
        raise ValueError(f"cannot multiply {len(a)}x{len(a[0])} by {len(b)}x{len(b[0])}")
    bt = list(zip(*b)) if b else []
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def matvec(m: IntMatrix, v: IntVector) -> IntVector:
    if m and len(m[0]) != len(v):
        raise ValueError(f"matrix has {len(m[0])} columns, vector has {len(v)} entries")
    return tuple(sum(x * y for x, y in zip(row, v)) for row in m)


def det(m: IntMatrix) -> int:
    """Exact determinant via fraction-free (Bareiss) elimination."""
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("determinant requires a square matrix")
    if n == 0:
        return 1
    a = [list(row) for row in m]
    sign = 1
    prev = 1
    for t in range(n - 1):
        if a[t][t] == 0:
            for i in range(t + 1, n):
                if a[i][t] != 0:
                    a[t], a[i] = a[i], a[t]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(t + 1, n):
            for j in range(t + 1, n):
                a[i][j] = (a[i][j] * a[t][t] - a[i][t] * a[t][j]) // prev
            a[i][t] = 0
        prev = a[t][t]
    return sign * a[n - 1][n - 1]


def _rank(vectors: Iterable[IntVector]) -> int:
    """Rank over the rationals, by exact Gaussian elimination."""
    rows = [[Fraction(x) for x in v] for v in vectors]
    rank = 0
    col = 0
    width = len(rows[0]) if rows else 0
    while rank < len(rows) and col < width:
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if pivot is None:
            col += 1
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        pr = rows[rank]
        for i in range(rank + 1, len(rows)):
            if rows[i][col]:
                f = rows[i][col] / pr[col]
                rows[i] = [x - f * y for x, y in zip(rows[i], pr)]
        rank += 1
        col += 1
    return rank


def _inverse_unimodular(m: IntMatrix) -> IntMatrix:
    """Inverse of an integer matrix with determinant +-1 (integer entries)."""
    n = len(m)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(m)]
    for t in range(n):
        pivot = next((i for i in range(t, n) if aug[i][t]), None)
        if pivot is None:
            raise ValueError("matrix is singular")
        aug[t], aug[pivot] = aug[pivot], aug[t]
        pv = aug[t][t]
        aug[t] = [x / pv for x in aug[t]]
        for i in range(n):
            if i != t and aug[i][t]:
                f = aug[i][t]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[t])]
    out = []
    for row in aug:
        ints = []
        for x in row[n:]:
            if x.denominator != 1:
                raise ValueError("matrix is not unimodular: inverse is not integral")
            ints.append(int(x))
        out.append(tuple(ints))
    return tuple(out)


# ---------------------------------------------------------------------------
# point sets


@dataclass(frozen=True)
class SupportSet:
    """A finite set of lattice points in a fixed ambient dimension.

    Points may have negative entries: images under affine lattice maps stay
    representable even though polynomial exponent vectors never go negative.
    """

    ambient_dim: int
    points: frozenset[IntVector]

    def __post_init__(self):
        pts = frozenset(tuple(int(x) for x in p) for p in self.points)
        for p in pts:
            if len(p) != self.ambient_dim:
                raise ValueError(f"point {p} does not have length {self.ambient_dim}")
        object.__setattr__(self, "points", pts)

    def __len__(self) -> int:
        return len(self.points)

    def sorted_points(self) -> list[IntVector]:
        return sorted(self.points)


def standard_simplex(n: int) -> SupportSet:
    """Vertex set of the standard simplex: the n unit basis vectors of Z^n."""
    if n < 1:
        raise ValueError("ambient dimension must be at least 1")
    return SupportSet(n, frozenset(tuple(int(i == j) for j in range(n)) for i in range(n)))


def affine_dim(points: SupportSet) -> int:
    """Dimension of the affine hull: -1 for the empty set, 0 for a single point."""
    return affine_dim_points(points.points)


def affine_dim_points(points: Iterable[IntVector]) -> int:
    pts = sorted(points)
    if not pts:
        return -1
    base = pts[0]
    diffs = [tuple(x - b for x, b in zip(p, base)) for p in pts[1:]]
    if not diffs:
        return 0
    return _rank(diffs)


# ---------------------------------------------------------------------------
# Smith normal form


@dataclass(frozen=True)
class SNFResult:
    """Decomposition U*A*V = D with U, V unimodular and D diagonal.

    The diagonal entries are the invariant factors: nonnegative, and each
    divides the next.  The rank of A equals the number of nonzero entries.
    """

    U: IntMatrix
    D: IntMatrix
    V: IntMatrix

    @property
    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.D[i][i] for i in range(min(len(self.D), len(self.D[0]) if self.D else 0)))

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d)


def smith_normal_form(a: IntMatrix) -> SNFResult:
    """Smith normal form over the integers, with both transforms.

    Deterministic: the pivot is always the nonzero entry of smallest absolute
    value in the trailing block, scanning by rows.  Pivots are normalized to
    be positive, so the diagonal comes out nonnegative with the divisibility
    chain d1 | d2 | ... .
    """
    rows = len(a)
    cols = len(a[0]) if rows else 0
    if any(len(row) != cols for row in a):
        raise ValueError("ragged matrix")
    d = [list(row) for row in a]
    u = [list(row) for row in identity(rows)]
    v = [list(row) for row in identity(cols)]

    def swap_rows(i, j):
        d[i], d[j] = d[j], d[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in d:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]

    def add_row(i, j, f):
        # row_i += f * row_j
        d[i] = [x + f * y for x, y in zip(d[i], d[j])]
        u[i] = [x + f * y for x, y in zip(u[i], u[j])]

    def add_col(i, j, f):
        # col_i += f * col_j
        for r in d:
            r[i] += f * r[j]
        for r in v:
            r[i] += f * r[j]

    def negate_row(i):
        d[i] = [-x for x in d[i]]
        u[i] = [-x for x in u[i]]

    def find_pivot(t):
        best = None
        where = None
        for i in range(t, rows):
            for j in range(t, cols):
                x = d[i][j]
                if x and (best is None or abs(x) < best):
                    best = abs(x)
                    where = (i, j)
        return where

    for t in range(min(rows, cols)):
        if find_pivot(t) is None:
            break
        while True:
            i, j = find_pivot(t)
            if i != t:
                swap_rows(t, i)
            if j != t:
                swap_cols(t, j)
            if d[t][t] < 0:
                negate_row(t)
            p = d[t][t]
            dirty = False
            for i in range(t + 1, rows):
                if d[i][t]:
                    q = d[i][t] // p
                    if q:
                        add_row(i, t, -q)
                    if d[i][t]:
                        dirty = True
            for j in range(t + 1, cols):
                if d[t][j]:
                    q = d[t][j] // p
                    if q:
                        add_col(j, t, -q)
                    if d[t][j]:
                        dirty = True
            if dirty:
                continue
            # pivot row and column are clear; force the divisibility chain
            offender = None
            for i in range(t + 1, rows):
                if any(d[i][j] % p for j in range(t + 1, cols)):
                    offender = i
                    break
            if offender is None:
                break
            add_row(t, offender, 1)

    return SNFResult(
        U=tuple(tuple(row) for row in u),
        D=tuple(tuple(row) for row in d),
        V=tuple(tuple(row) for row in v),
    )


# ---------------------------------------------------------------------------
# Bezout certificates and basis completion


def bezout_vector(v: Sequence[int]) -> tuple[int, IntVector]:
    """gcd g of the entries of v, plus a certificate c with sum(c_i * v_i) = g."""
    if not v or all(x == 0 for x in v):
        raise ValueError("bezout_vector requires a nonzero vector")
    g = 0
    cert: list[int] = []
    for x in v:
        g2, a, b = _ext_gcd(g, x)
        cert = [a * c for c in cert]
        cert.append(b)
        g = g2
    return g, tuple(cert)


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, x, y) with g = gcd(a, b) >= 0 and a*x + b*y = g."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        old_r, old_x, old_y = -old_r, -old_x, -old_y
    return old_r, old_x, old_y


def unimodular_completion(b: IntMatrix) -> IntMatrix:
    """Extend the columns of b (N x k, k <= N) to a basis of Z^N.

    Returns an N x N matrix with determinant +-1 whose last k columns are the
    columns of b; the completing columns come first.  Requires the columns of
    b to be extendable, i.e. all invariant factors equal to 1.
    """
    nrows = len(b)
    if nrows == 0:
        raise ValueError("empty matrix")
    k = len(b[0])
    if k > nrows:
        raise ValueError(f"{k} columns cannot extend to a basis of Z^{nrows}")
    if k == 0:
        return identity(nrows)
    snf = smith_normal_form(b)
    diag = snf.diagonal
    if snf.rank < k or any(f != 1 for f in diag):
        bad = next(f for f in list(diag) + [0] * (k - len(diag)) if f != 1)
        raise ValueError(
            f"columns do not extend to a lattice basis: invariant factor {bad} != 1"
        )
    c = _inverse_unimodular(snf.U)
    w = _inverse_unimodular(snf.V)
    # First k columns of c * blockdiag(w, I) equal b; rotate them to the end.
    block = [[w[i][j] if i < k and j < k else int(i == j) for j in range(nrows)]
             for i in range(nrows)]
    m0 = matmul(c, tuple(tuple(row) for row in block))
    cols = columns(m0)
    return matrix_from_columns(cols[k:] + cols[:k], nrows)


# ---------------------------------------------------------------------------
# affine unimodular maps and the equivalence decision


@dataclass(frozen=True)
class AffineUnimodularMap:
    """The lattice-affine map x -> matrix*x + offset, with det(matrix) = +-1."""

    matrix: IntMatrix
    offset: IntVector

    def __post_init__(self):
        n = len(self.offset)
        if len(self.matrix) != n or any(len(row) != n for row in self.matrix):
            raise ValueError("matrix shape does not match offset length")

    def apply(self, point: IntVector) -> IntVector:
        return tuple(x + b for x, b in zip(matvec(self.matrix, point), self.offset))


@dataclass(frozen=True)
class SimplexWitness:
    """Explicit equivalence witness: map sends basis vector e_{order[i]+1} to
    the i-th point of the accepted support in sorted order."""

    map: AffineUnimodularMap
    vertex_order: tuple[int, ...]


@dataclass(frozen=True)
class EquivalenceVerdict:
    accepted: bool
    witness: Optional[SimplexWitness] = None
    reason: Optional[str] = None

    def __post_init__(self):
        if self.accepted and self.witness is None:
            raise ValueError("accepted verdict requires a witness")
        if not self.accepted and self.reason is None:
            raise ValueError("rejection requires a reason")


def apply_affine_map(m: AffineUnimodularMap, points: SupportSet) -> SupportSet:
    if len(m.offset) != points.ambient_dim:
        raise ValueError(
            f"map acts on Z^{len(m.offset)}, points live in Z^{points.ambient_dim}"
        )
    return SupportSet(points.ambient_dim, frozenset(m.apply(p) for p in points.points))


def simplex_equivalence(support: SupportSet, n: Optional[int] = None) -> EquivalenceVerdict:
    """Decide whether `support` is an affine unimodular image of the standard
    simplex vertex set in its ambient dimension.

    Acceptance needs exactly N points whose difference lattice is saturated:
    the matrix of differences from the lexicographically smallest point must
    have rank N-1 with every invariant factor equal to 1.  The witness is
    built by completing the difference columns to a basis of Z^N.
    """
    ambient = support.ambient_dim
    if n is not None and n != ambient:
        raise ValueError(f"declared dimension {n} != ambient dimension {ambient}")
    if ambient < 1:
        raise ValueError("ambient dimension must be at least 1")
    pts = support.sorted_points()
    if len(pts) != ambient:
        return EquivalenceVerdict(accepted=False, reason=WRONG_SUPPORT_SIZE)
    base = pts[0]
    diff_cols = [tuple(x - b for x, b in zip(p, base)) for p in pts[1:]]
    b = matrix_from_columns(diff_cols, ambient)
    snf = smith_normal_form(b)
    if snf.rank < ambient - 1:
        return EquivalenceVerdict(accepted=False, reason=WRONG_RANK)
    if any(f != 1 for f in snf.diagonal):
        return EquivalenceVerdict(accepted=False, reason=NON_UNIT_INVARIANT_FACTOR)
    q = unimodular_completion(b)
    # Solve for U with U*e_1 = (free column of q) and U*(e_j - e_1) = diff_{j-1};
    # the change of basis [e_1 | e_2 - e_1 | ...] has inverse I + ones in row 0.
    f = tuple(tuple(1 if i == 0 else int(i == j) for j in range(ambient))
              for i in range(ambient))
    u = matmul(q, f)
    offset = tuple(p - c for p, c in zip(base, columns(u)[0]))
    witness = SimplexWitness(
        map=AffineUnimodularMap(matrix=u, offset=offset),
        vertex_order=tuple(range(ambient)),
    )
    mapped = apply_affine_map(witness.map, standard_simplex(ambient))
    if mapped.points != support.points:
        raise AssertionError("witness construction failed to reproduce the support")
    return EquivalenceVerdict(accepted=True, witness=witness)


def matrix_to_json(m: IntMatrix) -> list[list[str]]:
    """Nested arrays of decimal strings, so consumers never overflow."""
    return [[str(x) for x in row] for row in m]


def vector_to_json(v: IntVector) -> list[str]:
    return [str(x) for x in v]
