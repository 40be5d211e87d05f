"""Shared hypothesis strategies for the test suite."""

from hypothesis import strategies as st

from simplexcount import AffineUnimodularMap, MultiPoly

_VAR_NAMES = ("x", "y", "z")


@st.composite
def exponent_vectors(draw, nvars, max_degree=4):
    exp = draw(
        st.tuples(*[st.integers(0, max_degree)] * nvars).filter(
            lambda e: sum(e) <= max_degree
        )
    )
    return exp


@st.composite
def multipolys(draw, max_vars=3, max_degree=4, max_terms=6, allow_zero=False):
    nvars = draw(st.integers(1, max_vars))
    names = _VAR_NAMES[:nvars]
    nterms = draw(st.integers(0 if allow_zero else 1, max_terms))
    terms = {}
    for _ in range(nterms):
        exp = draw(exponent_vectors(nvars, max_degree))
        coeff = draw(st.integers(-5, 5).filter(bool))
        terms[exp] = coeff
    return MultiPoly(names, terms)


@st.composite
def unimodular_matrices(draw, n):
    """Random products of row swaps, sign flips, and integer shears."""
    m = [[int(i == j) for j in range(n)] for i in range(n)]
    ops = draw(
        st.lists(
            st.tuples(
                st.sampled_from(("swap", "neg", "shear")),
                st.integers(0, n - 1),
                st.integers(0, n - 1),
                st.integers(-3, 3),
            ),
            max_size=8,
        )
    )
    for kind, i, j, c in ops:
        if kind == "swap" and i != j:
            m[i], m[j] = m[j], m[i]
        elif kind == "neg":
            m[i] = [-x for x in m[i]]
        elif kind == "shear" and i != j and c:
            m[i] = [a + c * b for a, b in zip(m[i], m[j])]
    return tuple(tuple(row) for row in m)


@st.composite
def affine_unimodular_maps(draw, n, offset_bound=5):
    matrix = draw(unimodular_matrices(n))
    offset = draw(st.tuples(*[st.integers(-offset_bound, offset_bound)] * n))
    return AffineUnimodularMap(matrix=matrix, offset=offset)


@st.composite
def small_matrices(draw, max_rows=4, max_cols=4, bound=6):
    rows = draw(st.integers(1, max_rows))
    cols = draw(st.integers(1, max_cols))
    return tuple(
        tuple(draw(st.integers(-bound, bound)) for _ in range(cols))
        for _ in range(rows)
    )
