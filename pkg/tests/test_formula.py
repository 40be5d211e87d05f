import math

import pytest
from hypothesis import given, strategies as st

from simplexcount import (
    CountPolynomial,
    FDeltaTable,
    NotApplicableError,
    SubsetCapError,
    UnsupportedFaceError,
    affine_count_poly,
    bad_primes,
    f_delta,
    mobius_identity_check,
    parse_polynomial,
    russell,
    torus_count_poly,
    torus_share_poly,
)
from simplexcount import MultiPoly


class TestCountPolynomial:
    def test_trailing_zeros_stripped(self):
        assert CountPolynomial((1, 2, 0, 0)).coeffs == (1, 2)
        assert CountPolynomial((0, 0)).coeffs == ()

    def test_constructors(self):
        assert CountPolynomial.constant(5).coeffs == (5,)
        assert CountPolynomial.q_power(3).coeffs == (0, 0, 0, 1)

    def test_arithmetic(self):
        q = CountPolynomial.q_power(1)
        one = CountPolynomial.constant(1)
        assert (q - one) * (q + one) == CountPolynomial((-1, 0, 1))
        assert (q - one) ** 2 == CountPolynomial((1, -2, 1))
        assert 3 * q == CountPolynomial((0, 3))
        assert q * 0 == CountPolynomial()

    def test_pow_rejects_negative(self):
        with pytest.raises(ValueError):
            CountPolynomial.q_power(1) ** -1

    def test_evaluate(self):
        p = CountPolynomial((-3, 6, -4, 1))
        assert p.evaluate(4) == 64 - 64 + 24 - 3
        assert CountPolynomial().evaluate(10) == 0

    def test_str(self):
        assert str(CountPolynomial()) == "0"
        assert str(CountPolynomial((1,))) == "1"
        assert str(CountPolynomial((0, 1))) == "q"
        assert str(CountPolynomial((-3, 6, -4, 1))) == "q^3 - 4*q^2 + 6*q - 3"
        assert str(CountPolynomial((0, -1))) == "-q"

    def test_degree(self):
        assert CountPolynomial().degree == -1
        assert CountPolynomial((0, 0, 1)).degree == 2

    def test_coeff_strings(self):
        assert CountPolynomial((0, -1, 2)).coeff_strings() == ["0", "-1", "2"]

    @given(st.lists(st.integers(-9, 9), max_size=6), st.integers(-5, 5))
    def test_evaluate_matches_power_sum(self, coeffs, q):
        p = CountPolynomial(tuple(coeffs))
        assert p.evaluate(q) == sum(c * q ** i for i, c in enumerate(coeffs))


class TestTorusShare:
    def test_small_cases(self):
        assert torus_share_poly(0) == CountPolynomial((1,))
        assert torus_share_poly(1) == CountPolynomial()
        assert torus_share_poly(2) == CountPolynomial((-1, 1))
        assert torus_share_poly(3) == CountPolynomial((2, -3, 1))
        assert torus_share_poly(4) == CountPolynomial((-3, 6, -4, 1))

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            torus_share_poly(-1)

    @given(st.integers(1, 10), st.integers(2, 9))
    def test_matches_closed_expression(self, n, q):
        value = ((q - 1) ** n + (-1) ** n * (q - 1)) // q
        assert torus_share_poly(n).evaluate(q) == value

    def test_mobius_identity(self):
        for n in range(1, 13):
            assert mobius_identity_check(n)
        with pytest.raises(ValueError):
            mobius_identity_check(0)


class TestFDelta:
    def test_russell_table(self):
        table = f_delta(russell())
        assert dict(((r, n), f) for r, n, f in table.rows()) == {
            (0, 0): 1,
            (1, 0): 1,
            (1, 1): 3,
            (2, 1): 2,
            (2, 2): 4,
            (3, 2): 1,
            (3, 3): 3,
            (4, 4): 1,
        }
        assert table.total() == 16

    def test_zero_polynomial_counts_subsets(self):
        table = f_delta(MultiPoly(("x", "y", "z"), {}))
        assert table.f(0, 0) == 1
        assert table.f(1, 0) == 3
        assert table.f(2, 0) == 3
        assert table.f(3, 0) == 1

    def test_mixed_face_beyond_subset_size(self):
        table = f_delta(parse_polynomial("x*y + x + y"))
        assert table.f(2, 3) == 1

    def test_total_is_power_of_two(self):
        p = parse_polynomial("x^2*y + 3z - 4")
        assert f_delta(p).total() == 2 ** 3

    def test_subset_cap(self):
        p = parse_polynomial("x + y + z")
        with pytest.raises(SubsetCapError) as err:
            f_delta(p, subset_cap=2)
        assert err.value.num_vars == 3
        assert err.value.cap == 2

    def test_table_validation(self):
        with pytest.raises(ValueError):
            FDeltaTable(2, {(3, 0): 1})
        with pytest.raises(ValueError):
            FDeltaTable(2, {(1, -1): 1})
        with pytest.raises(ValueError):
            FDeltaTable(2, {(1, 1): -1})
        assert FDeltaTable(2, {(1, 1): 0}).entries == {}

    def test_rows_sorted_and_json(self):
        table = FDeltaTable(2, {(2, 1): 4, (0, 0): 1, (1, 1): 2})
        assert table.rows() == [(0, 0, 1), (1, 1, 2), (2, 1, 4)]
        assert table.to_json()[0] == {"r": "0", "n": "0", "f": "1"}

    def test_generating_text(self):
        table = FDeltaTable(2, {(1, 1): 2, (0, 0): 1})
        assert table.generating_text() == "2*x*y + 1"


class TestCountFormulas:
    def test_russell(self):
        assert str(affine_count_poly(russell())) == "q^3"
        assert str(torus_count_poly(russell())) == "q^3 - 4*q^2 + 6*q - 3"

    def test_linear_forms(self):
        p = parse_polynomial("x + y")
        assert str(affine_count_poly(p)) == "q"
        assert str(torus_count_poly(p)) == "q - 1"

    def test_unit_hyperplane_sums(self):
        # support equal to the simplex vertices themselves gives q^(N-1)
        for n in range(1, 6):
            names = tuple(f"x{i}" for i in range(n))
            terms = {tuple(int(i == j) for j in range(n)): 1 for i in range(n)}
            p = MultiPoly(names, terms)
            assert affine_count_poly(p) == CountPolynomial.q_power(n - 1)

    def test_not_applicable(self):
        with pytest.raises(NotApplicableError) as err:
            affine_count_poly(parse_polynomial("x^2 + y^2"))
        assert err.value.reason == "NonUnitInvariantFactor"
        with pytest.raises(NotApplicableError):
            torus_count_poly(parse_polynomial("x^2 + y^2"))

    def test_unsupported_face(self):
        # accepted support, but one subset keeps more terms than coordinates
        p = parse_polynomial("x*y + x + y", vars=("x", "y", "z"))
        with pytest.raises(UnsupportedFaceError) as err:
            affine_count_poly(p)
        assert (err.value.r, err.value.n) == (2, 3)

    def test_torus_count_is_share_of_ambient(self):
        p = russell()
        assert torus_count_poly(p) == torus_share_poly(p.num_vars)


class TestBadPrimes:
    def test_unit_product(self):
        report = bad_primes(russell())
        assert report.coefficient_product == 1
        assert report.primes == ()

    def test_composite_product(self):
        report = bad_primes(parse_polynomial("2x - 6y + 5z"))
        assert report.coefficient_product == -60
        assert report.primes == (2, 3, 5)

    def test_zero_polynomial(self):
        report = bad_primes(MultiPoly(("x",), {}))
        assert report.coefficient_product == 1
        assert report.primes == ()
