import pytest
from hypothesis import given

from simplexcount import MultiPoly, PolyParseError, parse_polynomial, specialize, support
from strategies import multipolys


class TestParsing:
    def test_basic_sum(self):
        p = parse_polynomial("x^2*y + x + z^2 + t^3", vars=("x", "y", "z", "t"))
        assert p.terms == {
            (2, 1, 0, 0): 1,
            (1, 0, 0, 0): 1,
            (0, 0, 2, 0): 1,
            (0, 0, 0, 3): 1,
        }

    def test_coefficients_and_signs(self):
        p = parse_polynomial("-2x + 3y - z", vars=("x", "y", "z"))
        assert p.terms == {(1, 0, 0): -2, (0, 1, 0): 3, (0, 0, 1): -1}

    def test_star_optional(self):
        with_star = parse_polynomial("2*x*y", vars=("x", "y"))
        without = parse_polynomial("2x y", vars=("x", "y"))
        assert with_star == without

    def test_repeated_variable_multiplies(self):
        p = parse_polynomial("x*x + x^2*x^3", vars=("x",))
        assert p.terms == {(2,): 1, (5,): 1}

    def test_like_terms_accumulate(self):
        assert parse_polynomial("x + x", vars=("x",)).terms == {(1,): 2}
        assert parse_polynomial("x - x", vars=("x",)).is_zero()

    def test_equation_form(self):
        plain = parse_polynomial("x + y")
        assert parse_polynomial("x + y = 0") == plain
        assert parse_polynomial("x + y=0") == plain

    def test_leading_minus_with_space(self):
        p = parse_polynomial("- x + y", vars=("x", "y"))
        assert p.terms == {(1, 0): -1, (0, 1): 1}

    def test_constant_needs_declared_vars(self):
        assert parse_polynomial("7", vars=("x",)).terms == {(0,): 7}
        with pytest.raises(ValueError):
            parse_polynomial("7")

    def test_inferred_variable_order(self):
        p = parse_polynomial("y + x*y + x")
        assert p.vars == ("y", "x")
        assert p.terms == {(1, 0): 1, (1, 1): 1, (0, 1): 1}

    def test_identifier_is_greedy(self):
        p = parse_polynomial("xy + x*y")
        assert p.vars == ("xy", "x", "y")
        assert p.terms == {(1, 0, 0): 1, (0, 1, 1): 1}

    def test_unknown_variable_position(self):
        with pytest.raises(PolyParseError) as err:
            parse_polynomial("x + w", vars=("x", "y"))
        assert err.value.position == 4
        assert "unknown variable 'w'" in str(err.value)

    @pytest.mark.parametrize(
        "text",
        ["", "x +", "--x", "x^-2", "x^", "2 3", "x = 1", "x = 00", "x y +", "* ", "x*", "(x)"],
    )
    def test_rejects_malformed(self, text):
        with pytest.raises((PolyParseError, ValueError)):
            parse_polynomial(text, vars=("x", "y"))

    def test_error_carries_position(self):
        with pytest.raises(PolyParseError) as err:
            parse_polynomial("x + ^2", vars=("x",))
        assert "position" in str(err.value)
        assert isinstance(err.value.position, int)

    def test_exponent_message(self):
        with pytest.raises(PolyParseError, match="non-negative integer literal"):
            parse_polynomial("x^-2", vars=("x",))

    def test_zero_literal(self):
        assert parse_polynomial("0", vars=("x",)).is_zero()
        assert parse_polynomial("x - x = 0", vars=("x",)).is_zero()

    def test_duplicate_declared_vars_rejected(self):
        with pytest.raises(ValueError):
            parse_polynomial("x", vars=("x", "x"))

    def test_leading_star_tolerated(self):
        assert parse_polynomial("2 * x", vars=("x",)).terms == {(1,): 2}


class TestMultiPoly:
    def test_canonicalization_drops_zeros(self):
        p = MultiPoly(("x", "y"), {(1, 0): 1, (0, 1): 0})
        assert p.terms == {(1, 0): 1}

    def test_validation(self):
        with pytest.raises(ValueError):
            MultiPoly((), {})
        with pytest.raises(ValueError):
            MultiPoly(("x", "x"), {})
        with pytest.raises(ValueError):
            MultiPoly(("x",), {(1, 2): 1})
        with pytest.raises(ValueError):
            MultiPoly(("x",), {(-1,): 1})

    def test_total_degree(self):
        assert MultiPoly(("x",), {}).total_degree() == -1
        assert MultiPoly(("x", "y"), {(2, 3): 1, (4, 0): 1}).total_degree() == 5

    def test_coefficient_accessor(self):
        p = parse_polynomial("3x^2 - y", vars=("x", "y"))
        assert p.coefficient((2, 0)) == 3
        assert p.coefficient((0, 1)) == -1
        assert p.coefficient((1, 1)) == 0

    def test_str_zero(self):
        assert str(MultiPoly(("x",), {})) == "0"

    def test_str_formatting(self):
        p = parse_polynomial("-x^2 + 2*x*y - 3", vars=("x", "y"))
        assert str(p) == "-x^2 + 2*x*y - 3"

    def test_hash_and_eq(self):
        a = parse_polynomial("x + y")
        b = parse_polynomial("y + x", vars=("x", "y"))
        assert a == b
        assert hash(a) == hash(b)
        assert a != parse_polynomial("x - y")


class TestSupportAndSpecialize:
    def test_support_points(self):
        p = parse_polynomial("x^2*y + x", vars=("x", "y"))
        assert support(p).points == {(2, 1), (1, 0)}
        assert support(p).ambient_dim == 2

    def test_specialize_drops_terms(self):
        p = parse_polynomial("x*y + x + y + 1", vars=("x", "y"))
        q = specialize(p, [0])
        assert q.vars == ("x", "y")
        assert q.terms == {(1, 0): 1, (0, 0): 1}

    def test_specialize_empty_keep(self):
        p = parse_polynomial("x*y + 5", vars=("x", "y"))
        assert specialize(p, []).terms == {(0, 0): 5}

    def test_specialize_bad_index(self):
        p = parse_polynomial("x", vars=("x",))
        with pytest.raises(IndexError):
            specialize(p, [1])


class TestProperties:
    @given(multipolys())
    def test_str_round_trips(self, p):
        assert parse_polynomial(str(p), vars=p.vars) == p

    @given(multipolys(allow_zero=True))
    def test_specialize_full_keep_is_identity(self, p):
        assert specialize(p, range(p.num_vars)) == p

    @given(multipolys())
    def test_support_matches_terms(self, p):
        assert support(p).points == set(p.terms)

    @given(multipolys(allow_zero=True))
    def test_specialize_never_grows(self, p):
        assert len(specialize(p, [0]).terms) <= len(p.terms)
