"""Exact scalar, polynomial and rational-function arithmetic."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fubini.exact import (
    BiPoly,
    Poly,
    RatFunc,
    compose_poly_rational,
    count_real_roots_nonpositive,
    format_rational,
    parse_rational,
    poly_divmod,
    poly_gcd,
    poly_str,
)

rationals = st.fractions(min_value=-10**6, max_value=10**6, max_denominator=1000)
small_rationals = st.fractions(min_value=-50, max_value=50, max_denominator=20)


def small_polys(max_degree=6):
    return st.lists(small_rationals, max_size=max_degree + 1).map(Poly)


class TestRationalText:
    def test_parse_plain_integers(self):
        assert parse_rational("13") == 13
        assert parse_rational("-4") == -4
        assert parse_rational("+7") == 7

    def test_parse_fractions(self):
        assert parse_rational("-3/7") == Fraction(-3, 7)
        assert parse_rational("10/4") == Fraction(5, 2)

    @pytest.mark.parametrize("bad", ["", "1.5", "3/-7", "1/0", " 1", "a", "1/2/3"])
    def test_rejects_non_literals(self, bad):
        with pytest.raises(ValueError):
            parse_rational(bad)

    def test_format_roundtrip(self):
        assert format_rational(Fraction(-3, 7)) == "-3/7"
        assert format_rational(Fraction(4, 2)) == "2"
        assert format_rational(5) == "5"

    @given(rationals)
    def test_roundtrip_is_identity(self, q):
        assert parse_rational(format_rational(q)) == q


class TestRationalArithmetic:
    @given(rationals, rationals, rationals)
    def test_field_axioms(self, a, b, c):
        assert (a + b) + c == a + (b + c)
        assert a * (b + c) == a * b + a * c

    def test_division_by_zero_raises(self):
        with pytest.raises(ZeroDivisionError):
            Fraction(1) / Fraction(0)


class TestPoly:
    def test_canonical_zero_is_empty(self):
        assert Poly([0, 0, 0]).coeffs == ()
        assert Poly().degree == -1
        assert Poly([1, 2, 0]).coeffs == (1, 2)

    def test_eval_zero_poly(self):
        assert Poly()(Fraction(5, 3)) == 0

    def test_eval_frozen_examples(self):
        assert Poly([0, 1, 2])(1) == 3  # matches the 2-element ordered-partition count
        assert Poly([0, 1, 2])(Fraction(-1, 2)) == 0

    def test_integrate_examples(self):
        assert Poly([1]).integrate(-1, 0) == 1
        assert Poly([0, 1, 2]).integrate(-1, 0) == Fraction(1, 6)
        assert Poly([0, 0, 0, 1]).integrate(-1, 0) == Fraction(-1, 4)

    def test_equality_after_expansion(self):
        assert Poly([0, 1]) * Poly([1, 2]) == Poly([0, 1, 2])

    def test_pow_and_compose(self):
        assert Poly([1, 1]) ** 3 == Poly([1, 3, 3, 1])
        assert Poly([0, 0, 1]).compose(Poly([1, 1])) == Poly([1, 2, 1])

    def test_derivative_antiderivative(self):
        p = Poly([3, 0, 5])
        assert p.antiderivative().derivative() == p

    @given(small_polys(), small_polys(), small_rationals)
    def test_eval_is_ring_homomorphism(self, p, q, y):
        assert (p * q)(y) == p(y) * q(y)
        assert (p + q)(y) == p(y) + q(y)

    @given(small_polys(), small_rationals, small_rationals, small_rationals)
    def test_integral_additive_over_intervals(self, p, a, b, c):
        assert p.integrate(a, b) + p.integrate(b, c) == p.integrate(a, c)

    @given(small_polys(4), small_polys(4))
    def test_divmod_invariant(self, a, b):
        if b.is_zero():
            return
        q, r = poly_divmod(a, b)
        assert q * b + r == a
        assert r.degree < b.degree

    @given(small_polys(4), small_polys(4))
    def test_gcd_divides_both(self, a, b):
        g = poly_gcd(a, b)
        if g.is_zero():
            assert a.is_zero() and b.is_zero()
            return
        assert g.leading_coefficient() == 1
        for p in (a, b):
            _, r = poly_divmod(p, g)
            assert r.is_zero()

    def test_str_rendering(self):
        assert poly_str(Poly([0, 1, 2]), "y") == "2y^2 + y"
        assert poly_str(Poly(), "y") == "0"
        assert poly_str(Poly([Fraction(-1, 2), 0, 1]), "t") == "t^2 - 1/2"


class TestBiPoly:
    def test_trimming(self):
        assert BiPoly([[0, 0], [0, 0]]).is_zero()
        assert BiPoly([[1, 0], [0, 0]]).rows == ((Fraction(1),),)

    def test_eval_linear(self):
        p = BiPoly([[0, 1], [1]])  # x + y
        assert p(1, Fraction(3, 7)) == Fraction(10, 7)

    def test_substitute_x_matches_eval(self):
        p = BiPoly([[1, 2], [0, 3], [4]])
        fixed = p.substitute_x(Fraction(2, 3))
        assert fixed(Fraction(5)) == p(Fraction(2, 3), Fraction(5))

    def test_substitute_y_matches_eval(self):
        p = BiPoly([[1, 2], [0, 3], [4]])
        fixed = p.substitute_y(Fraction(-1, 2))
        assert fixed(Fraction(3)) == p(Fraction(3), Fraction(-1, 2))

    def test_affine_substitution(self):
        p = BiPoly([[0, 1], [1]])  # x + y
        q = p.substitute(Poly([1, 1]), Poly([0, -1]))  # x -> x+1, y -> -y
        assert q == BiPoly([[1, -1], [1]])

    @given(small_rationals, small_rationals)
    def test_product_evaluates_pointwise(self, x, y):
        a = BiPoly([[1, 1], [2]])
        b = BiPoly([[0, 3], [1, 0], [5]])
        assert (a * b)(x, y) == a(x, y) * b(x, y)


class TestRatFunc:
    def test_normalize_common_factor(self):
        # (2l - 2) / (l^2 - 1) reduces to 2 / (l + 1)
        f = RatFunc(Poly([-2, 2]), Poly([-1, 0, 1]))
        assert f.num == Poly([2])
        assert f.den == Poly([1, 1])

    def test_already_canonical_unchanged(self):
        f = RatFunc(Poly([1]), Poly([-1, 1]))
        assert f.num == Poly([1])
        assert f.den == Poly([-1, 1])

    def test_zero_denominator_rejected(self):
        with pytest.raises(ZeroDivisionError):
            RatFunc(Poly([1]), Poly())

    def test_monic_denominator(self):
        f = RatFunc(Poly([3]), Poly([0, 2]))
        assert f.den.leading_coefficient() == 1
        assert f.num == Poly([Fraction(3, 2)])

    @given(small_polys(3), small_polys(3))
    def test_normalize_idempotent(self, num, den):
        if den.is_zero():
            return
        f = RatFunc(num, den)
        again = RatFunc(f.num, f.den)
        assert again == f

    def test_arithmetic_and_eval(self):
        f = RatFunc(Poly([1]), Poly([-1, 1]))
        g = f + f
        assert g(3) == 1
        with pytest.raises(ZeroDivisionError):
            f(1)

    def test_pow(self):
        f = RatFunc(Poly([1]), Poly([-1, 1]))
        assert (f**2).den == Poly([1, -2, 1])

    def test_compose_poly_rational(self):
        # substitute l/(1-l) into y^2 + y: l/(1-l)^2 after simplification
        arg = RatFunc(Poly([0, 1]), Poly([1, -1]))
        composed = compose_poly_rational(Poly([0, 1, 1]), arg)
        assert composed == RatFunc(Poly([0, 1]), Poly([1, -2, 1]))

    def test_equality_is_structural_on_canonical_form(self):
        a = RatFunc(Poly([0, 2]), Poly([0, 0, 2]))
        b = RatFunc(Poly([1]), Poly([0, 1]))
        assert a == b


class TestSturm:
    def test_no_roots(self):
        assert count_real_roots_nonpositive(Poly([1, 0, 1])) == 0  # x^2 + 1

    def test_root_at_zero_counts(self):
        assert count_real_roots_nonpositive(Poly([0, 1])) == 1

    def test_negative_roots(self):
        # (x+1)(x+2) has two roots in (-inf, 0]
        assert count_real_roots_nonpositive(Poly([2, 3, 1])) == 2

    def test_positive_roots_ignored(self):
        assert count_real_roots_nonpositive(Poly([-1, 1])) == 0  # root at +1

    def test_multiple_roots_counted_once(self):
        assert count_real_roots_nonpositive(Poly([1, 2, 1])) == 1  # (x+1)^2

    @given(st.lists(st.integers(min_value=-6, max_value=6), min_size=1, max_size=4))
    def test_counts_match_known_roots(self, roots):
        poly = Poly([1])
        for r in roots:
            poly = poly * Poly([-r, 1])
        expected = len({r for r in roots if r <= 0})
        assert count_real_roots_nonpositive(poly) == expected
