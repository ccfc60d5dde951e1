"""Fubini polynomial family: constructions, routes, special values."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fubini.combinat import factorial
from fubini.exact import BiPoly, Poly
from fubini.polynomials import (
    fubini_number,
    fubini_number_bruteforce,
    fubini_number_split_sum,
    fubini_number_split_sum_neg2,
    fubini_poly,
    fubini_poly_recurrence,
    fubini_reflection_form,
    fubini_split_collapse,
    fubini_split_eval,
    fubini_two_var,
    fubini_two_var_eval,
    geometric_moment_partial_sum,
    ordered_partition_block_counts,
)

from oracles import ordered_partitions

# Frozen from the enumeration oracle (ordered set partitions of n elements).
FUBINI_NUMBERS = [1, 1, 3, 13, 75, 541, 4683, 47293, 545835, 7087261, 102247563]

small_rationals = st.fractions(min_value=-30, max_value=30, max_denominator=12)


class TestFubiniPoly:
    def test_first_polynomials(self):
        assert fubini_poly(0) == Poly([1])
        assert fubini_poly(1) == Poly([0, 1])
        assert fubini_poly(2) == Poly([0, 1, 2])
        assert fubini_poly(3) == Poly([0, 1, 6, 6])
        assert fubini_poly(4) == Poly([0, 1, 14, 36, 24])

    @pytest.mark.parametrize("n", range(30))
    def test_shape_invariants(self, n):
        poly = fubini_poly(n)
        assert poly.degree == n
        assert poly.leading_coefficient() == factorial(n)
        assert poly.coefficient(0) == (1 if n == 0 else 0)
        assert poly.is_integral()

    @pytest.mark.parametrize("n", range(41))
    def test_recurrence_route_agrees(self, n):
        assert fubini_poly(n) == fubini_poly_recurrence(n)

    @given(st.integers(min_value=0, max_value=20), small_rationals)
    def test_routes_agree_at_points(self, n, y):
        assert fubini_poly(n)(y) == fubini_poly_recurrence(n)(y)

    def test_even_indices_vanish_at_minus_half(self):
        for k in range(1, 11):
            assert fubini_poly(2 * k)(Fraction(-1, 2)) == 0

    def test_value_at_minus_two(self):
        for n in range(1, 15):
            assert fubini_poly(n)(-2) == (-1) ** n * 2 * fubini_number(n)


class TestFubiniNumbers:
    def test_frozen_values(self):
        assert [fubini_number(n) for n in range(11)] == FUBINI_NUMBERS

    @pytest.mark.parametrize("n", range(11))
    def test_bruteforce_agrees(self, n):
        assert fubini_number_bruteforce(n) == FUBINI_NUMBERS[n]

    def test_bruteforce_cap(self):
        with pytest.raises(ValueError):
            fubini_number_bruteforce(11)
        assert fubini_number_bruteforce(11, cap=11) == 1622632573

    @pytest.mark.parametrize("n", range(8))
    def test_block_counts_match_literal_generation(self, n):
        generated = ordered_partitions(n)
        counts = [0] * (n + 1)
        for partition in generated:
            counts[len(partition)] += 1
        assert list(ordered_partition_block_counts(n)) == counts

    @pytest.mark.parametrize("n", range(9))
    def test_block_counts_match_coefficients(self, n):
        counts = ordered_partition_block_counts(n)
        assert fubini_poly(n) == Poly(counts)


class TestTwoVariable:
    def test_first_cases(self):
        assert fubini_two_var(0) == BiPoly([[1]])
        assert fubini_two_var(1) == BiPoly([[0, 1], [1]])  # x + y
        # x^2 + 2xy + 2y^2 + y
        assert fubini_two_var(2) == BiPoly([[0, 1, 2], [0, 2], [1]])

    @pytest.mark.parametrize("n", range(15))
    def test_restriction_to_one_variable(self, n):
        two_var = fubini_two_var(n)
        assert two_var.substitute_x(0) == fubini_poly(n)
        assert two_var(0, 1) == fubini_number(n)

    @pytest.mark.parametrize("n", range(15))
    def test_x_degree_and_leading_term(self, n):
        two_var = fubini_two_var(n)
        assert two_var.x_degree == n
        assert two_var.coefficient(n, 0) == 1

    @given(
        st.integers(min_value=0, max_value=10),
        small_rationals,
        small_rationals,
    )
    def test_scalar_route_matches_bipoly(self, n, x, y):
        assert fubini_two_var_eval(n, x, y) == fubini_two_var(n)(x, y)


class TestReflectionForm:
    def test_small_cases(self):
        assert fubini_reflection_form(1) == Poly([0, 1])
        assert fubini_reflection_form(2) == Poly([0, 1, 2])
        assert fubini_reflection_form(3) == Poly([0, 1, 6, 6])

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            fubini_reflection_form(0)

    @pytest.mark.parametrize("n", range(1, 26))
    def test_agrees_with_triangle_route(self, n):
        assert fubini_reflection_form(n) == fubini_poly(n)


class TestSplitForm:
    def test_index_zero_is_one_everywhere(self):
        for y in (Fraction(1), Fraction(-2), Fraction(3, 7)):
            assert fubini_split_eval(0, y) == 1

    def test_index_one(self):
        for y in (Fraction(1), Fraction(2, 5), Fraction(-4, 3)):
            assert fubini_split_eval(1, y) == y

    def test_value_at_one(self):
        assert fubini_split_eval(2, Fraction(1)) == 3

    def test_singular_point_rejected(self):
        with pytest.raises(ValueError):
            fubini_split_eval(3, Fraction(-1, 2))

    @pytest.mark.parametrize("n", range(11))
    def test_symbolic_collapse(self, n):
        lhs, rhs = fubini_split_collapse(n)
        assert lhs == rhs

    def test_number_split_examples(self):
        assert fubini_number_split_sum(0) == 1
        assert fubini_number_split_sum(1) == 1
        assert fubini_number_split_sum(2) == 3

    def test_number_split_neg2_examples(self):
        assert fubini_number_split_sum_neg2(1) == 1
        assert fubini_number_split_sum_neg2(2) == 3
        assert fubini_number_split_sum_neg2(3) == 13
        with pytest.raises(ValueError):
            fubini_number_split_sum_neg2(0)

    @pytest.mark.parametrize("n", range(21))
    def test_number_split_matches(self, n):
        assert fubini_number_split_sum(n) == fubini_number(n)
        if n >= 1:
            assert fubini_number_split_sum_neg2(n) == fubini_number(n)


class TestGeometricMoments:
    def test_partial_sum_examples(self):
        tol = Fraction(1, 10**12)
        assert abs(geometric_moment_partial_sum(0, Fraction(1, 2), 60) - 2) < tol
        assert abs(geometric_moment_partial_sum(1, Fraction(1, 2), 80) - 2) < tol
        assert abs(geometric_moment_partial_sum(3, Fraction(1, 2), 80) - 26) < tol

    def test_limit_formula(self):
        # partial sums approach F_n(x/(1-x)) / (1-x)
        x = Fraction(1, 3)
        target = fubini_poly(2)(x / (1 - x)) / (1 - x)
        partial = geometric_moment_partial_sum(2, x, 120)
        assert abs(partial - target) < Fraction(1, 10**20)

    def test_requires_contraction(self):
        with pytest.raises(ValueError):
            geometric_moment_partial_sum(1, Fraction(1), 10)
        with pytest.raises(ValueError):
            geometric_moment_partial_sum(1, Fraction(-3, 2), 10)
