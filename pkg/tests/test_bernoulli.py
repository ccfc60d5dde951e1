"""Bernoulli and p-Bernoulli numbers with their integral identities."""

from fractions import Fraction

import pytest

from fubini.combinat import factorial, stirling2
from fubini.bernoulli_numbers import (
    bernoulli,
    bernoulli_recurrence,
    bernoulli_via_integral,
    double_sum_identity,
    fubini_moment_integral,
    fubini_moment_parity,
    fubini_product_integral,
    p_bernoulli,
    p_bernoulli_even_explicit,
    p_bernoulli_odd_explicit,
    p_bernoulli_shift_relation,
)
from fubini.polynomials import fubini_poly

from oracles import bernoulli_akiyama_tanigawa


class TestBernoulli:
    def test_frozen_values(self):
        assert bernoulli(0) == 1
        assert bernoulli(1) == Fraction(-1, 2)
        assert bernoulli(2) == Fraction(1, 6)
        assert bernoulli(4) == Fraction(-1, 30)
        assert bernoulli(12) == Fraction(-691, 2730)

    def test_against_akiyama_tanigawa(self):
        oracle = bernoulli_akiyama_tanigawa(24)
        for n, expected in enumerate(oracle):
            assert bernoulli(n) == expected

    def test_odd_indices_vanish(self):
        for k in range(1, 16):
            assert bernoulli(2 * k + 1) == 0

    def test_recurrence_route(self):
        for n in range(31):
            assert bernoulli_recurrence(n) == bernoulli(n)

    def test_integral_route(self):
        assert bernoulli_via_integral(1) == Fraction(-1, 2)
        assert bernoulli_via_integral(2) == Fraction(1, 6)
        assert bernoulli_via_integral(3) == 0
        for n in range(1, 31):
            assert bernoulli_via_integral(n) == bernoulli(n)

    def test_integral_route_requires_positive_index(self):
        with pytest.raises(ValueError):
            bernoulli_via_integral(0)
        # the n = 0 equality holds numerically but is not part of the contract
        assert fubini_poly(0).integrate(-1, 0) == bernoulli(0)


class TestMomentIntegral:
    def test_examples(self):
        assert fubini_moment_integral(0, 2) == (Fraction(1, 6), Fraction(1, 6))
        assert fubini_moment_integral(1, 1) == (Fraction(1, 3), Fraction(1, 3))
        assert fubini_moment_integral(2, 1) == (Fraction(-1, 4), Fraction(-1, 4))

    def test_first_moment_closed_form(self):
        for n in range(1, 10):
            exact, formula = fubini_moment_integral(1, n)
            assert exact == formula == -(bernoulli(n + 1) + bernoulli(n))

    def test_grid(self):
        for k in range(7):
            for n in range(1, 13):
                exact, formula = fubini_moment_integral(k, n)
                assert exact == formula

    def test_requires_positive_n(self):
        with pytest.raises(ValueError):
            fubini_moment_integral(2, 0)


class TestProductIntegral:
    def test_examples(self):
        assert fubini_product_integral(0, 2) == (Fraction(1, 6), Fraction(1, 6))
        assert fubini_product_integral(1, 1) == (Fraction(1, 3), Fraction(1, 3))
        exact, formula = fubini_product_integral(2, 1)
        assert exact == formula == Fraction(-1, 6)

    def test_symmetry(self):
        for m in range(1, 9):
            for n in range(1, 9):
                assert fubini_product_integral(m, n)[1] == fubini_product_integral(n, m)[1]

    def test_grid(self):
        for m in range(9):
            for n in range(1, 9):
                exact, formula = fubini_product_integral(m, n)
                assert exact == formula


class TestDoubleSum:
    def test_examples(self):
        assert double_sum_identity(1, 1) == (Fraction(1, 3), Fraction(1, 3))
        assert double_sum_identity(2, 0) == (Fraction(1, 6), Fraction(1, 6))
        lhs, rhs = double_sum_identity(1, 2)
        assert lhs == rhs == Fraction(-1, 6)

    def test_grid(self):
        for n in range(1, 9):
            for m in range(9):
                lhs, rhs = double_sum_identity(n, m)
                assert lhs == rhs

    def test_requires_positive_n(self):
        with pytest.raises(ValueError):
            double_sum_identity(0, 3)


class TestPBernoulli:
    def test_column_zero_is_bernoulli(self):
        for n in range(21):
            assert p_bernoulli(n, 0) == bernoulli(n)

    def test_examples(self):
        assert p_bernoulli(1, 1) == Fraction(-1, 3)
        assert p_bernoulli(1, 1) == -2 * bernoulli(2)
        assert p_bernoulli(2, 2) == Fraction(-1, 20)

    def test_shift_relation(self):
        for n in range(1, 12):
            for p in range(7):
                lhs, rhs = p_bernoulli_shift_relation(n, p)
                assert lhs == rhs

    def test_odd_explicit_examples(self):
        assert p_bernoulli_odd_explicit(1, 1) == Fraction(-1, 3)
        assert p_bernoulli_odd_explicit(1, 2) == Fraction(-1, 4)
        assert p_bernoulli_odd_explicit(2, 1) == p_bernoulli(3, 1) == Fraction(1, 15)

    def test_even_explicit_examples(self):
        assert p_bernoulli_even_explicit(1, 1) == 0
        assert p_bernoulli_even_explicit(1, 2) == Fraction(-1, 20)
        assert p_bernoulli_even_explicit(2, 1) == p_bernoulli(4, 1) == 0

    def test_explicit_forms_match_relation(self):
        for n in range(1, 11):
            for p in range(1, 11):
                assert p_bernoulli_odd_explicit(n, p) == p_bernoulli(2 * n - 1, p)
                assert p_bernoulli_even_explicit(n, p) == p_bernoulli(2 * n, p)

    def test_explicit_forms_require_positive_p(self):
        with pytest.raises(ValueError):
            p_bernoulli_odd_explicit(1, 0)
        with pytest.raises(ValueError):
            p_bernoulli_even_explicit(1, 0)

    def test_printed_variants_fail_at_witness_points(self):
        # The uncorrected odd form (upper Stirling index 2n-1, sign
        # (-1)^(k+1)) gives -1 at (1,1); the true value is -1/3.
        odd_printed = 2 * sum(
            Fraction(
                stirling2(1, k + 1) * (-1) ** (k + 1) * factorial(k + 1), k + 2
            )
            for k in range(2)
        )
        assert odd_printed == -1
        assert odd_printed != p_bernoulli(1, 1)
        # The uncorrected even form (sign (-1)^k) gives +1/20 at (1,2);
        # the true value is -1/20.
        even_printed = Fraction(3, 2) * sum(
            Fraction(stirling2(3, k + 1) * (-1) ** k * factorial(k + 1), k + 3)
            for k in range(3)
        )
        assert even_printed == Fraction(1, 20)
        assert even_printed != p_bernoulli(2, 2)


class TestMomentParity:
    def test_examples(self):
        assert fubini_moment_parity(0, 3) == (Fraction(0), Fraction(0))
        exact, parity = fubini_moment_parity(1, 2)
        assert exact == parity == Fraction(-1, 6)
        exact, parity = fubini_moment_parity(2, 3)
        assert exact == parity == Fraction(-1, 20)

    def test_grid(self):
        for p in range(9):
            for n in range(2, 16):
                exact, parity = fubini_moment_parity(p, n)
                assert exact == parity

    def test_requires_n_at_least_two(self):
        with pytest.raises(ValueError):
            fubini_moment_parity(0, 1)
