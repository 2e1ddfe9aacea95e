"""
Tests for truncated univariate series.
"""
import random
from fractions import Fraction
from math import comb

import pytest

from formale.series.univariate import (
    TruncatedIntSeries,
    TruncatedRatSeries,
    exact_divide,
    lagrange_inverse,
    series_compose,
    series_differentiate,
    series_divide,
    series_integrate,
    series_inv_sqrt,
    series_mul,
    series_pow,
    series_reciprocal,
    series_reverse,
    series_sqrt,
)
from formale.utils.exceptions import (
    BadConstantTerm,
    IntegralityViolation,
    NonzeroConstantTerm,
    NotReversible,
)


def ints(*values):
    return TruncatedIntSeries(list(values))


def random_reversible(rng: random.Random, order: int) -> TruncatedIntSeries:
    return TruncatedIntSeries([0, rng.choice((1, -1))] + [rng.randint(-3, 3) for _ in range(order - 2)])


def random_unit_constant(rng: random.Random, order: int) -> TruncatedIntSeries:
    return TruncatedIntSeries([1] + [rng.randint(-4, 4) for _ in range(order - 1)])


class TestConstruction:
    def test_order_is_length(self):
        assert ints(1, 2, 3).order == 3

    def test_empty_series_rejected(self):
        with pytest.raises(ValueError):
            TruncatedIntSeries([])

    def test_integer_series_rejects_fractions(self):
        with pytest.raises(TypeError):
            TruncatedIntSeries([1, Fraction(1, 2)])

    def test_rational_series_lowest_terms(self):
        series = TruncatedRatSeries([Fraction(2, 4), Fraction(3, -6)])
        assert series.coeffs == (Fraction(1, 2), Fraction(-1, 2))
        assert series.coeffs[1].denominator > 0

    def test_is_integral(self):
        assert TruncatedRatSeries([1, Fraction(4, 2)]).is_integral()
        assert not TruncatedRatSeries([1, Fraction(1, 3)]).is_integral()

    def test_to_int_raises_on_fraction(self):
        with pytest.raises(IntegralityViolation):
            TruncatedRatSeries([1, Fraction(1, 3)]).to_int()

    def test_shift_down_needs_divisibility(self):
        assert ints(0, 0, 5, 1).shift_down(2).coeffs == (5, 1)
        with pytest.raises(ValueError):
            ints(0, 1, 5).shift_down(2)


class TestMultiplication:
    @pytest.mark.parametrize("a,b,expected", [
        ((1, 1, 0), (1, -1, 0), (1, 0, -1)),
        ((0, 0, 0, 1, 0, 0, 0, 0), (0, 0, 0, 1, 0, 0, 0, 0), (0, 0, 0, 0, 0, 0, 1, 0)),
        ((1, 1, 1, 1, 1), (1, 1, 1, 1, 1), (1, 2, 3, 4, 5)),
    ])
    def test_worked_products(self, a, b, expected):
        assert series_mul(ints(*a), ints(*b)).coeffs == expected

    def test_mixed_orders_take_minimum(self):
        assert series_mul(ints(1, 1, 1, 1), ints(1, 1)).order == 2
        assert (ints(1, 2, 3) + ints(1, 1)).order == 2

    def test_commutative_and_associative(self, rng):
        for _ in range(20):
            a, b, c = (TruncatedIntSeries([rng.randint(-9, 9) for _ in range(rng.randint(3, 9))]) for _ in range(3))
            assert series_mul(a, b).coeffs == series_mul(b, a).coeffs
            assert series_mul(series_mul(a, b), c).coeffs == series_mul(a, series_mul(b, c)).coeffs

    def test_power_matches_repeated_product(self):
        f = ints(1, 2, -1, 3, 0, 1)
        assert series_pow(f, 3).coeffs == series_mul(f, series_mul(f, f)).coeffs
        assert series_pow(f, 0).coeffs == (1, 0, 0, 0, 0, 0)

    def test_scalar_fraction_promotes(self):
        assert isinstance(ints(1, 2) * Fraction(1, 2), TruncatedRatSeries)


class TestComposition:
    def test_identity_outer(self):
        g = ints(0, 2, -1, 4)
        assert series_compose(ints(0, 1, 0, 0), g).coeffs == g.coeffs

    def test_square_of_shifted(self):
        assert series_compose(ints(0, 0, 1, 0), ints(0, 1, 1, 0)).coeffs == (0, 0, 1, 2)

    def test_monomial_substitution(self):
        assert series_compose(ints(1, 1, 0, 0, 0), ints(0, 0, 0, 1, 0)).coeffs == (1, 0, 0, 1, 0)

    def test_nonzero_constant_inner(self):
        with pytest.raises(NonzeroConstantTerm):
            series_compose(ints(1, 1), ints(1, 1))


class TestReversion:
    def test_identity(self):
        assert series_reverse(ints(0, 1, 0, 0)).coeffs == (0, 1, 0, 0)

    def test_z_minus_z_squared(self):
        assert series_reverse(ints(0, 1, -1, 0)).coeffs == (0, 1, 1, 2)

    def test_geometric(self):
        order = 8
        f = TruncatedIntSeries([0] + [1] * (order - 1))
        expected = tuple([0] + [(-1) ** (n + 1) for n in range(1, order)])
        assert series_reverse(f).coeffs == expected

    def test_catalan_numbers(self):
        h = series_reverse(ints(0, 1, -1, 0, 0, 0, 0, 0))
        assert h.coeffs[1:] == tuple(comb(2 * n, n) // (n + 1) for n in range(7))

    def test_round_trip_random(self, rng):
        for _ in range(25):
            f = random_reversible(rng, rng.randint(2, 12))
            h = series_reverse(f)
            identity = tuple([0, 1] + [0] * (f.order - 2))
            assert series_compose(f, h).coeffs == identity
            assert series_compose(h, f).coeffs == identity

    def test_rational_round_trip(self):
        f = TruncatedRatSeries([0, 2, Fraction(1, 3), -1, Fraction(5, 7)])
        h = series_reverse(f)
        assert series_compose(f, h).coeffs == (0, 1, 0, 0, 0)

    @pytest.mark.parametrize("coeffs", [(1, 1, 0), (0, 2, 1), (0, 0, 1)])
    def test_not_reversible(self, coeffs):
        with pytest.raises(NotReversible):
            series_reverse(ints(*coeffs))

    @pytest.mark.slow
    def test_lagrange_formula_matches_reversion(self, rng):
        for _ in range(100):
            f = random_reversible(rng, rng.randint(2, 14))
            assert lagrange_inverse(f).coeffs == series_reverse(f).coeffs


class TestReciprocalAndRoots:
    def test_reciprocal(self):
        assert series_reciprocal(ints(1, -1, 0, 0)).coeffs == (1, 1, 1, 1)

    def test_divide_integer_and_rational(self):
        assert series_divide(ints(1, 0, 0), ints(1, -1, 0)).coeffs == (1, 1, 1)
        quotient = series_divide(ints(1, 0, 0), ints(2, 0, 0))
        assert quotient.coeffs == (Fraction(1, 2), 0, 0)

    def test_exact_divide(self):
        product = series_mul(ints(3, 1, 4, 1), ints(-2, 5, 0, 7))
        assert exact_divide(product, ints(-2, 5, 0, 7)).coeffs == (3, 1, 4, 1)

    def test_exact_divide_inexact(self):
        with pytest.raises(IntegralityViolation):
            exact_divide(ints(1, 0), ints(2, 0))

    def test_inv_sqrt_identity(self):
        assert series_inv_sqrt(ints(1, 0, 0)).coeffs == (1, 0, 0)

    def test_inv_sqrt_central_binomials(self):
        assert series_inv_sqrt(ints(1, -4, 0, 0)).coeffs == (1, 2, 6, 20)

    def test_inv_sqrt_perfect_square(self):
        assert series_inv_sqrt(ints(1, -2, 1, 0, 0)).coeffs == (1, 1, 1, 1, 1)

    def test_inv_sqrt_squares_back(self, rng):
        for _ in range(20):
            f = random_unit_constant(rng, rng.randint(1, 10))
            r = series_inv_sqrt(f)
            assert series_mul(series_mul(r, r), f).coeffs == tuple([1] + [0] * (f.order - 1))

    def test_sqrt(self):
        assert series_sqrt(ints(1, 2, 1, 0)).coeffs == (1, 1, 0, 0)

    def test_bad_constant_term(self):
        with pytest.raises(BadConstantTerm):
            series_inv_sqrt(ints(4, 1))


class TestCalculus:
    def test_integrate(self):
        integral = series_integrate(ints(1, 2))
        assert integral.coeffs == (0, 1, 1)
        assert integral.order == 3

    def test_differentiate(self):
        assert series_differentiate(ints(0, 1, 1)).coeffs == (1, 2)

    def test_integrate_central_binomials(self):
        order = 13
        f = TruncatedIntSeries([comb(n // 2, n // 4) if n % 4 == 0 else 0 for n in range(order)])
        integral = series_integrate(f)
        for n in range(0, order, 4):
            assert integral.coeffs[n + 1] == Fraction(comb(n // 2, n // 4), n + 1)

    def test_differentiate_inverts_integrate(self, rng):
        for _ in range(20):
            f = TruncatedRatSeries([Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(rng.randint(1, 10))])
            assert series_differentiate(series_integrate(f)).coeffs == f.coeffs
