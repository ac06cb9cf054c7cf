"""Truncated power series: ring ops, reciprocal, exp/log, rational powers."""

import random
from fractions import Fraction

import pytest

from stirling.series import TruncSeries, phi_series

F = Fraction


def random_series(rng, order, constant=None):
    coeffs = [F(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(order + 1)]
    if constant is not None:
        coeffs[0] = F(constant)
    return TruncSeries(coeffs)


class TestConstructionAndEquality:
    def test_order_padding_and_cut(self):
        s = TruncSeries([1, 2], order=4)
        assert s.order == 4
        assert s.coeffs == (1, 2, 0, 0, 0)
        assert TruncSeries([1, 2, 3], order=1).coeffs == (1, 2)

    def test_coeff_bounds(self):
        s = TruncSeries([1, 2])
        with pytest.raises(IndexError):
            s.coeff(2)

    def test_equality_up_to_min_order(self):
        # formal-series semantics: beyond its order a series says nothing
        assert TruncSeries([1, 2]) == TruncSeries([1, 2, 7, 9])
        assert TruncSeries([1, 2]) != TruncSeries([1, 3, 7])

    def test_immutable(self):
        s = TruncSeries([1])
        with pytest.raises(AttributeError):
            s.coeffs = (2,)


class TestRingOps:
    def test_product_of_conjugates(self):
        a = TruncSeries([1, 1], order=3)
        b = TruncSeries([1, -1], order=3)
        assert a * b == TruncSeries([1, 0, -1, 0])

    def test_multiplicative_identity(self):
        rng = random.Random(7)
        a = random_series(rng, 6)
        assert a * TruncSeries([1], order=6) == a

    def test_mixed_orders_truncate(self):
        a = TruncSeries([1, 1, 1, 1, 1])
        b = TruncSeries([1, -1])
        assert (a * b).order == 1
        assert (a + b).order == 1

    def test_phi_times_reciprocal_is_one(self):
        phi = phi_series(12)
        assert phi * phi.recip() == TruncSeries([1], order=12)


class TestReciprocal:
    def test_recip_one(self):
        assert TruncSeries([1], order=5).recip() == TruncSeries([1], order=5)

    def test_geometric(self):
        assert TruncSeries([1, -1], order=6).recip() == TruncSeries([1] * 7)

    def test_phi_reciprocal_order_two(self):
        assert phi_series(2).recip() == TruncSeries([1, F(-1, 3), F(1, 36)])

    def test_involution_randomized(self):
        rng = random.Random(99)
        for _ in range(30):
            a = random_series(rng, rng.randint(0, 8))
            if a.coeffs[0] == 0:
                continue
            assert a.recip().recip() == a

    def test_zero_constant_rejected(self):
        with pytest.raises(ValueError):
            TruncSeries([0, 1]).recip()


class TestExpLog:
    def test_exp_zero(self):
        assert TruncSeries([0], order=4).exp() == TruncSeries([1], order=4)

    def test_log_exp_round_trip(self):
        a = TruncSeries([0, F(1, 12)], order=4)
        assert a.exp().log() == a

    def test_exp_second_coefficient(self):
        # exp(z/12) has z^2 coefficient (1/2)(1/12)^2 = 1/288
        assert TruncSeries([0, F(1, 12)], order=2).exp().coeff(2) == F(1, 288)

    def test_exp_log_inverses_randomized(self):
        rng = random.Random(1234)
        for _ in range(25):
            order = rng.randint(1, 8)
            assert random_series(rng, order, constant=0).exp().log().coeffs[0] == 0
            a = random_series(rng, order, constant=1)
            assert a.log().exp() == a

    def test_preconditions(self):
        with pytest.raises(ValueError):
            TruncSeries([1, 1]).exp()
        with pytest.raises(ValueError):
            TruncSeries([2, 1]).log()


def binomial_series_coeff(alpha: Fraction, j: int) -> Fraction:
    """Generalized binomial coefficient C(alpha, j), the oracle for (1+z)^alpha."""
    num = F(1)
    for i in range(j):
        num *= alpha - i
    for i in range(1, j + 1):
        num /= i
    return num


class TestRationalPower:
    def test_power_one(self):
        rng = random.Random(5)
        a = random_series(rng, 6, constant=1)
        assert a.pow_rational(1) == a

    def test_square_root_of_one_plus_z(self):
        half = F(1, 2)
        got = TruncSeries([1, 1], order=6).pow_rational(half)
        expected = TruncSeries([binomial_series_coeff(half, j) for j in range(7)])
        assert got == expected
        assert got.coeff(1) == F(1, 2)
        assert got.coeff(2) == F(-1, 8)

    def test_reciprocal_phi_to_three_halves(self):
        got = phi_series(2).recip().pow_rational(F(3, 2))
        assert got.coeff(2) == F(1, 12)

    def test_power_additivity_randomized(self):
        rng = random.Random(777)
        for _ in range(20):
            a = random_series(rng, rng.randint(1, 7), constant=1)
            p = F(rng.randint(-7, 7), rng.randint(1, 5))
            q = F(rng.randint(-7, 7), rng.randint(1, 5))
            assert a.pow_rational(p) * a.pow_rational(q) == a.pow_rational(p + q)

    def test_matches_exp_log_route(self):
        # same function, independently assembled from exp and log
        rng = random.Random(4242)
        for _ in range(20):
            a = random_series(rng, rng.randint(1, 7), constant=1)
            alpha = F(rng.randint(-9, 9), rng.randint(1, 6))
            assert a.pow_rational(alpha) == (a.log() * alpha).exp()

    def test_constant_term_must_be_one(self):
        with pytest.raises(ValueError):
            TruncSeries([2, 1]).pow_rational(F(1, 2))


class TestPhiSeries:
    def test_leading_coefficients(self):
        phi = phi_series(3)
        assert phi.coeff(0) == 1
        assert phi.coeff(1) == F(1, 3)
        assert phi.coeff(2) == F(1, 12)

    def test_derivative_normalization(self):
        # c_j * (j+1)(j+2) * j! = 2, i.e. the j-th derivative at 0 is 2/((j+1)(j+2))
        phi = phi_series(30)
        fact = 1
        for j in range(31):
            if j > 0:
                fact *= j
            assert phi.coeff(j) * (j + 1) * (j + 2) * fact == 2

    def test_negative_order_rejected(self):
        with pytest.raises(ValueError):
            phi_series(-1)
