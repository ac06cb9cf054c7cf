"""Polynomial ring, the P_k family, and exact Gaussian expectations."""

import random
from fractions import Fraction

import pytest
from mpmath import mp

from stirling.polyring import (
    Poly,
    gauss_expectation,
    gauss_moment,
    stirling_poly,
    stirling_poly_table,
)

F = Fraction


class TestPolyArithmetic:
    def test_product_of_conjugates(self):
        one_plus = Poly([1, 1])
        one_minus = Poly([1, -1])
        assert one_plus * one_minus == Poly([1, 0, -1])

    def test_multiply_by_zero(self):
        p = Poly([F(1, 3), 2, 5])
        assert p * Poly() == Poly()
        assert (p * 0) == Poly()

    def test_cubed_thirds(self):
        p = Poly.monomial(3, F(1, 3))
        q = Poly.monomial(3, F(1, 6))
        assert p * q == Poly.monomial(6, F(1, 18))

    def test_add_sub(self):
        p = Poly([1, 2, 3])
        q = Poly([0, 0, -3])
        assert p + q == Poly([1, 2])
        assert (p + q) - p == q

    def test_trailing_zeros_stripped(self):
        assert Poly([1, 0, 0]).degree == 0
        assert Poly([0, 0, 0]).degree == -1
        assert not Poly([0])

    def test_shift(self):
        assert Poly([1, 2]).shifted(2) == Poly([0, 0, 1, 2])
        assert Poly().shifted(3) == Poly()

    def test_scalar_multiplication(self):
        assert F(1, 2) * Poly([2, 4]) == Poly([1, 2])

    def test_immutable_and_hashable(self):
        p = Poly([1, 2])
        with pytest.raises(AttributeError):
            p.coeffs = ()
        assert hash(p) == hash(Poly([1, 2]))

    def test_str_form(self):
        assert str(Poly([1, F(1, 2)])) == "1 + 1/2*x"
        assert str(Poly([0, 0, 0, F(-1, 3)])) == "0 + 0*x + 0*x^2 + -1/3*x^3"
        assert str(Poly()) == "0"


class TestStirlingPoly:
    def test_base_case(self):
        assert stirling_poly(0) == Poly([1])

    def test_first_step(self):
        # single recurrence step, j = 0 term only
        assert stirling_poly(1) == Poly.monomial(3, F(-1, 3))

    def test_second_step(self):
        assert stirling_poly(2) == Poly.monomial(4, F(-1, 6)) + Poly.monomial(6, F(1, 9))

    def test_table_matches_pointwise(self):
        table = stirling_poly_table(8)
        assert len(table) == 9
        assert all(table[k] == stirling_poly(k) for k in range(9))

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            stirling_poly(-1)

    def test_parity_degree_and_low_degree_through_k40(self):
        # observed structure used downstream: deg P_k = 3k, all terms share
        # k's parity, and the lowest nonzero degree is >= k+2 for k >= 1
        for k in range(41):
            p = stirling_poly(k)
            assert p.degree == 3 * k
            nonzero = [d for d, c in enumerate(p.coeffs) if c != 0]
            assert all(d % 2 == k % 2 for d in nonzero)
            if k >= 1:
                assert min(nonzero) >= k + 2


class TestGaussMoment:
    def test_unit_mass(self):
        assert gauss_moment(0) == 1

    def test_small_moments(self):
        assert gauss_moment(1) == F(1, 2)
        assert gauss_moment(2) == F(3, 4)
        assert gauss_moment(3) == F(15, 8)

    def test_halving_recurrence(self):
        # integration by parts gives M_{2j} = (2j-1)/2 * M_{2j-2}
        for j in range(1, 13):
            assert gauss_moment(j) == gauss_moment(j - 1) * F(2 * j - 1, 2)

    def test_against_numeric_quadrature(self):
        with mp.workprec(128):
            for j in (1, 2, 3, 4):
                numeric = mp.quad(
                    lambda x, j=j: x ** (2 * j) * mp.exp(-x * x), [-mp.inf, 0, mp.inf]
                ) / mp.sqrt(mp.pi)
                exact = gauss_moment(j)
                assert abs(numeric - mp.mpf(exact.numerator) / exact.denominator) < mp.mpf(2) ** -100

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            gauss_moment(-1)


class TestGaussExpectation:
    def test_constant(self):
        assert gauss_expectation(Poly([1])) == 1

    def test_odd_parity_vanishes(self):
        assert gauss_expectation(Poly.monomial(5)) == 0

    def test_p2_value(self):
        # E[-x^4/6 + x^6/9] = -(1/6)(3/4) + (1/9)(15/8) = 1/12
        assert gauss_expectation(stirling_poly(2)) == F(1, 12)

    def test_linearity_randomized(self):
        rng = random.Random(31415)

        def random_poly():
            return Poly(
                [F(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(rng.randint(1, 7))]
            )

        for _ in range(50):
            p, q = random_poly(), random_poly()
            alpha = F(rng.randint(-9, 9), rng.randint(1, 9))
            beta = F(rng.randint(-9, 9), rng.randint(1, 9))
            assert gauss_expectation(p * alpha + q * beta) == alpha * gauss_expectation(
                p
            ) + beta * gauss_expectation(q)
