"""Exact scalar layer: factorials, binomials, Bernoulli numbers, text forms."""

import random
from fractions import Fraction

import pytest

from stirling.exactnum import (
    bernoulli,
    binomial,
    factorial,
    parse_rational,
    rational_str,
)


class TestFactorial:
    def test_empty_product(self):
        assert factorial(0) == 1

    def test_small(self):
        assert factorial(5) == 120

    def test_twenty(self):
        assert factorial(20) == 2432902008176640000

    def test_ratio_consistency(self):
        # 20!/19! = 20 cross-checks the frozen constant above
        assert factorial(20) // factorial(19) == 20

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            factorial(-1)


class TestBinomial:
    def test_edges(self):
        for n in (0, 1, 4, 9):
            assert binomial(n, 0) == 1
            assert binomial(n, n) == 1

    def test_small_values(self):
        assert binomial(4, 2) == 6
        assert binomial(10, 5) == 252

    def test_against_pascal_recurrence(self):
        # independent oracle: build Pascal's triangle row by row
        row = [1]
        for n in range(1, 13):
            row = [1] + [row[i] + row[i + 1] for i in range(len(row) - 1)] + [1]
            for k, expected in enumerate(row):
                assert binomial(n, k) == expected

    def test_symmetry_and_row_sums(self):
        for n in range(12):
            assert sum(binomial(n, k) for k in range(n + 1)) == 2**n
            for k in range(n + 1):
                assert binomial(n, k) == binomial(n, n - k)

    def test_k_above_n_rejected(self):
        with pytest.raises(ValueError):
            binomial(3, 4)

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            binomial(-2, 1)
        with pytest.raises(ValueError):
            binomial(2, -1)


def _bernoulli_akiyama_tanigawa(n):
    """Independent oracle (Akiyama-Tanigawa); yields the B_1 = +1/2 convention."""
    a = [Fraction(0)] * (n + 1)
    out = []
    for m in range(n + 1):
        a[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            a[j - 1] = j * (a[j - 1] - a[j])
        out.append(a[0])
    return out


class TestBernoulli:
    def test_first_values(self):
        assert bernoulli(0) == 1
        assert bernoulli(1) == Fraction(-1, 2)
        assert bernoulli(2) == Fraction(1, 6)
        assert bernoulli(4) == Fraction(-1, 30)

    def test_known_larger_value(self):
        assert bernoulli(12) == Fraction(-691, 2730)

    def test_odd_indices_vanish(self):
        assert all(bernoulli(m) == 0 for m in range(3, 42, 2))

    def test_against_independent_recurrence(self):
        oracle = _bernoulli_akiyama_tanigawa(30)
        for m in range(31):
            expected = -oracle[m] if m == 1 else oracle[m]
            assert bernoulli(m) == expected

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            bernoulli(-1)


class TestRationalContract:
    def test_arithmetic_is_exact(self):
        rng = random.Random(20260810)
        for _ in range(200):
            a = Fraction(rng.randint(-999, 999), rng.randint(1, 999))
            b = Fraction(rng.randint(-999, 999), rng.randint(1, 999))
            assert (a + b) - b == a
            if b != 0:
                assert (a * b) / b == a

    def test_normalization_is_eager(self):
        q = Fraction(6, -8)
        assert q.denominator > 0
        assert (abs(q.numerator), q.denominator) == (3, 4)

    def test_text_form(self):
        assert rational_str(Fraction(-139, 51840)) == "-139/51840"
        assert rational_str(Fraction(7, 1)) == "7"
        assert rational_str(Fraction(0)) == "0"

    def test_parse_round_trip(self):
        for q in (Fraction(1), Fraction(-1, 3), Fraction(163879, 209018880)):
            assert parse_rational(rational_str(q)) == q

    @pytest.mark.parametrize("bad", ["0.5", "1e3", "1/0", "1 / 2", "", "one"])
    def test_parse_rejects_non_rational_text(self, bad):
        with pytest.raises(ValueError):
            parse_rational(bad)
