"""Truncated formal power series over exact rationals.

A ``TruncSeries`` stores the coefficients of z^0..z^T for a fixed
truncation order T.  All operations are exact in ``Fraction`` arithmetic.
Operations on series of different orders truncate to the smaller order
(formal-series semantics: beyond its order a series says nothing), and
equality likewise compares coefficients only up to the smaller order.

exp, log, reciprocal and rational powers are computed by the standard
first-order recurrences obtained from differentiating the defining
relation (for b = exp(a): b' = a'b; for b = log(a): b'a = a'; for
b = a^alpha: b'a = alpha a'b).  Each is a single triangular pass, so
computing T coefficients costs O(T^2) rational operations.

Everything here is pure and immutable.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

from .exactnum import factorial, rational_str

__all__ = ["TruncSeries", "phi_series"]

Scalar = Union[int, Fraction]


class TruncSeries:
    """Formal power series sum_{j<=T} c_j z^j, truncated at order T."""

    __slots__ = ("coeffs",)

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable[Scalar], order: int | None = None):
        """Build a series from coefficients c_0, c_1, ...

        With ``order`` given, the coefficient list is zero-padded or cut to
        exactly order+1 entries; otherwise the list length fixes the order.
        An empty coefficient list means the zero series of order 0.
        """
        cs = [Fraction(c) for c in coeffs]
        if order is not None:
            if order < 0:
                raise ValueError("order must be >= 0")
            cs = cs[: order + 1] + [Fraction(0)] * (order + 1 - len(cs))
        elif not cs:
            cs = [Fraction(0)]
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("TruncSeries is immutable")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, j: int) -> Fraction:
        """Coefficient of z^j; j beyond the truncation order is an error."""
        if not 0 <= j <= self.order:
            raise IndexError(f"coefficient index {j} outside order {self.order}")
        return self.coeffs[j]

    def truncate(self, order: int) -> "TruncSeries":
        return TruncSeries(self.coeffs, order)

    def __eq__(self, other) -> bool:
        """Equality up to the smaller of the two truncation orders."""
        if not isinstance(other, TruncSeries):
            return NotImplemented
        t = min(self.order, other.order)
        return self.coeffs[: t + 1] == other.coeffs[: t + 1]

    __hash__ = None  # equality is order-relative, so hashing would be unsound

    def __add__(self, other: "TruncSeries") -> "TruncSeries":
        if not isinstance(other, TruncSeries):
            return NotImplemented
        t = min(self.order, other.order)
        return TruncSeries(
            [self.coeffs[j] + other.coeffs[j] for j in range(t + 1)]
        )

    def __neg__(self) -> "TruncSeries":
        return TruncSeries([-c for c in self.coeffs])

    def __sub__(self, other: "TruncSeries") -> "TruncSeries":
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: Union["TruncSeries", Scalar]) -> "TruncSeries":
        if isinstance(other, (int, Fraction)):
            return TruncSeries([c * other for c in self.coeffs])
        if not isinstance(other, TruncSeries):
            return NotImplemented
        t = min(self.order, other.order)
        out = [Fraction(0)] * (t + 1)
        for i in range(t + 1):
            a = self.coeffs[i]
            if a == 0:
                continue
            for j in range(t + 1 - i):
                b = other.coeffs[j]
                if b != 0:
                    out[i + j] += a * b
        return TruncSeries(out)

    def __rmul__(self, other: Scalar) -> "TruncSeries":
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def recip(self) -> "TruncSeries":
        """Multiplicative inverse: b with a*b = 1 + O(z^(T+1)).

        Requires a nonzero constant term; solved by the triangular
        convolution recurrence b_n = -(1/a_0) sum_{m=1..n} a_m b_{n-m}.
        """
        a = self.coeffs
        if a[0] == 0:
            raise ValueError("reciprocal requires a nonzero constant term")
        t = self.order
        b = [Fraction(0)] * (t + 1)
        b[0] = 1 / a[0]
        for n in range(1, t + 1):
            s = sum(a[m] * b[n - m] for m in range(1, n + 1) if a[m] != 0)
            b[n] = -s / a[0]
        return TruncSeries(b)

    def exp(self) -> "TruncSeries":
        """Exponential of a series with zero constant term.

        b_0 = 1 and n*b_n = sum_{m=1..n} m*a_m*b_{n-m}.
        """
        a = self.coeffs
        if a[0] != 0:
            raise ValueError("exp requires constant term 0")
        t = self.order
        b = [Fraction(0)] * (t + 1)
        b[0] = Fraction(1)
        for n in range(1, t + 1):
            s = sum(m * a[m] * b[n - m] for m in range(1, n + 1) if a[m] != 0)
            b[n] = s / n
        return TruncSeries(b)

    def log(self) -> "TruncSeries":
        """Logarithm of a series with constant term 1.

        b_0 = 0 and b_n = a_n - (1/n) sum_{m=1..n-1} m*b_m*a_{n-m}.
        """
        a = self.coeffs
        if a[0] != 1:
            raise ValueError("log requires constant term 1")
        t = self.order
        b = [Fraction(0)] * (t + 1)
        for n in range(1, t + 1):
            s = sum(m * b[m] * a[n - m] for m in range(1, n) if b[m] != 0)
            b[n] = a[n] - s / n
        return TruncSeries(b)

    def pow_rational(self, alpha: Scalar) -> "TruncSeries":
        """Raise a series with constant term 1 to an arbitrary rational power.

        Single triangular pass from the relation (a^alpha)' a = alpha a' a^alpha:

            b_0 = 1,
            b_n = (1/n) sum_{m=1..n} ((alpha+1)m - n) a_m b_{n-m}.

        This avoids building exp(alpha*log(a)) as two intermediate series;
        the exp/log route is kept as a cross-check in the tests.
        """
        a = self.coeffs
        if a[0] != 1:
            raise ValueError("pow_rational requires constant term 1")
        alpha = Fraction(alpha)
        t = self.order
        b = [Fraction(0)] * (t + 1)
        b[0] = Fraction(1)
        for n in range(1, t + 1):
            s = Fraction(0)
            for m in range(1, n + 1):
                if a[m] != 0:
                    s += ((alpha + 1) * m - n) * a[m] * b[n - m]
            b[n] = s / n
        return TruncSeries(b)

    def __str__(self) -> str:
        parts = [rational_str(self.coeffs[0])]
        for j, c in enumerate(self.coeffs[1:], start=1):
            parts.append(f"{rational_str(c)}*z^{j}" if j > 1 else f"{rational_str(c)}*z")
        return " + ".join(parts) + f" + O(z^{self.order + 1})"

    def __repr__(self) -> str:
        return f"TruncSeries({list(self.coeffs)!r})"


def phi_series(order: int) -> TruncSeries:
    """Maclaurin series of phi(z) = 2(e^z - 1 - z)/z^2, truncated at ``order``.

    The coefficient of z^j is 2/(j+2)!, so phi = 1 + z/3 + z^2/12 + ...
    Equivalently phi^(j)(0) = 2/((j+1)(j+2)).
    """
    if order < 0:
        raise ValueError("order must be >= 0")
    return TruncSeries([Fraction(2, factorial(j + 2)) for j in range(order + 1)])
