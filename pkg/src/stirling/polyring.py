"""Polynomials over exact rationals and the integrand polynomial family.

The expansion of the factorial-ratio integrand generates a family of
polynomials P_k defined by

    P_0(x) = 1,
    P_{k+1}(x) = -2 * sum_{j=0}^{k} C(k, j) * P_j(x) * x^(k-j+3) / ((k-j+2)(k-j+3)),

and the series coefficients are Gaussian expectations of the even members
of that family.

Normalization decision (load-bearing): every Gaussian moment here is the
*normalized* moment

    M_{2j} = (1 / sqrt(pi)) * integral x^(2j) e^(-x^2) dx = (2j)! / (4^j j!),

i.e. the 1/sqrt(pi) prefactor of the integral representation is absorbed
into the moment.  That makes M_{2j} rational, which keeps the whole
coefficient pipeline in exact ``Fraction`` arithmetic; no irrational
constant ever enters until a value is deliberately converted to floating
point.

Polynomials are dense: P_k has on the order of 3k/2 nonzero terms of a
single parity, so a sparse representation would buy nothing at the scales
used here.  The P_k memo table is built sequentially (the recurrence for
P_{k+1} consumes all predecessors) and is read-only afterwards; Poly
values are immutable.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

from .exactnum import binomial, factorial, rational_str

__all__ = [
    "Poly",
    "stirling_poly",
    "stirling_poly_table",
    "gauss_moment",
    "gauss_expectation",
]

Scalar = Union[int, Fraction]


class Poly:
    """Dense univariate polynomial with Fraction coefficients.

    ``coeffs[d]`` is the coefficient of x^d.  Trailing zeros are stripped on
    construction; the zero polynomial has an empty coefficient tuple and
    degree -1.  Instances are immutable and hashable.
    """

    __slots__ = ("coeffs",)

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def monomial(cls, degree: int, coeff: Scalar = 1) -> "Poly":
        """coeff * x^degree"""
        if degree < 0:
            raise ValueError("degree must be >= 0")
        return cls([0] * degree + [coeff])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, d: int) -> Fraction:
        """Coefficient of x^d (zero beyond the stored degree)."""
        if 0 <= d < len(self.coeffs):
            return self.coeffs[d]
        return Fraction(0)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == Poly([other])
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "Poly") -> "Poly":
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other: "Poly") -> "Poly":
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: Union["Poly", Scalar]) -> "Poly":
        if isinstance(other, (int, Fraction)):
            return Poly([c * other for c in self.coeffs])
        if not isinstance(other, Poly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b != 0:
                    out[i + j] += a * b
        return Poly(out)

    def __rmul__(self, other: Scalar) -> "Poly":
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def shifted(self, m: int) -> "Poly":
        """Multiply by x^m."""
        if m < 0:
            raise ValueError("shift must be >= 0")
        if not self.coeffs:
            return self
        return Poly((Fraction(0),) * m + self.coeffs)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = [rational_str(self.coeffs[0])]
        for d, c in enumerate(self.coeffs[1:], start=1):
            parts.append(f"{rational_str(c)}*x^{d}" if d > 1 else f"{rational_str(c)}*x")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"Poly({list(self.coeffs)!r})"


_stirling_cache: list[Poly] = [Poly([1])]


def stirling_poly(k: int) -> Poly:
    """Return P_k, the k-th integrand-expansion polynomial (memoized).

    Useful structure, verified by the test suite rather than assumed:
    every nonzero coefficient of P_k sits at a degree with the same parity
    as k, deg P_k = 3k, and for k >= 1 the lowest nonzero degree is >= k+2.
    """
    if k < 0:
        raise ValueError(f"stirling_poly requires k >= 0, got {k}")
    cache = _stirling_cache
    while len(cache) <= k:
        i = len(cache) - 1  # recurrence step: build P_{i+1} from P_0..P_i
        acc = Poly()
        for j in range(i + 1):
            c = Fraction(-2 * binomial(i, j), (i - j + 2) * (i - j + 3))
            acc = acc + (cache[j] * c).shifted(i - j + 3)
        cache.append(acc)
    return cache[k]


def stirling_poly_table(max_k: int) -> list[Poly]:
    """P_0..P_max_k as a list."""
    stirling_poly(max_k)
    return _stirling_cache[: max_k + 1]


def gauss_moment(j: int) -> Fraction:
    """Normalized even Gaussian moment (1/sqrt(pi)) * integral x^(2j) e^(-x^2) dx.

    Equals (2j)! / (4^j * j!), exactly rational thanks to the absorbed
    1/sqrt(pi) (see module docstring).
    """
    if j < 0:
        raise ValueError(f"gauss_moment requires j >= 0, got {j}")
    return Fraction(factorial(2 * j), 4**j * factorial(j))


def gauss_expectation(p: Poly) -> Fraction:
    """Normalized Gaussian expectation (1/sqrt(pi)) * integral e^(-x^2) p(x) dx.

    Odd-degree terms integrate to zero by parity; even-degree terms
    contribute coefficient * gauss_moment.  Linear in p.
    """
    total = Fraction(0)
    for d, c in enumerate(p.coeffs):
        if c != 0 and d % 2 == 0:
            total += c * gauss_moment(d // 2)
    return total
