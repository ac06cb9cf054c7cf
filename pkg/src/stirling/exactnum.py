"""Exact integer and rational scalars: factorials, binomials, Bernoulli numbers.

Integers are plain Python ``int`` (arbitrary precision, canonical sign for
zero).  Rationals are ``fractions.Fraction``, which normalizes eagerly on
construction: positive denominator, gcd-reduced.  Equality of values is
therefore structural equality, which is what every exact test in this
package relies on.

All values are immutable and all functions are pure, so everything here is
safe to share across threads without coordination.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

__all__ = [
    "factorial",
    "binomial",
    "bernoulli",
    "rational_str",
    "parse_rational",
]


def factorial(n: int) -> int:
    """Return n! exactly.

    Raises ValueError for negative n.
    """
    if n < 0:
        raise ValueError(f"factorial requires n >= 0, got {n}")
    return math.factorial(n)


def binomial(n: int, k: int) -> int:
    """Return the binomial coefficient C(n, k) exactly.

    Requires 0 <= k <= n; anything else raises ValueError (``k > n`` is an
    error here, not zero, so callers cannot silently run off the end of a
    recurrence).
    """
    if n < 0 or k < 0:
        raise ValueError(f"binomial requires n, k >= 0, got ({n}, {k})")
    if k > n:
        raise ValueError(f"binomial requires k <= n, got ({n}, {k})")
    return math.comb(n, k)


_bernoulli_cache: list[Fraction] = [Fraction(1)]


def bernoulli(m: int) -> Fraction:
    """Return the Bernoulli number B_m exactly, with the B_1 = -1/2 convention.

    Computed by the defining recurrence sum_{j=0}^{m} C(m+1, j) B_j = 0,
    memoized, which is plenty fast for the index range used here (m <= ~100).
    B_m = 0 for odd m >= 3.
    """
    if m < 0:
        raise ValueError(f"bernoulli requires m >= 0, got {m}")
    cache = _bernoulli_cache
    while len(cache) <= m:
        r = len(cache)
        s = sum(binomial(r + 1, j) * cache[j] for j in range(r))
        cache.append(Fraction(-s, r + 1))
    return cache[m]


_RATIONAL_RE = re.compile(r"^(-?\d+)(?:/([1-9]\d*))?$")


def rational_str(q: Fraction) -> str:
    """Render a rational as ``num/den`` in lowest terms (den > 0), or ``num``
    when the denominator is 1.

    This is the bit-exact text form used by the CSV and JSON emitters.
    """
    return str(Fraction(q))


def parse_rational(text: str) -> Fraction:
    """Parse the ``num/den`` / ``num`` text form produced by rational_str.

    Stricter than ``Fraction(str)``: decimal or exponent notation is
    rejected, so exact tables cannot silently absorb rounded values.
    """
    m = _RATIONAL_RE.match(text.strip())
    if not m:
        raise ValueError(f"not a rational in num/den form: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) else 1
    return Fraction(num, den)
