"""Arbitrary-precision evaluation of the factorial ratio and its partial sums.

The object of study is the Stirling ratio

    F(n) = n! e^n / (n^n sqrt(2 pi n)),

which tends to 1 and has the asymptotic expansion sum_k a_k / n^k.  This
module evaluates F(n) to any requested binary precision, forms exact
partial sums, and produces the error tables that exhibit the two defining
behaviors of an asymptotic (not convergent) series: the scaled remainder
|F(n) - partial_N(n)| * n^(N+1) stays bounded as n grows, and at fixed n
the error as a function of N eventually turns around and grows.

Floating values are mpmath ``mpf`` with explicit binary precision
(>= 64 bits).  Internally everything is computed with 32 guard bits and
rounded once to the requested precision; n!, n^n and the partial sums are
carried exactly (Python int / Fraction) until the final rounding, so the
only transcendental roundings are e^n and sqrt(2 pi n).

Pure functions over immutable values; rows of an error table are
independent.  (mpmath's working precision is process-global, so do not
interleave calls with other mpmath precision changes across threads.)
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from mpmath import mp

from .coeffs import CoeffTable, reciprocal_coeffs
from .exactnum import factorial

__all__ = [
    "MIN_PRECISION",
    "ErrorRow",
    "TruncationScan",
    "stirling_ratio",
    "eval_partial_sum",
    "error_table",
    "optimal_truncation",
    "factorial_approx",
    "reciprocal_factorial_approx",
    "repr_digits",
    "bigfloat_str",
    "error_table_csv",
]

MIN_PRECISION = 64
_GUARD = 32

ERROR_TABLE_CSV_HEADER = "n,N,ratio,partial,abs_error,scaled_error"


def _check_prec(prec: int) -> None:
    if prec < MIN_PRECISION:
        raise ValueError(f"precision must be >= {MIN_PRECISION} bits, got {prec}")


def repr_digits(prec: int) -> int:
    """Decimal digits that round-trip a binary float of ``prec`` bits."""
    return int(prec * 0.3010299956639812) + 3


def bigfloat_str(x, prec: int) -> str:
    """Decimal form of an mpf that reconstructs the value at ``prec`` bits."""
    return mp.nstr(x, repr_digits(prec), strip_zeros=True)


def fraction_to_mpf(q: Fraction, prec: int):
    """Round an exact rational to an mpf of ``prec`` bits."""
    with mp.workprec(prec):
        return mp.mpf(q.numerator) / mp.mpf(q.denominator)


def stirling_ratio(n: int, prec: int = 256):
    """F(n) = n! e^n / (n^n sqrt(2 pi n)) to ``prec`` bits.

    Relative error is at most 2^(-prec+8): n! and n^n enter exactly, the
    handful of transcendental operations run with 32 guard bits, and the
    result is rounded once.
    """
    if n < 1:
        raise ValueError(f"stirling_ratio requires n >= 1, got {n}")
    _check_prec(prec)
    with mp.workprec(prec + _GUARD):
        val = (
            mp.mpf(factorial(n))
            * mp.exp(n)
            / (mp.mpf(n**n) * mp.sqrt(2 * mp.pi * n))
        )
    with mp.workprec(prec):
        return +val


def eval_partial_sum(table: CoeffTable, n: int, trunc: int) -> Fraction:
    """Exact partial sum sum_{k=0}^{trunc} a_k / n^k as a Fraction."""
    if n < 1:
        raise ValueError(f"partial sums need n >= 1, got {n}")
    if trunc < 0:
        raise ValueError(f"truncation order must be >= 0, got {trunc}")
    if trunc > table.max_k:
        raise ValueError(f"truncation order {trunc} exceeds table max_k={table.max_k}")
    total = Fraction(0)
    npow = 1
    for k in range(trunc + 1):
        total += Fraction(table.values[k], npow)
        npow *= n
    return total


@dataclass(frozen=True)
class ErrorRow:
    """One (n, N) entry of an error table.

    ``scaled_error`` is abs_error * n^(N+1), the quantity that must stay
    bounded in n for each fixed N if the series is asymptotic.
    """

    n: int
    trunc: int
    ratio: object
    partial: object
    abs_error: object
    scaled_error: object


def error_table(
    table: CoeffTable,
    ns: Iterable[int],
    truncs: Iterable[int],
    prec: int = 256,
) -> list[ErrorRow]:
    """One ErrorRow per (n, N) pair, N over ``truncs`` for each n in ``ns``.

    F(n) is computed once per n and reused across truncation orders.
    """
    _check_prec(prec)
    ns = list(ns)
    truncs = list(truncs)
    rows = []
    wp = prec + _GUARD
    for n in ns:
        ratio_hi = stirling_ratio(n, wp)
        for trunc in truncs:
            exact_partial = eval_partial_sum(table, n, trunc)
            with mp.workprec(wp):
                partial_hi = mp.mpf(exact_partial.numerator) / mp.mpf(
                    exact_partial.denominator
                )
                abs_err_hi = abs(ratio_hi - partial_hi)
                scaled_hi = abs_err_hi * mp.mpf(n ** (trunc + 1))
            with mp.workprec(prec):
                rows.append(
                    ErrorRow(
                        n=n,
                        trunc=trunc,
                        ratio=+ratio_hi,
                        partial=+partial_hi,
                        abs_error=+abs_err_hi,
                        scaled_error=+scaled_hi,
                    )
                )
    return rows


@dataclass(frozen=True)
class TruncationScan:
    """Error of the partial sums at a fixed n, as a function of length.

    ``errors[N]`` is |F(n) - partial_N(n)| for N = 0..max_k.  ``best_trunc``
    is the smallest N attaining the minimum.  ``turnaround`` is False when
    the error decreases monotonically through the whole table ("no
    turnaround within max_k"): the divergence of the series has not kicked
    in yet at this n.
    """

    n: int
    best_trunc: int
    min_error: object
    errors: tuple
    turnaround: bool


def optimal_truncation(table: CoeffTable, n: int, prec: int = 256) -> TruncationScan:
    """Scan all truncation orders 0..max_k at fixed n for the minimal error."""
    _check_prec(prec)
    rows = error_table(table, [n], range(table.max_k + 1), prec)
    errors = tuple(r.abs_error for r in rows)
    best = min(range(len(errors)), key=lambda i: (errors[i], i))
    return TruncationScan(
        n=n,
        best_trunc=best,
        min_error=errors[best],
        errors=errors,
        turnaround=best < table.max_k,
    )


def factorial_approx(n: int, trunc: int, table: CoeffTable, prec: int = 256):
    """n^n sqrt(2 pi n) e^(-n) * partial_N(n): the truncated-series value of n!."""
    _check_prec(prec)
    partial = eval_partial_sum(table, n, trunc)
    with mp.workprec(prec + _GUARD):
        val = (
            mp.mpf(n**n)
            * mp.sqrt(2 * mp.pi * n)
            * mp.exp(-n)
            * mp.mpf(partial.numerator)
            / mp.mpf(partial.denominator)
        )
    with mp.workprec(prec):
        return +val


def reciprocal_factorial_approx(n: int, trunc: int, table: CoeffTable, prec: int = 256):
    """e^n / (n^n sqrt(2 pi n)) * partial sum of the sign-flipped table.

    Approximates 1/n!; ``table`` is the plain a_k table, the sign flip
    happens here.
    """
    _check_prec(prec)
    partial = eval_partial_sum(reciprocal_coeffs(table), n, trunc)
    with mp.workprec(prec + _GUARD):
        val = (
            mp.exp(n)
            / (mp.mpf(n**n) * mp.sqrt(2 * mp.pi * n))
            * mp.mpf(partial.numerator)
            / mp.mpf(partial.denominator)
        )
    with mp.workprec(prec):
        return +val


def error_table_csv(rows: Sequence[ErrorRow], prec: int = 256) -> str:
    """CSV rendering, floats in round-trip decimal form at ``prec`` bits."""
    lines = [ERROR_TABLE_CSV_HEADER]
    for r in rows:
        lines.append(
            ",".join(
                [
                    str(r.n),
                    str(r.trunc),
                    bigfloat_str(r.ratio, prec),
                    bigfloat_str(r.partial, prec),
                    bigfloat_str(r.abs_error, prec),
                    bigfloat_str(r.scaled_error, prec),
                ]
            )
        )
    return "\n".join(lines) + "\n"
