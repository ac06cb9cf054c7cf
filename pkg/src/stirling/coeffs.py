"""The Stirling-series coefficients a_k by three independent constructions.

The asymptotic expansion of the factorial ratio F(n) = n! e^n / (n^n sqrt(2 pi n))
is sum_k a_k / n^k with a_0 = 1, a_1 = 1/12, a_2 = 1/288,
a_3 = -139/51840, ...  This module produces the exact table a_0..a_K by

* ``recurrence``: a_k = (2^k / (2k)!) * E[P_{2k}] where E is the normalized
  Gaussian expectation and P_{2k} the integrand-expansion polynomial;
* ``halfpower``: a_k = ((2k)! / (2^k k!)) * [z^(2k)] (1/phi(z))^(k+1/2),
  where the 2k-th derivative at zero has been converted to coefficient
  extraction via the factor (2k)! so a single triangular series pass does
  the work of symbolic differentiation;
* ``bernoulli``: exponentiate the classical log-factorial series
  L(x) = sum_{j>=1} B_{2j} / (2j(2j-1)) x^(2j-1); its exp has the a_k as
  coefficients.  This is the textbook oracle the other two are checked
  against.

The expansion of 1/n! uses the same table with alternating signs, which
forces the convolution identity sum_{k<=m} (-1)^k a_k a_{m-k} = 0 (m >= 1)
and makes log(sum a_k x^k) an odd series; both are verified exactly by
functions here.

All functions are pure.  Methods ``recurrence`` and ``halfpower`` compute
each k independently; ``bernoulli`` is inherently sequential in its exp
recurrence.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass
from fractions import Fraction

from .exactnum import bernoulli, factorial, parse_rational, rational_str
from .polyring import gauss_expectation, stirling_poly
from .series import TruncSeries, phi_series

__all__ = [
    "CoeffTable",
    "coeffs_via_recurrence",
    "coeffs_via_halfpower",
    "coeffs_via_bernoulli",
    "reciprocal_coeffs",
    "convolution_check",
    "log_series_coeffs",
    "egf_growth",
    "to_csv",
    "from_csv",
    "to_json_dict",
    "from_json_dict",
    "to_json",
    "from_json",
]

METHODS = ("recurrence", "halfpower", "bernoulli")


@dataclass(frozen=True)
class CoeffTable:
    """The coefficients a_0..a_K with the method that produced them."""

    values: tuple[Fraction, ...]
    method: str

    def __post_init__(self):
        if not self.values:
            raise ValueError("a coefficient table cannot be empty")
        if self.values[0] != 1:
            raise ValueError(f"a_0 must be 1, got {self.values[0]}")
        object.__setattr__(self, "values", tuple(Fraction(v) for v in self.values))

    @property
    def max_k(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, k: int) -> Fraction:
        return self.values[k]

    def __len__(self) -> int:
        return len(self.values)


def coeffs_via_recurrence(max_k: int) -> CoeffTable:
    """a_k = (2^k / (2k)!) * E[P_{2k}] for k = 0..max_k, exactly."""
    if max_k < 0:
        raise ValueError("max_k must be >= 0")
    stirling_poly(2 * max_k)  # build the memo table once, sequentially
    values = [
        Fraction(2**k, factorial(2 * k)) * gauss_expectation(stirling_poly(2 * k))
        for k in range(max_k + 1)
    ]
    return CoeffTable(tuple(values), "recurrence")


def coeffs_via_halfpower(max_k: int) -> CoeffTable:
    """a_k = ((2k)! / (2^k k!)) * [z^(2k)] (1/phi)^(k+1/2) for k = 0..max_k.

    The reciprocal of phi is computed once at order 2*max_k; each k then
    costs one rational-power pass at order 2k.
    """
    if max_k < 0:
        raise ValueError("max_k must be >= 0")
    u = phi_series(2 * max_k).recip()
    values = []
    for k in range(max_k + 1):
        p = u.truncate(2 * k).pow_rational(Fraction(2 * k + 1, 2))
        values.append(Fraction(factorial(2 * k), 2**k * factorial(k)) * p.coeff(2 * k))
    return CoeffTable(tuple(values), "halfpower")


def coeffs_via_bernoulli(max_k: int) -> CoeffTable:
    """exp of L(x) = sum_{j>=1} B_{2j}/(2j(2j-1)) x^(2j-1), truncated at max_k."""
    if max_k < 0:
        raise ValueError("max_k must be >= 0")
    coeffs = [Fraction(0)] * (max_k + 1)
    for j in range(1, max_k // 2 + 2):
        d = 2 * j - 1
        if d <= max_k:
            coeffs[d] = bernoulli(2 * j) / (2 * j * (2 * j - 1))
    values = TruncSeries(coeffs).exp().coeffs
    return CoeffTable(values, "bernoulli")


def reciprocal_coeffs(table: CoeffTable) -> CoeffTable:
    """The 1/n! table: b_k = (-1)^k a_k.  Involutive; the method tag is kept."""
    values = tuple(v if k % 2 == 0 else -v for k, v in enumerate(table.values))
    return CoeffTable(values, table.method)


def convolution_check(table: CoeffTable, max_m: int) -> list[Fraction]:
    """s_m = sum_{k=0}^{m} (-1)^k a_k a_{m-k} for m = 0..max_m.

    For a correct table s_0 = 1 and s_m = 0 exactly for all m >= 1
    (the n! and 1/n! expansions are exact formal reciprocals).  Violations
    are returned, not raised; the verify command maps them to a failure
    exit code.
    """
    if max_m > table.max_k:
        raise ValueError(f"max_m={max_m} exceeds table max_k={table.max_k}")
    a = table.values
    return [
        sum((-1) ** k * a[k] * a[m - k] for k in range(m + 1)) for m in range(max_m + 1)
    ]


def log_series_coeffs(table: CoeffTable, max_k: int | None = None) -> list[Fraction]:
    """Coefficients of log(sum_k a_k x^k) up to x^max_k.

    For a correct table every even coefficient (x^2, x^4, ...) is exactly 0
    and the x^(2j-1) coefficient equals B_{2j}/(2j(2j-1)); index 0 holds 0.
    """
    if max_k is None:
        max_k = table.max_k
    if max_k > table.max_k:
        raise ValueError(f"max_k={max_k} exceeds table max_k={table.max_k}")
    return list(TruncSeries(table.values[: max_k + 1]).log().coeffs)


def egf_growth(table: CoeffTable) -> list[float]:
    """r_k = (|a_k|/k!)^(1/k) for k = 1..max_k, as floats.

    Diagnostic for the exponential generating function sum a_k x^k / k!:
    bounded r_k witnesses a positive radius of convergence even though
    sum a_k x^k itself has radius zero.  k-th roots leave the rationals,
    so this is the one deliberately approximate output of the module.
    """
    if table.max_k < 1:
        raise ValueError("egf_growth needs a table with max_k >= 1")
    out = []
    for k in range(1, table.max_k + 1):
        ratio = abs(table.values[k]) / factorial(k)
        out.append(float(ratio) ** (1.0 / k) if ratio != 0 else 0.0)
    return out


# ---------------------------------------------------------------------------
# serialization: CSV with a method metadata line, JSON with num/den fields
# ---------------------------------------------------------------------------

_CSV_HEADER = ["k", "a_k"]


def to_csv(table: CoeffTable) -> str:
    """CSV text: a ``# method=...`` metadata line, header ``k,a_k``, one row
    per coefficient in the exact num/den text form."""
    buf = io.StringIO()
    buf.write(f"# method={table.method}\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(_CSV_HEADER)
    for k, v in enumerate(table.values):
        w.writerow([k, rational_str(v)])
    return buf.getvalue()


def from_csv(text: str) -> CoeffTable:
    """Parse the CSV form emitted by to_csv (structural round-trip)."""
    method = "unknown"
    rows = []
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        if line.startswith("#"):
            meta = line.lstrip("#").strip()
            if meta.startswith("method="):
                method = meta.split("=", 1)[1].strip()
            continue
        rows.append(line)
    if not rows or rows[0].split(",") != _CSV_HEADER:
        raise ValueError("missing k,a_k header")
    values = []
    for expected_k, row in enumerate(csv.reader(rows[1:])):
        k, text_value = row
        if int(k) != expected_k:
            raise ValueError(f"non-contiguous coefficient index {k}")
        values.append(parse_rational(text_value))
    return CoeffTable(tuple(values), method)


def to_json_dict(table: CoeffTable) -> dict:
    return {
        "method": table.method,
        "coefficients": [
            {"k": k, "num": v.numerator, "den": v.denominator}
            for k, v in enumerate(table.values)
        ],
    }


def from_json_dict(data: dict) -> CoeffTable:
    entries = sorted(data["coefficients"], key=lambda e: e["k"])
    if [e["k"] for e in entries] != list(range(len(entries))):
        raise ValueError("non-contiguous coefficient indices")
    values = tuple(Fraction(e["num"], e["den"]) for e in entries)
    return CoeffTable(values, data.get("method", "unknown"))


def to_json(table: CoeffTable) -> str:
    return json.dumps(to_json_dict(table), indent=2)


def from_json(text: str) -> CoeffTable:
    return from_json_dict(json.loads(text))
