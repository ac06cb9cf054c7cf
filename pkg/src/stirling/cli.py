"""Command-line interface.

Subcommands:

* ``coeffs``       exact coefficient tables (one method or all, cross-checked)
* ``verify``       exact structural identities + envelope spot-checks
* ``approx``       truncated-series approximation of n! vs the exact value
* ``reciprocal``   the same for 1/n!
* ``quad``         f/g integral evaluations against the Stirling ratio
* ``error-table``  per-(n, N) error rows as CSV/JSON

Exit codes: 0 all checks/tolerances passed, 1 a check or tolerance failed,
2 bad arguments.  Tables and reports go to stdout (or --output); status
lines go to stderr so CSV output stays parseable.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from mpmath import mp

from . import coeffs as coeffs_mod
from .asympt_eval import (
    bigfloat_str,
    error_table,
    error_table_csv,
    factorial_approx,
    reciprocal_factorial_approx,
    stirling_ratio,
)
from .coeffs import (
    CoeffTable,
    coeffs_via_bernoulli,
    coeffs_via_halfpower,
    coeffs_via_recurrence,
    convolution_check,
    log_series_coeffs,
    reciprocal_coeffs,
)
from .exactnum import bernoulli, factorial, rational_str
from .quadrature import ToleranceError, bound_checks, f_integral, g_integral

_METHOD_FUNCS = {
    "recurrence": coeffs_via_recurrence,
    "halfpower": coeffs_via_halfpower,
    "bernoulli": coeffs_via_bernoulli,
}

QUAD_CSV_HEADER = "t,n,value,err_estimate,reference,abs_diff"


def _int_list(text: str) -> list[int]:
    return [int(part) for part in text.split(",") if part.strip()]


def _float_list(text: str) -> list[float]:
    return [float(part) for part in text.split(",") if part.strip()]


def _write_output(text: str, path: str | None) -> None:
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _emit_table(table: CoeffTable, args) -> None:
    if args.format == "json":
        _write_output(coeffs_mod.to_json(table) + "\n", args.output)
    else:
        _write_output(coeffs_mod.to_csv(table), args.output)


def cmd_coeffs(args) -> int:
    if args.method == "all":
        tables = {name: fn(args.max_k) for name, fn in _METHOD_FUNCS.items()}
        values = [t.values for t in tables.values()]
        agree = values[0] == values[1] == values[2]
        _emit_table(tables["recurrence"], args)
        status = "OK" if agree else "MISMATCH"
        print(
            f"cross-check: {status} (methods {', '.join(tables)}; "
            f"k = 0..{args.max_k})",
            file=sys.stderr,
        )
        return 0 if agree else 1
    _emit_table(_METHOD_FUNCS[args.method](args.max_k), args)
    return 0


def verify_checks(table: CoeffTable, prec: int = 256) -> list[tuple[str, bool, str]]:
    """Run the verification battery against a coefficient table.

    Returns (name, passed, worst-margin text) triples; separated from
    cmd_verify so a deliberately corrupted table can be fed in by tests.
    """
    results = []

    conv = convolution_check(table, table.max_k)
    worst = max((abs(s) for s in conv[1:]), default=Fraction(0))
    ok = conv[0] == 1 and worst == 0
    results.append(
        ("convolution_identity", ok, f"worst |s_m| = {rational_str(worst)}, m=1..{table.max_k}")
    )

    logc = log_series_coeffs(table)
    worst_even = max(
        (abs(logc[j]) for j in range(2, table.max_k + 1, 2)), default=Fraction(0)
    )
    odd_ok = all(
        logc[2 * j - 1] == bernoulli(2 * j) / (2 * j * (2 * j - 1))
        for j in range(1, (table.max_k + 1) // 2 + 1)
    )
    results.append(
        (
            "log_series_odd_only",
            worst_even == 0 and odd_ok,
            f"worst |even coeff| = {rational_str(worst_even)}",
        )
    )

    invol = reciprocal_coeffs(reciprocal_coeffs(table)).values == table.values
    results.append(("reciprocal_involution", invol, "exact" if invol else "violated"))

    for check in bound_checks(prec=prec):
        results.append(
            (check.name, check.passed, f"worst margin = {mp.nstr(check.worst_margin, 6)}")
        )
    return results


def cmd_verify(args) -> int:
    table = _METHOD_FUNCS[args.method](args.max_k)
    results = verify_checks(table, prec=args.prec)
    failed = False
    for name, ok, margin in results:
        print(f"{'PASS' if ok else 'FAIL'} {name:24s} {margin}")
        failed = failed or not ok
    return 1 if failed else 0


def cmd_approx(args) -> int:
    table = _METHOD_FUNCS[args.method](args.terms)
    approx = factorial_approx(args.n, args.terms, table, args.prec)
    exact = factorial(args.n)
    with mp.workprec(args.prec):
        rel = abs(approx - exact) / exact
    print(f"n = {args.n}, terms through 1/n^{args.terms}")
    print(f"approx {args.n}! = {bigfloat_str(approx, args.prec)}")
    print(f"exact  {args.n}! = {exact}")
    print(f"relative error = {mp.nstr(rel, 8)}")
    return 0


def cmd_reciprocal(args) -> int:
    table = _METHOD_FUNCS[args.method](args.terms)
    approx = reciprocal_factorial_approx(args.n, args.terms, table, args.prec)
    with mp.workprec(args.prec + 32):
        exact = 1 / mp.mpf(factorial(args.n))
        rel = abs(approx - exact) / exact
    print(f"n = {args.n}, terms through 1/n^{args.terms}")
    print(f"approx 1/{args.n}! = {bigfloat_str(approx, args.prec)}")
    print(f"exact  1/{args.n}! = {bigfloat_str(exact, args.prec)}")
    print(f"relative error = {mp.nstr(rel, 8)}")
    return 0


def cmd_quad(args) -> int:
    if not args.n and not args.t:
        print("quad: provide --n and/or --t", file=sys.stderr)
        return 2
    integral = f_integral if args.which == "f" else g_integral
    rows = []
    failed = False
    jobs = [("n", n) for n in (args.n or [])] + [("t", t) for t in (args.t or [])]
    for kind, spec_value in jobs:
        if kind == "n":
            n = spec_value
            with mp.workprec(args.prec):
                t = mp.sqrt(mp.mpf(2) / n)
            ref = stirling_ratio(n, args.prec)
            if args.which == "g":
                with mp.workprec(args.prec):
                    ref = 1 / ref
        else:
            n, t, ref = None, spec_value, None
        try:
            res = integral(t, prec=args.prec, tol=args.tol)
        except ToleranceError as exc:
            print(f"quad: {exc}", file=sys.stderr)
            failed = True
            continue
        with mp.workprec(args.prec):
            diff = abs(res.value - ref) if ref is not None else None
        if diff is not None and diff > 10 * args.tol:
            failed = True
        rows.append(
            {
                "t": bigfloat_str(mp.mpf(t), args.prec),
                "n": "" if n is None else str(n),
                "value": bigfloat_str(res.value, args.prec),
                "err_estimate": bigfloat_str(res.err_estimate, args.prec),
                "reference": "" if ref is None else bigfloat_str(ref, args.prec),
                "abs_diff": "" if diff is None else bigfloat_str(diff, args.prec),
            }
        )
    if args.format == "json":
        _write_output(json.dumps({"rows": rows}, indent=2) + "\n", args.output)
    else:
        lines = [QUAD_CSV_HEADER]
        lines += [",".join(r[c] for c in QUAD_CSV_HEADER.split(",")) for r in rows]
        _write_output("\n".join(lines) + "\n", args.output)
    return 1 if failed else 0


def cmd_error_table(args) -> int:
    table = _METHOD_FUNCS[args.method](max(args.terms))
    rows = error_table(table, args.n, args.terms, prec=args.prec)
    if args.format == "json":
        payload = {
            "rows": [
                {
                    "n": r.n,
                    "N": r.trunc,
                    "ratio": bigfloat_str(r.ratio, args.prec),
                    "partial": bigfloat_str(r.partial, args.prec),
                    "abs_error": bigfloat_str(r.abs_error, args.prec),
                    "scaled_error": bigfloat_str(r.scaled_error, args.prec),
                }
                for r in rows
            ]
        }
        _write_output(json.dumps(payload, indent=2) + "\n", args.output)
    else:
        _write_output(error_table_csv(rows, prec=args.prec), args.output)
    return 0


def _add_common(p, prec_default=256):
    p.add_argument("--prec", type=int, default=prec_default, help="precision in bits")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--output", default="-", help="output path, '-' for stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stirling",
        description="Exact Stirling-series coefficients and high-precision checks "
        "for the asymptotics of n! and 1/n!.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("coeffs", help="emit a coefficient table")
    p.add_argument("--max-k", type=int, default=20)
    p.add_argument(
        "--method", choices=("recurrence", "halfpower", "bernoulli", "all"), default="all"
    )
    _add_common(p)
    p.set_defaults(func=cmd_coeffs)

    p = sub.add_parser("verify", help="run the exact identity and bound checks")
    p.add_argument("--max-k", type=int, default=20)
    p.add_argument(
        "--method", choices=("recurrence", "halfpower", "bernoulli"), default="recurrence"
    )
    p.add_argument("--prec", type=int, default=256, help="precision in bits")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("approx", help="truncated-series approximation of n!")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--terms", type=int, default=10, help="highest power of 1/n kept")
    p.add_argument("--method", choices=_METHOD_FUNCS, default="bernoulli")
    p.add_argument("--prec", type=int, default=256)
    p.set_defaults(func=cmd_approx)

    p = sub.add_parser("reciprocal", help="truncated-series approximation of 1/n!")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--terms", type=int, default=10)
    p.add_argument("--method", choices=_METHOD_FUNCS, default="bernoulli")
    p.add_argument("--prec", type=int, default=256)
    p.set_defaults(func=cmd_reciprocal)

    p = sub.add_parser("quad", help="evaluate the f/g integrals against references")
    p.add_argument("--which", choices=("f", "g"), required=True)
    p.add_argument("--n", type=_int_list, default=None, help="comma-separated n values")
    p.add_argument("--t", type=_float_list, default=None, help="comma-separated t values")
    p.add_argument("--tol", type=float, default=1e-12)
    _add_common(p)
    p.set_defaults(func=cmd_quad)

    p = sub.add_parser("error-table", help="per-(n, N) truncation error rows")
    p.add_argument("--n", type=_int_list, required=True)
    p.add_argument("--terms", type=_int_list, required=True, help="N values")
    p.add_argument("--method", choices=_METHOD_FUNCS, default="bernoulli")
    _add_common(p)
    p.set_defaults(func=cmd_error_table)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"stirling {args.command}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
