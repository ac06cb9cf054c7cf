"""High-precision quadrature for the two integral representations.

The factorial ratio and its reciprocal both arise as Gaussian-type
integrals built on the kernel phi(z) = 2(e^z - 1 - z)/z^2:

    f(t) = (1/sqrt(pi)) * integral_{-inf}^{inf} e^(-x^2 phi(x t)) dx,
    g(t) = (1/sqrt(pi)) * integral_{-pi/t}^{pi/t} e^(-x^2 phi(i x t)) dx,

with f(sqrt(2/n)) = F(n) and g(sqrt(2/n)) = 1/F(n) for the Stirling ratio
F(n) = n! e^n / (n^n sqrt(2 pi n)).

Quadrature rule: mpmath's tanh-sinh scheme (``mp.quad``), a nested rule
with an a-posteriori error estimate, run at a working precision derived
from the requested tolerance.  The infinite (f) or long (g) domains are
truncated first, with the omitted tails bounded analytically and added to
the reported error estimate:

* x >= 0: e^(-x^2 phi(xt)) <= e^(-x^2) for every t > 0 (phi is increasing
  and phi(0) = 1), so the right tail is below a Gaussian tail.
* x < 0, t <= 1: e^(-x^2 phi(xt)) <= e^(2x+2).
* x < 0, any t: e^u - 1 - u >= -1 - u gives e^(-x^2 phi(xt)) <=
  e^(2/t^2) e^(2x/t), which coincides with the previous envelope at t = 1
  and certifies the left tail for t up to sqrt(2) (the n = 1 case) and
  beyond.
* |Re phi(i theta)| >= 4/pi^2 on [-pi, pi] bounds g's integrand by the
  Gaussian e^(-4 x^2 / pi^2), so g's interval can be shortened when
  pi/t is large.

``bound_checks`` spot-checks these envelope inequalities on grids, via the
auxiliary function psi(u) = u e^u + u + 2 - 2 e^u.

Deterministic for a fixed rule and tolerance; node evaluations are
independent.  (mpmath's working precision is process-global; see the note
in asympt_eval.)
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from mpmath import mp

__all__ = [
    "QuadResult",
    "BoundCheck",
    "ToleranceError",
    "phi_eval",
    "psi_eval",
    "f_integral",
    "g_integral",
    "bound_checks",
]

MIN_PRECISION = 64
_GUARD = 48


class ToleranceError(ArithmeticError):
    """Raised when an integral cannot be certified to the requested tolerance."""


def _check_prec(prec: int) -> None:
    if prec < MIN_PRECISION:
        raise ValueError(f"precision must be >= {MIN_PRECISION} bits, got {prec}")


def _phi(z):
    """phi(z) = 2(e^z - 1 - z)/z^2 at the ambient working precision.

    For |z| < 1/2 the closed form loses roughly 2*log2(1/|z|) bits to
    cancellation, so the Maclaurin series sum_j 2 z^j/(j+2)! is summed
    instead (its terms decay fast enough that the tail below one ulp is
    reached after O(prec / log2(1/|z|)) terms).
    """
    if abs(z) < 0.5:
        term = mp.mpf(1)  # j = 0 term: 2/2!
        total = term
        j = 0
        while True:
            j += 1
            term = term * z / (j + 2)
            total += term
            if abs(term) <= mp.eps * abs(total):
                return total
    return 2 * (mp.exp(z) - 1 - z) / (z * z)


def phi_eval(z, prec: int = 256):
    """phi(z) for real or complex z, relative error at most 2^(-prec+8)."""
    _check_prec(prec)
    with mp.workprec(prec + 16):
        val = _phi(mp.mpmathify(z))
    with mp.workprec(prec):
        return +val


def psi_eval(u, prec: int = 256):
    """psi(u) = u e^u + u + 2 - 2 e^u, the envelope's auxiliary function.

    psi(u) = sum_{k>=3} (k-2) u^k / k! >= 0 for u >= 0, and
    psi(-u) = -e^(-u) psi(u).
    """
    _check_prec(prec)
    with mp.workprec(prec + 16):
        u = mp.mpmathify(u)
        eu = mp.exp(u)
        val = u * eu + u + 2 - 2 * eu
    with mp.workprec(prec):
        return +val


@dataclass(frozen=True)
class QuadResult:
    """Value of an integral with its certified error budget.

    ``value`` is the (real) result, ``imag`` the residual imaginary part
    (identically 0 for f; a symmetry diagnostic for g), ``err_estimate``
    the quadrature error estimate plus the analytic bounds on all omitted
    tails, and ``nodes`` the number of integrand evaluations.
    """

    value: object
    err_estimate: object
    nodes: int
    imag: object


def _tol_workprec(tol, prec: int) -> int:
    bits = int(math.ceil(-math.log2(tol)))
    if bits > prec - 8:
        raise ValueError(
            f"tol={tol} is finer than prec={prec} bits can represent; raise prec"
        )
    return bits + _GUARD


def _quad_with_retry(integrand, points, budget):
    """tanh-sinh with one deeper retry; fails loudly if the estimate misses."""
    val, err = mp.quad(integrand, points, error=True)
    if abs(err) > budget:
        val, err = mp.quad(integrand, points, error=True, maxdegree=10)
        if abs(err) > budget:
            raise ToleranceError(
                f"quadrature error estimate {mp.nstr(abs(err), 5)} exceeds "
                f"budget {mp.nstr(budget, 5)} at maxdegree 10"
            )
    return val, abs(err)


def f_integral(t, prec: int = 256, tol: float = 1e-12) -> QuadResult:
    """f(t) = (1/sqrt(pi)) integral e^(-x^2 phi(xt)) dx with |error| <= tol.

    The infinite domain is truncated to [-X-, X+] where the envelope tails
    (module docstring) are each below tol/4; the truncated integral is then
    computed to well below tol/2 and the tail bounds are added to the
    reported ``err_estimate``.  Any t > 0 is accepted; t = sqrt(2/n) for
    integer n >= 1 gives the Stirling ratio F(n).
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    _check_prec(prec)
    wp = _tol_workprec(tol, prec)
    with mp.workprec(wp):
        t = mp.mpmathify(t)
        if not (t > 0):
            raise ValueError("t must be positive")
        tolm = mp.mpf(tol)
        rpi = mp.sqrt(mp.pi)

        xp = mp.mpf(2)
        while mp.exp(-xp * xp) / (2 * xp * rpi) > tolm / 4:
            xp += mp.mpf(1) / 2
        tail_plus = mp.exp(-xp * xp) / (2 * xp * rpi)

        if t <= 1:
            xm = 1 - mp.log(rpi * tolm / 2) / 2
            tail_minus = mp.exp(2 - 2 * xm) / (2 * rpi)
        else:
            xm = (t / 2) * mp.log(2 * t * mp.exp(2 / (t * t)) / (rpi * tolm))
            tail_minus = mp.exp(2 / (t * t)) * t * mp.exp(-2 * xm / t) / (2 * rpi)

        nodes = [0]

        def integrand(x):
            nodes[0] += 1
            return mp.exp(-x * x * _phi(x * t))

        val, qerr = _quad_with_retry(integrand, [-xm, 0, xp], tolm / 2 * rpi)
        value = val / rpi
        err = qerr / rpi + tail_plus + tail_minus
        if err > tolm:
            raise ToleranceError("f_integral could not certify the tolerance")
    with mp.workprec(prec):
        return QuadResult(+value, +err, nodes[0], mp.mpf(0))


def g_integral(t, prec: int = 256, tol: float = 1e-12) -> QuadResult:
    """g(t) = (1/sqrt(pi)) integral_{-pi/t}^{pi/t} e^(-x^2 phi(ixt)) dx.

    Evaluated in complex arithmetic over the full symmetric interval (the
    integrand at -x is the conjugate of the integrand at x, so the result
    is real; the residual imaginary part is reported as a quadrature
    diagnostic and must stay below tol).  When pi/t is large the interval
    is shortened using the Gaussian envelope e^(-4x^2/pi^2), with the tail
    added to ``err_estimate``.  Returns the real part as ``value``;
    g(sqrt(2/n)) = 1/F(n).
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    _check_prec(prec)
    wp = _tol_workprec(tol, prec)
    with mp.workprec(wp):
        t = mp.mpmathify(t)
        if not (t > 0):
            raise ValueError("t must be positive")
        tolm = mp.mpf(tol)
        rpi = mp.sqrt(mp.pi)
        half_width = mp.pi / t
        c = 4 / (mp.pi * mp.pi)

        cut = mp.mpf(2)
        while mp.exp(-c * cut * cut) / (c * cut * rpi) > tolm / 4:
            cut += mp.mpf(1) / 2
        if cut < half_width:
            b = cut
            tail = mp.exp(-c * cut * cut) / (c * cut * rpi)
        else:
            b = half_width
            tail = mp.mpf(0)

        nodes = [0]

        def integrand(x):
            nodes[0] += 1
            return mp.exp(-x * x * _phi(1j * x * t))

        val, qerr = _quad_with_retry(integrand, [-b, 0, b], tolm / 2 * rpi)
        value = val.real / rpi
        imag = val.imag / rpi
        err = qerr / rpi + tail
        if err > tolm:
            raise ToleranceError("g_integral could not certify the tolerance")
        if abs(imag) > tolm:
            raise ToleranceError(
                f"residual imaginary part {mp.nstr(abs(imag), 5)} exceeds tol: "
                "conjugate symmetry violated, quadrature bug"
            )
    with mp.workprec(prec):
        return QuadResult(+value, +err, nodes[0], +imag)


@dataclass(frozen=True)
class BoundCheck:
    """Outcome of one grid spot-check: smallest observed margin and verdict."""

    name: str
    passed: bool
    worst_margin: object
    detail: str = ""


def _default_grids(prec: int):
    with mp.workprec(prec):
        u_grid = [mp.mpf(i) / 100 for i in range(0, 2001)]          # [0, 20]
        x_grid = [-mp.mpf(i) / 20 for i in range(400, 0, -1)]       # [-20, -0.05]
        t_grid = [mp.mpf(i) / 10 for i in range(0, 11)]             # [0, 1]
        theta_grid = [mp.pi * i / 256 for i in range(0, 257)]       # [0, pi]
    return u_grid, x_grid, t_grid, theta_grid


def bound_checks(
    u_grid: Sequence | None = None,
    x_grid: Sequence | None = None,
    t_grid: Sequence | None = None,
    theta_grid: Sequence | None = None,
    prec: int = 128,
) -> list[BoundCheck]:
    """Spot-check the envelope inequalities behind f and g on finite grids.

    Four checks, each reporting its worst margin:

    1. psi_nonnegative: psi(u) >= 0 on the u grid (u >= 0).
    2. psi_reflection: psi(-u) + e^(-u) psi(u) = 0 to working precision.
    3. integrand_envelopes: in log form, -x^2 phi(xt) <= 2x+2 for grid
       x < 0 and -x^2 phi(xt) <= -x^2 for grid x >= 0, over the t grid.
    4. re_phi_monotone: Re phi(i theta) is non-increasing on [0, pi] and
       bounded below by 4/pi^2, attained at theta = pi.

    Defaults: u in [0, 20] step 0.01, x in [-20, 0) step 0.05, t in [0, 1]
    step 0.1, theta 257 evenly spaced points on [0, pi].
    """
    _check_prec(prec)
    if u_grid is None or x_grid is None or t_grid is None or theta_grid is None:
        du, dx, dt, dth = _default_grids(prec)
        u_grid = du if u_grid is None else u_grid
        x_grid = dx if x_grid is None else x_grid
        t_grid = dt if t_grid is None else t_grid
        theta_grid = dth if theta_grid is None else theta_grid

    checks = []
    with mp.workprec(prec):
        # 1 + 2: one pass over the u grid serves both psi checks
        us = [mp.mpmathify(u) for u in u_grid]
        if any(u < 0 for u in us):
            raise ValueError("u grid must be nonnegative")
        min_psi = mp.inf
        worst_resid = mp.mpf(0)
        max_scale = mp.mpf(1)
        for u in us:
            eu = mp.exp(u)
            psi_u = u * eu + u + 2 - 2 * eu
            emu = 1 / eu
            psi_mu = -u * emu - u + 2 - 2 * emu
            min_psi = min(min_psi, psi_u)
            worst_resid = max(worst_resid, abs(psi_mu + emu * psi_u))
            max_scale = max(max_scale, abs(psi_u))
        checks.append(
            BoundCheck(
                "psi_nonnegative",
                min_psi >= 0,
                min_psi,
                f"min psi(u) over {len(us)} grid points",
            )
        )
        resid_allowed = max_scale * mp.mpf(2) ** (-prec + 12)
        checks.append(
            BoundCheck(
                "psi_reflection",
                worst_resid <= resid_allowed,
                worst_resid,
                f"max |psi(-u) + e^-u psi(u)|, allowed {mp.nstr(resid_allowed, 3)}",
            )
        )

        # 3: envelope margins in log space
        min_margin = mp.inf
        for x in (mp.mpmathify(x) for x in x_grid):
            for t in (mp.mpmathify(t) for t in t_grid):
                log_integrand = -x * x * _phi(x * t)
                envelope = 2 * x + 2 if x < 0 else -x * x
                min_margin = min(min_margin, envelope - log_integrand)
        checks.append(
            BoundCheck(
                "integrand_envelopes",
                min_margin >= 0,
                min_margin,
                "min log-envelope margin over the (x, t) grid",
            )
        )

        # 4: Re phi(i theta) non-increasing, minimum 4/pi^2 at theta = pi
        floor = 4 / (mp.pi * mp.pi)
        slack = mp.mpf(2) ** (-prec + 16)
        thetas = [mp.mpmathify(th) for th in theta_grid]
        vals = [_phi(1j * th).real for th in thetas]
        worst_rise = max(
            (vals[i + 1] - vals[i] for i in range(len(vals) - 1)), default=mp.mpf(0)
        )
        min_above_floor = min(v - floor for v in vals)
        end_gap = abs(vals[-1] - floor)
        passed = worst_rise <= slack and min_above_floor >= -slack and end_gap <= slack
        checks.append(
            BoundCheck(
                "re_phi_monotone",
                passed,
                min_above_floor,
                f"min Re phi(i theta) - 4/pi^2; worst rise {mp.nstr(worst_rise, 3)}, "
                f"gap at pi {mp.nstr(end_gap, 3)}",
            )
        )
    return checks
