"""Special functions and scalar numerics.

The Lobachevsky (Milnor) function is evaluated through the Clausen
function, ``L(x) = Cl2(2x) / 2``, using the Bernoulli power series

    Cl2(t) = t - t log t + sum_{k>=1} 2 zeta(2k) / (2k (2k+1)) * t (t / 2 pi)^(2k)

after reducing ``x`` to ``[0, pi/2]`` (so ``t`` lies in ``[0, pi]`` and the
series ratio is at most 1/4).
"""

from __future__ import annotations

import math

import numpy as np
from scipy import integrate
from scipy.special import zeta

from .errors import DomainError, QuadratureError

__all__ = [
    "lobachevsky",
    "lobachevsky_tail_bound",
    "lobachevsky_quadrature_oracle",
    "arcosh",
    "golden_section_max",
]

_N_TERMS = 30
_K = np.arange(1, _N_TERMS + 1)
_COEFFS = 2.0 * zeta(2.0 * _K) / (2.0 * _K * (2.0 * _K + 1.0))
_POWERS = 2 * _K


def lobachevsky_tail_bound(n_terms: int = _N_TERMS) -> float:
    """Upper bound on the truncation error of the series for any reduced argument.

    With ``t <= pi`` the ratio ``(t / 2pi)^2`` is at most 1/4, and
    ``zeta(2k) <= zeta(2)``, so the neglected terms of ``Cl2`` are dominated
    by a geometric series. The returned value bounds the error in ``L``.
    """
    k = n_terms + 1
    first = math.pi * 2.0 * zeta(2.0) / (2 * k * (2 * k + 1)) * 0.25**k
    return 0.5 * first / (1.0 - 0.25)


def _reduce(x):
    # odd and pi-periodic: map to [-pi/2, pi/2), then fold the sign out
    r = np.mod(np.asarray(x, dtype=float) + 0.5 * np.pi, np.pi) - 0.5 * np.pi
    return np.sign(r), np.abs(r)


def lobachevsky(x):
    """Milnor's Lobachevsky function ``-int_0^x log|2 sin t| dt``.

    Accepts a scalar or an array; the absolute error is below
    :func:`lobachevsky_tail_bound` plus rounding (about 1e-16).
    """
    sign, r = _reduce(x)
    t = 2.0 * r
    with np.errstate(divide="ignore", invalid="ignore"):
        head = np.where(t > 0.0, t - t * np.log(t), 0.0)
    q = (t / (2.0 * np.pi))[..., None] ** _POWERS
    series = t * np.sum(_COEFFS * q, axis=-1)
    out = 0.5 * sign * (head + series)
    if np.ndim(out) == 0:
        return float(out)
    return out


_LOG2 = math.log(2.0)


def _log2sin(t):
    return math.log(abs(2.0 * math.sin(t)))


def _singular_piece(length):
    """Integral of log|2 sin t| over ``[0, length]`` (equivalently ``[pi - length, pi]``).

    Substitutes t = e^s so the logarithmic blow-up becomes an exponentially
    decaying integrand on (-inf, log(length)]; ``log(2 sin e)`` is split as
    ``log 2 + s + log(sin(e) / e)`` to stay finite when ``e`` underflows.
    """
    def f(s):
        e = math.exp(s)
        sinc = math.sin(e) / e if e > 0.0 else 1.0
        return (_LOG2 + s + math.log(sinc)) * e

    val, err = integrate.quad(f, -np.inf, math.log(length), epsabs=1e-14, epsrel=1e-13, limit=200)
    return val, err


def lobachevsky_quadrature_oracle(x: float, tol: float = 1e-10) -> float:
    """Reference value of the Lobachevsky function by direct quadrature.

    Independent of the series in :func:`lobachevsky`; intended for testing.
    Valid for ``|x| <= pi``.
    """
    x = float(x)
    if not abs(x) <= math.pi:
        raise DomainError(f"quadrature oracle needs |x| <= pi, got {x!r}")
    if x == 0.0:
        return 0.0
    if x < 0:
        return -lobachevsky_quadrature_oracle(-x, tol)

    delta = 0.5
    total, err = 0.0, 0.0
    v, e = _singular_piece(min(x, delta))
    total, err = total + v, err + e
    mid_hi = min(x, math.pi - delta)
    if mid_hi > delta:
        v, e = integrate.quad(_log2sin, delta, mid_hi, epsabs=1e-14, epsrel=1e-13, limit=200)
        total, err = total + v, err + e
    if x > math.pi - delta:
        # integral over [pi - delta, x] = [pi - delta, pi] - [x, pi]
        v, e = _singular_piece(delta)
        total, err = total + v, err + e
        if x < math.pi:
            v, e = _singular_piece(math.pi - x)
            total, err = total - v, err + e
    if not err <= tol:
        raise QuadratureError(f"quadrature error estimate {err:.3g} exceeds {tol:.3g} at x={x!r}")
    return -total


def arcosh(x: float) -> float:
    """Nonnegative inverse of cosh. Arguments below 1 raise :class:`DomainError`."""
    if not x >= 1.0:
        raise DomainError(f"arcosh argument {x!r} is below 1")
    return math.acosh(x)


INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


def golden_section_max(f, a: float, b: float, tol: float = 1e-10, max_iter: int = 500):
    """Golden-section search for the maximum of a unimodal ``f`` on ``[a, b]``.

    Returns ``(x, f(x))``. The endpoints are compared against the interior
    estimate, so a maximum sitting on the boundary is returned exactly.
    """
    if b < a:
        a, b = b, a
    fa, fb = f(a), f(b)
    if b - a <= tol:
        return (a, fa) if fa >= fb else (b, fb)

    lo, hi = a, b
    c = hi - INV_PHI * (hi - lo)
    d = lo + INV_PHI * (hi - lo)
    fc, fd = f(c), f(d)
    for _ in range(max_iter):
        if hi - lo <= tol:
            break
        if fc >= fd:
            hi, d, fd = d, c, fc
            c = hi - INV_PHI * (hi - lo)
            fc = f(c)
        else:
            lo, c, fc = c, d, fd
            d = lo + INV_PHI * (hi - lo)
            fd = f(d)
    xm = 0.5 * (lo + hi)
    best = max([(fa, a), (fb, b), (f(xm), xm)], key=lambda p: p[0])
    return best[1], best[0]
