"""Steed's continued-fraction evaluation of real-axis Coulomb functions.

Used for the regular and irregular Coulomb pair at larger radial arguments,
where the power series of 1F1 on the imaginary axis loses ~exp(2x) in
absolute accuracy, and (with eta = 0) for Bessel J and Y.
"""

from __future__ import annotations

import math

from .hyp import AccuracyError

_TINY = 1e-300
_TOL = 1e-16
_MAXIT = 200000


def cf1(L: float, eta: float, x: float) -> tuple[float, int]:
    """F'/F at x and the sign of F relative to the minimal-solution start.

    Modified Lentz on S_{L+1} - R2_{L+1}/(T_{L+1} - R2_{L+2}/(T_{L+2} - ...)).
    """
    k0 = L + 1.0

    def s(k):
        return k / x + eta / k

    f = s(k0) or _TINY
    c, d = f, 0.0
    sign = 1
    for n in range(_MAXIT):
        k = k0 + n
        a = -(1.0 + eta * eta / (k * k))
        b = s(k) + s(k + 1.0)
        d = b + a * d
        if d == 0.0:
            d = _TINY
        c = b + a / c
        if c == 0.0:
            c = _TINY
        d = 1.0 / d
        if d < 0:
            sign = -sign
        delta = c * d
        f *= delta
        if n > 2 and abs(delta - 1.0) < _TOL:
            return f, sign
    raise AccuracyError("CF1 did not converge", f, abs(delta - 1.0))


def cf2(L: float, eta: float, x: float) -> complex:
    """H+'/H+ at x (Steed's second continued fraction)."""
    f = _TINY + 0j
    c, d = f, 0j
    for k in range(1, _MAXIT):
        a = (1j * eta - L + k - 1) * (1j * eta + L + k)
        b = 2.0 * complex(x - eta, k)
        d = b + a * d
        if d == 0:
            d = _TINY
        c = b + a / c
        if c == 0:
            c = _TINY
        d = 1.0 / d
        delta = c * d
        f *= delta
        if k > 2 and abs(delta - 1.0) < _TOL:
            return 1j * (1.0 - eta / x) + 1j / x * f
    raise AccuracyError("CF2 did not converge", f, abs(delta - 1.0))


def coulomb_fg(L: float, eta: float, x: float) -> tuple[float, float]:
    """Regular and irregular Coulomb functions F_L, G_L for L > -1, x > 0."""
    if x <= 0:
        raise ValueError("Steed's method needs x > 0")
    f, sign = cf1(L, eta, x)
    pq = cf2(L, eta, x)
    p, q = pq.real, pq.imag
    ratio = (f - p) / q
    F = sign / math.sqrt(q * (1.0 + ratio * ratio))
    return F, ratio * F
