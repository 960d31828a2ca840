"""Coulomb wave functions F, G, H+- built on Whittaker functions.

For radial arguments up to ``SERIES_LIMIT`` the Whittaker representations
are summed directly. Beyond it the 1F1 series on the imaginary axis loses
about exp(2*lam) in absolute accuracy, and Steed's continued fractions take
over on the real axis.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Callable

from . import _steed
from .cxcore import DomainError, gamma, ln_gamma, principal_pow
from .hyp import DEFAULT_POLICY, AccuracyError, SeriesPolicy
from .specfun import whittaker_m, whittaker_w, whittaker_w_asymptotic

__all__ = [
    "SERIES_LIMIT",
    "CoulombParams",
    "gamow_c",
    "phase_c",
    "coulomb_f",
    "coulomb_g",
    "coulomb_h",
    "coulomb_f_reflect",
    "coulomb_f_signed",
    "coulomb_h_complex",
    "ode_residual",
]

SERIES_LIMIT = 4.0
_REAL_TOL = 1e-9
# below this the continued fractions converge slowly; the W limit route is used
_STEED_FLOOR = 0.5


@dataclass(frozen=True)
class CoulombParams:
    sigma: float
    rho: float
    lam: float

    def __post_init__(self):
        if not self.lam > 0:
            raise DomainError("the radial variable must be positive")
        if not self.sigma > -1:
            raise DomainError("sigma must exceed -1")


def gamow_c(sigma: float, rho: float) -> float:
    """Normalising constant 2^sigma e^{-pi rho/2} |Gamma(sigma+1+i rho)| / Gamma(2 sigma+2)."""
    log_abs = ln_gamma(complex(sigma + 1, rho)).real
    denom = gamma(2 * sigma + 2).real
    return 2.0**sigma * math.exp(-math.pi * rho / 2 + log_abs) / denom


def phase_c(sigma: float, rho: float) -> float:
    """arg Gamma(sigma + 1 + i rho), reduced to (-pi, pi]."""
    theta = ln_gamma(complex(sigma + 1, rho)).imag
    wrapped = math.remainder(theta, 2 * math.pi)
    return math.pi if wrapped == -math.pi else wrapped


def _f_whittaker(sigma, rho, lam, sign, policy) -> tuple[complex, float]:
    """F from the M-function formula with the chosen sign; also its scale."""
    s = 1 if sign > 0 else -1
    prefactor = 2.0 ** (-sigma - 1) * gamow_c(sigma, rho)
    value = (
        prefactor
        * principal_pow(-s * 1j, sigma + 1)
        * whittaker_m(s * 1j * rho, sigma + 0.5, s * 2j * lam, policy)
    )
    return value, abs(prefactor) * abs(2 * lam) ** (sigma + 1)


def _h_whittaker(sigma, rho, lam, sign, policy) -> complex:
    s = 1 if sign > 0 else -1
    return (
        principal_pow(-s * 1j, sigma)
        * cmath.exp(math.pi * rho / 2 + s * 1j * phase_c(sigma, rho))
        * whittaker_w(-s * 1j * rho, sigma + 0.5, -s * 2j * lam, policy)
    )


def coulomb_f(p: CoulombParams, policy: SeriesPolicy = DEFAULT_POLICY) -> float:
    """Regular Coulomb function F_sigma(rho, lam)."""
    if p.lam > SERIES_LIMIT:
        return _steed.coulomb_fg(p.sigma, p.rho, p.lam)[0]
    value, scale = _f_whittaker(p.sigma, p.rho, p.lam, +1, policy)
    if abs(value.imag) > _REAL_TOL * max(abs(value), scale):
        raise AccuracyError("F has a non-negligible imaginary part", value, abs(value.imag))
    return value.real


def coulomb_h(p: CoulombParams, sign: int = +1, policy: SeriesPolicy = DEFAULT_POLICY) -> complex:
    """Outgoing (sign=+1) or incoming (sign=-1) Coulomb function H+-.

    When 2*sigma + 1 is an integer the Whittaker connection formula is
    indeterminate, so the continued fractions are preferred there as well.
    """
    order = 2 * p.sigma + 1
    degenerate = abs(order - round(order)) < 1e-9
    if p.lam > SERIES_LIMIT or (degenerate and p.lam >= _STEED_FLOOR):
        F, G = _steed.coulomb_fg(p.sigma, p.rho, p.lam)
        return complex(G, F if sign > 0 else -F)
    return _h_whittaker(p.sigma, p.rho, p.lam, sign, policy)


def coulomb_g(p: CoulombParams, policy: SeriesPolicy = DEFAULT_POLICY) -> float:
    """Irregular Coulomb function G = Re H+."""
    return coulomb_h(p, +1, policy).real


def coulomb_f_reflect(sigma: float, rho: float, lam: float) -> float:
    """F_{-sigma-1}(rho, lam) assembled from F_sigma and G_sigma."""
    if not -1 < sigma < 0:
        raise DomainError("both sigma and -sigma-1 must exceed -1")
    theta = (sigma + 0.5) * math.pi + phase_c(-sigma - 1, rho) - phase_c(sigma, rho)
    p = CoulombParams(sigma, rho, lam)
    return math.cos(theta) * coulomb_f(p) + math.sin(theta) * coulomb_g(p)


def coulomb_f_signed(
    sigma: float, rho: float, lam: float, sign: int = +1, policy: SeriesPolicy = DEFAULT_POLICY
) -> complex:
    """The M-function formula for F at any real lam != 0, including lam < 0.

    At negative lam the two sign choices differ by e^{+-2 i pi sigma}; the
    value is complex. Large |lam| uses
    F(rho, -x) = e^{-+ i pi (sigma+1)} e^{-pi rho} F(-rho, x).
    """
    if lam == 0:
        raise DomainError("lam must be non-zero")
    if abs(lam) <= SERIES_LIMIT:
        return _f_whittaker(sigma, rho, lam, sign, policy)[0]
    if lam > 0:
        return complex(_steed.coulomb_fg(sigma, rho, lam)[0])
    s = 1 if sign > 0 else -1
    phase = cmath.exp(-s * 1j * math.pi * (sigma + 1))
    return phase * math.exp(-math.pi * rho) * _steed.coulomb_fg(sigma, -rho, -lam)[0]


def coulomb_h_complex(sigma: float, rho: float, lam: complex, sign: int = +1) -> complex:
    """H+- at complex lam with large modulus (asymptotic Whittaker expansion).

    H+ is continued into Re lam > 0 through the lower half z-plane of W, H-
    through the upper one; callers keep Re lam > 0.
    """
    s = 1 if sign > 0 else -1
    return (
        principal_pow(-s * 1j, sigma)
        * cmath.exp(math.pi * rho / 2 + s * 1j * phase_c(sigma, rho))
        * whittaker_w_asymptotic(-s * 1j * rho, sigma + 0.5, -s * 2j * complex(lam))
    )


def ode_residual(
    func: Callable[[float], float], sigma: float, rho: float, lam: float, h: float = 1e-3
) -> float:
    """|y'' + (1 - 2 rho/lam - sigma(sigma+1)/lam^2) y| with a 5-point stencil."""
    ym2, ym1, y0, yp1, yp2 = (func(lam + k * h) for k in (-2, -1, 0, 1, 2))
    second = (-ym2 + 16 * ym1 - 30 * y0 + 16 * yp1 - yp2) / (12 * h * h)
    potential = 1 - 2 * rho / lam - sigma * (sigma + 1) / lam**2
    return abs(second + potential * y0)
