"""Whittaker, Bessel, parabolic cylinder and Legendre functions."""

from __future__ import annotations

import cmath
import enum
import math

from . import _steed
from .cxcore import DomainError, gamma, ln_gamma, principal_pow, rgamma
from .hyp import DEFAULT_POLICY, AccuracyError, SeriesPolicy, hyp1f1, hyp2f1

__all__ = [
    "BesselKind",
    "whittaker_m",
    "whittaker_w",
    "whittaker_w_asymptotic",
    "bessel",
    "hankel_asymptotic",
    "parabolic_d",
    "ferrers_p",
    "legendre_p_offcut",
    "legendre_q_offcut",
]

_EULER_GAMMA = 0.5772156649015329
# step of the symmetric extrapolation used when 2*nu is an integer
_LIMIT_STEP = 2e-3


class BesselKind(enum.Enum):
    J = "J"
    K = "K"
    H1 = "H1"
    H2 = "H2"


def _near_int(v: complex, tol: float = 1e-12) -> bool:
    v = complex(v)
    return abs(v.imag) <= tol and abs(v.real - round(v.real)) <= tol


def whittaker_m(mu, nu, z, policy: SeriesPolicy = DEFAULT_POLICY) -> complex:
    mu, nu, z = complex(mu), complex(nu), complex(z)
    if z == 0:
        raise DomainError("M is evaluated only off the origin")
    b = 2 * nu + 1
    if _near_int(b, 0.0) and b.real <= 0:
        raise DomainError("2*nu + 1 is a non-positive integer")
    return (
        principal_pow(z, nu + 0.5)
        * cmath.exp(-z / 2)
        * hyp1f1(nu - mu + 0.5, b, z, policy)
    )


def _whittaker_w_connection(mu, nu, z, policy) -> complex:
    first = rgamma(0.5 - nu - mu)
    if first != 0:
        first *= gamma(-2 * nu) * whittaker_m(mu, nu, z, policy)
    second = rgamma(0.5 + nu - mu)
    if second != 0:
        second *= gamma(2 * nu) * whittaker_m(mu, -nu, z, policy)
    return first + second


def whittaker_w(mu, nu, z, policy: SeriesPolicy = DEFAULT_POLICY) -> complex:
    """W_{mu,nu}(z) from the connection formula with M_{mu,+-nu}.

    When 2*nu is an integer the formula is indeterminate; W is smooth in nu,
    so the value is recovered from symmetric points nu +- h, nu +- 2h with
    fourth-order Richardson extrapolation (about 1e-11 relative).
    """
    mu, nu, z = complex(mu), complex(nu), complex(z)
    if z == 0:
        raise DomainError("W is evaluated only off the origin")
    if not _near_int(2 * nu, 1e-9):
        return _whittaker_w_connection(mu, nu, z, policy)
    h = _LIMIT_STEP

    def pair(step):
        return 0.5 * (
            _whittaker_w_connection(mu, nu + step, z, policy)
            + _whittaker_w_connection(mu, nu - step, z, policy)
        )

    return (4 * pair(h) - pair(2 * h)) / 3


def whittaker_w_asymptotic(kappa, mu, z, max_terms: int = 80) -> complex:
    """Large-|z| expansion of W_{kappa,mu}(z), valid for |arg z| < 3*pi/2.

    Summed up to the smallest term; raises AccuracyError when that term is
    not below 1e-15 of the sum.
    """
    kappa, mu, z = complex(kappa), complex(mu), complex(z)
    term = 1 + 0j
    total = 1 + 0j
    prev = math.inf
    for k in range(max_terms):
        term *= (0.5 + mu - kappa + k) * (0.5 - mu - kappa + k) / ((k + 1) * -z)
        size = abs(term)
        if size > prev:
            break
        total += term
        prev = size
        if size < 1e-17 * abs(total):
            break
    if prev > 1e-15 * abs(total):
        raise AccuracyError("asymptotic W series too coarse", total, prev)
    return cmath.exp(-z / 2) * principal_pow(z, kappa) * total


def _bessel_series(nu: complex, x: float, modified: bool) -> complex:
    """Ascending series of J_nu (or I_nu when modified)."""
    sgn = 1.0 if modified else -1.0
    if _near_int(nu, 0.0) and nu.real < 0:
        n = -int(round(nu.real))
        factor = 1.0 if modified else (-1.0) ** n
        return factor * _bessel_series(complex(n), x, modified)
    q = sgn * x * x / 4
    term = principal_pow(x / 2, nu) * rgamma(nu + 1)
    total = term
    for k in range(1, 500):
        term *= q / (k * (k + nu))
        total += term
        if abs(term) < 1e-17 * abs(total):
            return total
    raise AccuracyError("Bessel series not converged", total, abs(term))


def _jy_steed(nu: float, x: float) -> tuple[float, float]:
    """J_nu and Y_nu from Coulomb functions at eta = 0 (order L = nu - 1/2)."""
    if nu <= -0.5:
        m = -nu
        jm, ym = _jy_steed(m, x)
        c, s = math.cos(m * math.pi), math.sin(m * math.pi)
        return c * jm - s * ym, s * jm + c * ym
    F, G = _steed.coulomb_fg(nu - 0.5, 0.0, x)
    scale = math.sqrt(math.pi * x / 2)
    return F / scale, -G / scale


def _bessel_j(nu: complex, x: float) -> complex:
    if x <= 1.0 or nu.imag != 0.0:
        return _bessel_series(nu, x, modified=False)
    return complex(_jy_steed(nu.real, x)[0])


def _bessel_y(nu: complex, x: float) -> complex:
    if nu.imag != 0.0:
        raise DomainError("Y is supported for real order only")
    if x <= 1.0 and not _near_int(nu, 1e-9):
        s = math.sin(nu.real * math.pi)
        c = math.cos(nu.real * math.pi)
        return (_bessel_series(nu, x, False) * c - _bessel_series(-nu, x, False)) / s
    return complex(_jy_steed(nu.real, x)[1])


def _bessel_k_small(nu: float, x: float) -> float:
    n = round(nu)
    if abs(nu - n) > 1e-12:
        i_minus = _bessel_series(complex(-nu), x, True).real
        i_plus = _bessel_series(complex(nu), x, True).real
        return math.pi * (i_minus - i_plus) / (2 * math.sin(nu * math.pi))
    # integer order: limiting series for K_0, Wronskian for K_1, then recurrence
    q = x * x / 4
    term, harmonic, tail = 1.0, 0.0, 0.0
    for k in range(1, 200):
        term *= q / (k * k)
        harmonic += 1.0 / k
        tail += term * harmonic
        if term * harmonic < 1e-17 * abs(tail):
            break
    i0 = _bessel_series(0j, x, True).real
    i1 = _bessel_series(1 + 0j, x, True).real
    k0 = -(math.log(x / 2) + _EULER_GAMMA) * i0 + tail
    k1 = (1.0 / x - i1 * k0) / i0
    return _k_upward(0.0, k0, k1, n, x)


def _k_upward(mu: float, k_mu: float, k_next: float, n: int, x: float) -> float:
    if n == 0:
        return k_mu
    for j in range(1, n):
        k_mu, k_next = k_next, k_mu + 2 * (mu + j) / x * k_next
    return k_next


def _bessel_k_cf(nu: float, x: float) -> float:
    """Temme's variant of Steed's CF2 for K_mu, |mu| <= 1/2, then recurrence."""
    n = round(nu)
    mu = nu - n
    mu2 = mu * mu
    b = 2.0 * (1.0 + x)
    d = 1.0 / b
    h = delh = d
    q1, q2 = 0.0, 1.0
    a1 = 0.25 - mu2
    q = c = a1
    a = -a1
    s = 1.0 + q * delh
    for i in range(1, 100000):
        a -= 2 * i
        c = -a * c / (i + 1.0)
        qnew = (q1 - b * q2) / a
        q1, q2 = q2, qnew
        q += c * qnew
        b += 2.0
        d = 1.0 / (b + a * d)
        delh = (b * d - 1.0) * delh
        h += delh
        dels = q * delh
        s += dels
        if abs(dels / s) < 1e-16:
            break
    else:
        raise AccuracyError("K continued fraction not converged", s, abs(dels))
    h *= a1
    k_mu = math.sqrt(math.pi / (2.0 * x)) * math.exp(-x) / s
    k_next = k_mu * (mu + x + 0.5 - h) / x
    return _k_upward(mu, k_mu, k_next, n, x)


def _bessel_k(nu: complex, x: float) -> complex:
    if nu.imag != 0.0:
        raise DomainError("K is supported for real order only")
    order = abs(nu.real)
    if x <= 2.0:
        return complex(_bessel_k_small(order, x))
    return complex(_bessel_k_cf(order, x))


def bessel(kind: BesselKind, nu, x: float) -> complex:
    """J_nu, K_nu, H1_nu or H2_nu at a positive real argument."""
    x = float(x)
    if not x > 0:
        raise DomainError("Bessel functions are evaluated for x > 0 only")
    nu = complex(nu)
    if kind is BesselKind.J:
        return _bessel_j(nu, x)
    if kind is BesselKind.K:
        return _bessel_k(nu, x)
    j = _bessel_j(nu, x)
    y = _bessel_y(nu, x)
    return j + 1j * y if kind is BesselKind.H1 else j - 1j * y


def hankel_asymptotic(kind: BesselKind, nu: float, z: complex) -> complex:
    """Hankel's expansion of H1_nu / H2_nu for large complex z, |arg z| < pi."""
    if kind not in (BesselKind.H1, BesselKind.H2):
        raise ValueError("only Hankel kinds have this expansion")
    z = complex(z)
    rot = 1j if kind is BesselKind.H1 else -1j
    four_nu2 = 4.0 * nu * nu
    term = 1 + 0j
    total = 1 + 0j
    prev = math.inf
    for k in range(1, 80):
        term *= rot * (four_nu2 - (2 * k - 1) ** 2) / (k * 8.0 * z)
        size = abs(term)
        if size > prev:
            break
        total += term
        prev = size
        if size < 1e-17 * abs(total):
            break
    if prev > 1e-15 * abs(total):
        raise AccuracyError("Hankel expansion too coarse", total, prev)
    phase = rot * (z - nu * math.pi / 2 - math.pi / 4)
    return cmath.sqrt(2 / (math.pi * z)) * cmath.exp(phase) * total


def parabolic_d(tau, z, policy: SeriesPolicy = DEFAULT_POLICY) -> complex:
    """D_tau(z) = 2^{tau/2+1/4} z^{-1/2} W_{tau/2+1/4, -1/4}(z^2/2), Re z > 0."""
    tau, z = complex(tau), complex(z)
    if z.real <= 0:
        raise DomainError("the Whittaker route needs Re z > 0")
    kappa = tau / 2 + 0.25
    return (
        principal_pow(2, kappa)
        * principal_pow(z, -0.5)
        * whittaker_w(kappa, -0.25, z * z / 2, policy)
    )


def ferrers_p(mu, nu, x: float, policy: SeriesPolicy = DEFAULT_POLICY) -> complex:
    """Ferrers function of the first kind P^mu_nu(x) on the cut -1 < x < 1."""
    mu, nu, x = complex(mu), complex(nu), float(x)
    if not -1.0 < x < 1.0:
        raise DomainError("Ferrers functions need -1 < x < 1")
    c = 1 - mu
    if _near_int(c, 0.0) and c.real <= 0:
        raise DomainError("1 - mu is a non-positive integer")
    return (
        principal_pow((1 + x) / (1 - x), mu / 2)
        * rgamma(c)
        * hyp2f1(-nu, nu + 1, c, (1 - x) / 2, policy)
    )


def legendre_p_offcut(mu, nu, z: float, policy: SeriesPolicy = DEFAULT_POLICY) -> complex:
    """Legendre P^mu_nu(z) for 1 < z < 3 (hypergeometric argument in (-1, 0))."""
    mu, nu, z = complex(mu), complex(nu), float(z)
    if not 1.0 < z < 3.0:
        raise DomainError("off-cut P is supported for 1 < z < 3")
    c = 1 - mu
    if _near_int(c, 0.0) and c.real <= 0:
        raise DomainError("1 - mu is a non-positive integer")
    return (
        principal_pow((z + 1) / (z - 1), mu / 2)
        * rgamma(c)
        * hyp2f1(-nu, nu + 1, c, (1 - z) / 2, policy)
    )


def legendre_q_offcut(mu, nu, z: float, policy: SeriesPolicy = DEFAULT_POLICY) -> complex:
    """Legendre Q^mu_nu(z) for real |z| > 1, series in 1/z^2.

    (z^2 - 1)^{mu/2} is split as (z + 1)^{mu/2} (z - 1)^{mu/2}, so for z < -1
    the value is the boundary value from the upper half-plane of the function
    analytic off (-inf, 1].
    """
    mu, nu, z = complex(mu), complex(nu), float(z)
    if not abs(z) > 1.0:
        raise DomainError("off-cut Q needs |z| > 1")
    top = nu + mu + 1
    if _near_int(top, 0.0) and top.real <= 0:
        raise DomainError("nu + mu + 1 is a non-positive integer")
    c = nu + 1.5
    if _near_int(c, 0.0) and c.real <= 0:
        raise DomainError("nu + 3/2 is a non-positive integer")
    prefactor = cmath.exp(
        1j * mu * math.pi
        + 0.5 * math.log(math.pi)
        + ln_gamma(top)
        - ln_gamma(c)
        - (nu + 1) * math.log(2.0)
    )
    return (
        prefactor
        * principal_pow(z + 1, mu / 2)
        * principal_pow(z - 1, mu / 2)
        / principal_pow(z, top)
        * hyp2f1((top + 1) / 2, top / 2, c, 1 / (z * z), policy)
    )
