"""Principal-branch complex helpers and the complex gamma family.

Every complex power in the package goes through :func:`principal_pow`, so a
single branch convention (arg in (-pi, pi]) holds everywhere.
"""

from __future__ import annotations

import cmath
import math

__all__ = [
    "DomainError",
    "principal_log",
    "principal_pow",
    "ln_gamma",
    "gamma",
    "rgamma",
    "beta",
]


class DomainError(ValueError):
    """Argument outside the domain of a function (pole, branch point, ...)."""


# Lanczos approximation, g = 7, nine terms (about 15 significant digits).
_LANCZOS_G = 7.0
_LANCZOS_COEF = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_HALF_LOG_2PI = 0.5 * math.log(2.0 * math.pi)


def _as_complex(z) -> complex:
    z = complex(z)
    if z.imag == 0.0:
        # drop a negative zero so that negative reals sit on the upper lip
        z = complex(z.real, 0.0)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise DomainError(f"non-finite argument {z!r}")
    return z


def principal_log(z) -> complex:
    z = _as_complex(z)
    if z == 0:
        raise DomainError("logarithm of zero")
    return cmath.log(z)


def principal_pow(base, exponent) -> complex:
    """``exp(exponent * Log(base))`` with arg(base) in (-pi, pi]."""
    base = _as_complex(base)
    exponent = complex(exponent)
    if base == 0:
        if exponent.real > 0:
            return 0j
        raise DomainError("zero base with exponent of non-positive real part")
    if base.imag == 0.0 and base.real > 0 and exponent.imag == 0.0:
        return complex(base.real ** exponent.real)
    return cmath.exp(exponent * cmath.log(base))


def _is_pole(z: complex) -> bool:
    return z.imag == 0.0 and z.real <= 0 and z.real == math.floor(z.real)


def _ln_gamma_right(z: complex) -> complex:
    # valid for Re z >= 1/2
    z = z - 1.0
    series = _LANCZOS_COEF[0]
    for k in range(1, len(_LANCZOS_COEF)):
        series += _LANCZOS_COEF[k] / (z + k)
    t = z + _LANCZOS_G + 0.5
    return _HALF_LOG_2PI + (z + 0.5) * cmath.log(t) - t + cmath.log(series)


def ln_gamma(z) -> complex:
    """Principal branch of log Gamma, continuous on the plane cut along (-inf, 0].

    For Re z < 1/2 the argument is shifted right with the recurrence; the
    principal logs of the shift factors are analytic in each half-plane, so
    the result is the continuous branch (the upper lip on the negative axis).
    """
    z = _as_complex(z)
    if _is_pole(z):
        raise DomainError(f"Gamma has a pole at {z.real:g}")
    if z.imag < 0:
        return ln_gamma(z.conjugate()).conjugate()
    if z.real >= 0.5:
        return _ln_gamma_right(z)
    n = math.ceil(0.5 - z.real)
    acc = 0j
    for k in range(n):
        acc += cmath.log(z + k)
    return _ln_gamma_right(z + n) - acc


def _exp_keep_real(log_value: complex, real_input: bool) -> complex:
    # on the real axis the log's imaginary part is a multiple of pi;
    # drop the rounding residue it leaves so conjugation symmetry is exact
    value = cmath.exp(log_value)
    return complex(value.real) if real_input else value


def gamma(z) -> complex:
    z = _as_complex(z)
    return _exp_keep_real(ln_gamma(z), z.imag == 0.0)


def rgamma(z) -> complex:
    """1/Gamma(z), entire; zero at the poles of Gamma."""
    z = _as_complex(z)
    if _is_pole(z):
        return 0j
    return _exp_keep_real(-ln_gamma(z), z.imag == 0.0)


def beta(z, w) -> complex:
    z = _as_complex(z)
    w = _as_complex(w)
    for arg in (z, w, z + w):
        if _is_pole(arg):
            raise DomainError(f"Beta argument {arg!r} at a Gamma pole")
    return _exp_keep_real(ln_gamma(z) + ln_gamma(w) - ln_gamma(z + w), z.imag == 0.0 and w.imag == 0.0)
