"""Confluent 1F1 and Gauss 2F1 by power series with controlled truncation."""

from __future__ import annotations

import cmath
from dataclasses import dataclass

from .cxcore import DomainError, ln_gamma, principal_pow, rgamma

__all__ = [
    "SeriesPolicy",
    "DEFAULT_POLICY",
    "AccuracyError",
    "hyp1f1",
    "hyp2f1",
]

_EPS = 2.220446049250313e-16


@dataclass(frozen=True)
class SeriesPolicy:
    max_terms: int = 20000
    rel_tol: float = 10 * _EPS

    def __post_init__(self):
        if not 1 <= self.max_terms <= 10**6:
            raise ValueError("max_terms must lie in [1, 10**6]")
        if self.rel_tol < 10 * _EPS:
            raise ValueError("rel_tol must be at least 10 machine epsilons")


DEFAULT_POLICY = SeriesPolicy()


class AccuracyError(ArithmeticError):
    """Series did not reach its tolerance; carries the partial result."""

    def __init__(self, message: str, partial: complex, error_estimate: float):
        super().__init__(message)
        self.partial = partial
        self.error_estimate = error_estimate


def _is_nonpositive_int(z: complex, tol: float = 0.0) -> bool:
    z = complex(z)
    return abs(z.imag) <= tol and z.real <= tol and abs(z.real - round(z.real)) <= tol


def _pfq_series(numer, denom, z: complex, policy: SeriesPolicy) -> complex:
    """Sum of prod (a)_n / prod (b)_n * z^n / n!; stops after three small terms."""
    return _pfq_series_scaled(numer, denom, z, policy)[0]


def _pfq_series_scaled(numer, denom, z: complex, policy: SeriesPolicy) -> tuple[complex, float]:
    """The series and its largest term, whose ratio bounds the rounding loss."""
    term = 1 + 0j
    total = 1 + 0j
    peak = 1.0
    quiet = 0
    for n in range(policy.max_terms):
        ratio = z / (n + 1)
        for a in numer:
            ratio *= a + n
        for b in denom:
            ratio /= b + n
        term *= ratio
        total += term
        peak = max(peak, abs(term))
        if abs(term) <= policy.rel_tol * abs(total):
            quiet += 1
            if quiet == 3:
                return total, peak
        else:
            quiet = 0
    raise AccuracyError(
        f"series not converged after {policy.max_terms} terms", total, abs(term)
    )


def hyp1f1(a, b, z, policy: SeriesPolicy = DEFAULT_POLICY) -> complex:
    """Kummer's 1F1(a; b; z); Kummer's transformation is applied when Re z < 0."""
    a, b, z = complex(a), complex(b), complex(z)
    if _is_nonpositive_int(b):
        raise DomainError("1F1 undefined for b a non-positive integer")
    if z == 0:
        return 1 + 0j
    if z.real < 0 and not _is_nonpositive_int(a):
        return cmath.exp(z) * _pfq_series((b - a,), (b,), -z, policy)
    return _pfq_series((a,), (b,), z, policy)


def hyp2f1(a, b, c, x: float, policy: SeriesPolicy = DEFAULT_POLICY) -> complex:
    """Gauss 2F1(a, b; c; x) for real x in (-1, 1).

    For x > 1/2 the z -> 1 - z connection formula keeps the series argument
    below 1/2. When c - a - b is an integer that formula degenerates; the
    direct series is then summed instead (it still converges for x < 1, only
    more slowly). The connection formula can cancel badly (large imaginary
    parameters); if its rounding error estimate is worse than the direct
    series', the direct series wins.
    """
    a, b, c = complex(a), complex(b), complex(c)
    x = float(x)
    if _is_nonpositive_int(c):
        raise DomainError("2F1 undefined for c a non-positive integer")
    if not -1.0 < x < 1.0:
        raise DomainError(f"2F1 argument {x} outside (-1, 1)")
    if x == 0.0:
        return 1 + 0j
    s = c - a - b
    degenerate = abs(s.imag) < 1e-12 and abs(s.real - round(s.real)) < 1e-12
    if x <= 0.5 or degenerate:
        return _pfq_series((a, b), (c,), complex(x), policy)
    y = complex(1.0 - x)
    first = rgamma(c - a) * rgamma(c - b)
    first_scale = 0.0
    if first != 0:
        series, peak = _pfq_series_scaled((a, b), (1 - s,), y, policy)
        first *= cmath.exp(ln_gamma(c) + ln_gamma(s))
        first_scale = abs(first) * peak
        first *= series
    second = rgamma(a) * rgamma(b)
    second_scale = 0.0
    if second != 0:
        second *= cmath.exp(ln_gamma(c) + ln_gamma(-s)) * principal_pow(y, s)
        series, peak = _pfq_series_scaled((c - a, c - b), (1 + s,), y, policy)
        second_scale = abs(second) * peak
        second *= series
    value = first + second
    loss = (first_scale + second_scale) / max(abs(value), 1e-300)
    if loss < 1e3:
        return value
    try:
        direct, peak = _pfq_series_scaled((a, b), (c,), complex(x), policy)
    except AccuracyError:
        return value
    return direct if peak / max(abs(direct), 1e-300) < loss else value

