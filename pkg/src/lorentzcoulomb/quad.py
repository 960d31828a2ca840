"""Adaptive quadrature for the identity oracles.

The finite-interval engine is tanh-sinh (double exponential) quadrature with
bisection when a panel does not settle. Its nodes approach the endpoints to
within ~1e-300, so algebraic endpoint singularities x^a with a > -1 are
integrated without special treatment provided the integrand can resolve the
distance to the endpoint; :func:`integrate_finite_split` hands the integrand
both endpoint distances for exactly that purpose.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Callable, Optional

__all__ = [
    "QuadConfig",
    "QuadResult",
    "integrate_finite",
    "integrate_finite_split",
    "integrate_semi_infinite",
    "integrate_real_line",
    "wynn_epsilon",
]

Integrand = Callable[[float], complex]

_MAX_LEVEL = 7
_MIN_LEVEL = 2
_TAIL_PIECES = 80


@dataclass(frozen=True)
class QuadConfig:
    abs_tol: float = 1e-12
    rel_tol: float = 1e-9
    max_depth: int = 30
    truncation_radius: float = 8.0
    oscillation_period_hint: Optional[float] = None
    # per call of a finite-interval rule; bisection stops once it is spent
    max_evaluations: int = 400_000

    def __post_init__(self):
        if self.abs_tol < 1e-13 or self.rel_tol < 1e-13:
            raise ValueError("tolerances below 1e-13 are not supported")
        if not 1 <= self.max_depth <= 60:
            raise ValueError("max_depth must lie in [1, 60]")
        if not self.truncation_radius > 0:
            raise ValueError("truncation_radius must be positive")
        if self.oscillation_period_hint is not None and not self.oscillation_period_hint > 0:
            raise ValueError("oscillation_period_hint must be positive")
        if self.max_evaluations < 100:
            raise ValueError("max_evaluations must be at least 100")

    def tolerance(self, value: complex) -> float:
        return max(self.abs_tol, self.rel_tol * abs(value))


@dataclass
class QuadResult:
    value: complex
    error_estimate: float
    evaluations: int
    converged: bool

    def __add__(self, other: "QuadResult") -> "QuadResult":
        return QuadResult(
            self.value + other.value,
            self.error_estimate + other.error_estimate,
            self.evaluations + other.evaluations,
            self.converged and other.converged,
        )


def _node(t: float) -> tuple[float, float]:
    """Distance to the nearer endpoint (unit half-width) and the weight."""
    u = 0.5 * math.pi * math.sinh(abs(t))
    q = math.exp(-2.0 * u)
    if q == 0.0:
        return 0.0, 0.0
    dist = 2.0 * q / (1.0 + q)
    weight = 0.5 * math.pi * math.cosh(t) * 4.0 * q / (1.0 + q) ** 2
    return dist, weight


class _Panel:
    """Tanh-sinh sums on [c, d], where c = a + off_a and d = b - off_b."""

    def __init__(self, g, length: float, off_a: float, off_b: float):
        self.g = g
        self.length = length
        self.off_a = off_a
        self.off_b = off_b
        self.half = 0.5 * (length - off_a - off_b)
        self.evaluations = 0
        self.tmax = 0.0

    def _eval(self, t: float) -> complex:
        dist, weight = _node(t)
        if weight == 0.0:
            return 0j
        d = self.half * dist
        if d == 0.0:
            return 0j
        self.evaluations += 1
        if t < 0:
            left = self.off_a + d
            right = self.length - left
        elif t > 0:
            right = self.off_b + d
            left = self.length - right
        else:
            left = self.off_a + self.half
            right = self.length - left
        return weight * self.g(left, right)

    def level0(self) -> complex:
        total = self._eval(0.0)
        scale = abs(total)
        for side in (1.0, -1.0):
            k = 1
            small = 0
            while True:
                term = self._eval(side * k)
                total += term
                scale = max(scale, abs(term))
                k += 1
                if abs(term) <= 1e-18 * scale:
                    small += 1
                    if small == 2:
                        break
                else:
                    small = 0
                if k > 7:
                    break
            self.tmax = max(self.tmax, float(k))
        return total

    def refine(self, level: int) -> complex:
        h = 2.0**-level
        total = 0j
        n = int(self.tmax / h)
        for j in range(1, n + 1, 2):
            t = j * h
            total += self._eval(t) + self._eval(-t)
        return total


def _integrate_panel(g, length, off_a, off_b, cfg: QuadConfig, depth: int, target, spent):
    """Panel [a + off_a, b - off_b]; bisects until each piece meets its share.

    ``spent`` is a one-element list shared by the whole recursion.
    """
    panel = _Panel(g, length, off_a, off_b)
    try:
        raw = panel.level0()
    finally:
        spent[0] += panel.evaluations
    if not cmath.isfinite(raw):
        raise FloatingPointError("integrand returned a non-finite value")
    estimate = panel.half * raw
    err = math.inf
    for level in range(1, _MAX_LEVEL + 1):
        before = panel.evaluations
        raw += panel.refine(level)
        spent[0] += panel.evaluations - before
        if not cmath.isfinite(raw):
            raise FloatingPointError("integrand returned a non-finite value")
        new = panel.half * raw * 2.0**-level
        err = abs(new - estimate)
        estimate = new
        if target is None and level >= _MIN_LEVEL:
            target = cfg.tolerance(estimate)
        if level >= _MIN_LEVEL and err <= target:
            return QuadResult(estimate, err, panel.evaluations, True)
    if depth >= cfg.max_depth or spent[0] >= cfg.max_evaluations:
        return QuadResult(estimate, err, panel.evaluations, False)
    mid = off_a + panel.half
    left = _integrate_panel(g, length, off_a, length - mid, cfg, depth + 1, target / 2, spent)
    right = _integrate_panel(g, length, mid, off_b, cfg, depth + 1, target / 2, spent)
    result = left + right
    result.evaluations += panel.evaluations
    return result


def integrate_finite_split(
    g: Callable[[float, float], complex], a: float, b: float, cfg: QuadConfig = QuadConfig()
) -> QuadResult:
    """Integral over (a, b) of g(x - a, b - x), both distances passed exactly.

    Use this form when the integrand is singular at an endpoint that is not
    zero: the distances stay accurate where x itself would round to a or b.
    """
    if not a < b:
        raise ValueError("integration needs a < b")
    result = _integrate_panel(g, b - a, 0.0, 0.0, cfg, 0, None, [0])
    result.converged = result.converged and result.error_estimate <= cfg.tolerance(result.value)
    return result


def integrate_finite(f: Integrand, a: float, b: float, cfg: QuadConfig = QuadConfig()) -> QuadResult:
    """Integral of f over (a, b); f may have integrable endpoint singularities.

    Nodes next to b are formed as a + (x - a) and can round onto b, so a
    singularity at a non-zero b needs :func:`integrate_finite_split`.
    """
    return integrate_finite_split(lambda left, right: f(a + left), a, b, cfg)


def wynn_epsilon(partial_sums: list[complex]) -> tuple[complex, float]:
    """Wynn's epsilon extrapolation of a sequence; returns (limit, error)."""
    n = len(partial_sums)
    if n < 3:
        last = partial_sums[-1]
        return last, abs(last - partial_sums[-2]) if n > 1 else math.inf
    prev = [0j] * (n + 1)
    cur = list(partial_sums)
    estimates = [cur[-1]]
    for k in range(1, n):
        nxt = []
        for j in range(len(cur) - 1):
            diff = cur[j + 1] - cur[j]
            if diff == 0:
                # the sequence has converged exactly along this diagonal
                return cur[j + 1], 0.0
            nxt.append(prev[j + 1] + 1.0 / diff)
        prev, cur = cur, nxt
        if k % 2 == 0 and cur:
            estimates.append(cur[-1])
        if len(cur) < 2:
            break
    best = estimates[-1]
    err = abs(best - estimates[-2]) if len(estimates) > 1 else math.inf
    return best, err


def _semi_infinite_plain(f, a, cfg):
    width = 1.0
    total = QuadResult(0j, 0.0, 0, True)
    lo = a
    quiet = 0
    prev_size = math.inf
    growing = 0
    for _ in range(_TAIL_PIECES):
        hi = lo + width
        piece = integrate_finite(f, lo, hi, cfg)
        total = total + piece
        if not piece.converged:
            # wider pieces will not resolve either
            total.error_estimate += abs(piece.value)
            break
        size = abs(piece.value)
        if size <= 0.25 * cfg.tolerance(total.value):
            quiet += 1
            if quiet == 2:
                total.error_estimate += size
                return total
        else:
            quiet = 0
        growing = growing + 1 if size >= prev_size else 0
        if growing >= 8:
            break
        prev_size = size
        lo = hi
        width *= 2.0
    total.converged = False
    return total


def _semi_infinite_oscillatory(f, a, cfg):
    step = 0.5 * cfg.oscillation_period_hint
    total = QuadResult(0j, 0.0, 0, True)
    sums: list[complex] = []
    lo = a
    last_estimate = None
    agree = 0
    for n in range(4 * _TAIL_PIECES):
        piece = integrate_finite(f, lo, lo + step, cfg)
        total = total + piece
        sums.append(total.value)
        lo += step
        if n < 6:
            continue
        estimate, err = wynn_epsilon(sums[-24:])
        if last_estimate is not None:
            err = max(err, abs(estimate - last_estimate))
            if err <= 0.5 * cfg.tolerance(estimate):
                agree += 1
                if agree == 2:
                    return QuadResult(estimate, err + total.error_estimate, total.evaluations, total.converged)
            else:
                agree = 0
        last_estimate = estimate
    return QuadResult(last_estimate, abs(last_estimate - sums[-1]), total.evaluations, False)


def integrate_semi_infinite(f: Integrand, a: float, cfg: QuadConfig = QuadConfig()) -> QuadResult:
    """Integral of f over (a, inf).

    Without a period hint the range is cut at geometrically growing break
    points until two consecutive pieces are negligible. With a hint P the
    range is cut every P/2 and the partial sums are extrapolated with Wynn's
    epsilon algorithm, which also sums conditionally convergent tails.
    """
    if cfg.oscillation_period_hint:
        return _semi_infinite_oscillatory(f, a, cfg)
    return _semi_infinite_plain(f, a, cfg)


def integrate_real_line(f: Integrand, cfg: QuadConfig = QuadConfig()) -> QuadResult:
    """Integral of f over the real line as a symmetric limit.

    [-R, R] is widened by doubling R until the added shell is negligible.
    With a period hint the two tails beyond R are summed with
    :func:`integrate_semi_infinite` instead.
    """
    radius = cfg.truncation_radius
    total = integrate_finite(f, -radius, radius, cfg)
    if cfg.oscillation_period_hint:
        right = integrate_semi_infinite(f, radius, cfg)
        left = integrate_semi_infinite(lambda x: f(-x), radius, cfg)
        return total + right + left
    prev_size = math.inf
    growing = 0
    for _ in range(40):
        shell = integrate_finite(f, radius, 2 * radius, cfg) + integrate_finite(
            f, -2 * radius, -radius, cfg
        )
        total = total + shell
        if not shell.converged:
            total.error_estimate += abs(shell.value)
            break
        radius *= 2
        size = abs(shell.value)
        if size <= 0.5 * cfg.tolerance(total.value):
            total.error_estimate += size
            return total
        growing = growing + 1 if size >= prev_size else 0
        if growing >= 4:
            break
        prev_size = size
    total.converged = False
    return total
