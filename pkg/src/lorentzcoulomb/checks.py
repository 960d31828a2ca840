"""Both sides of every identity the verifier knows about.

Each check maps a parameter point to an :class:`Evaluation`: an integral
side computed by quadrature and a closed-form side computed from the special
function layer (a few checks compare two closed forms or two quadratures).
Checks with an ambiguous ingredient, such as a branch of (-1)^sigma, return
one (lhs, rhs) pair per candidate and let the runner arbitrate.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Callable, Mapping, Optional

from .coulomb import (
    SERIES_LIMIT,
    CoulombParams,
    coulomb_f,
    coulomb_f_reflect,
    coulomb_f_signed,
    coulomb_h,
    coulomb_h_complex,
)
from .cxcore import DomainError, beta, gamma, principal_pow
from .hyp import hyp1f1, hyp2f1
from .lorentz import (
    Degree,
    HyperboloidPoint,
    Regime,
    XiVector,
    basis_hyperbolic,
    basis_parabolic,
    coeff_minus_quarter,
    coeff_minus_quarter_fg_form,
    coeff_plus,
    coeff_symmetry,
    coulomb_k_transform,
    functional_F1,
    functional_F2,
    hyperbolic_kernel_pairing,
    kernel_F_xi,
    poisson_parabolic,
    poisson_parabolic_at,
)
from .quad import (
    QuadConfig,
    QuadResult,
    integrate_finite,
    integrate_finite_split,
    integrate_real_line,
    integrate_semi_infinite,
)
from .specfun import (
    BesselKind,
    bessel,
    ferrers_p,
    hankel_asymptotic,
    legendre_p_offcut,
    legendre_q_offcut,
    parabolic_d,
)

__all__ = ["CLOSED_FORM", "QUADRATURE", "Evaluation", "CheckDef", "REGISTRY"]

CLOSED_FORM = "closed-form"
QUADRATURE = "quadrature-oracle"

Params = Mapping[str, float]


@dataclass
class Evaluation:
    """Outcome of one check at one point.

    ``variants`` maps candidate names to (lhs, rhs); ``lhs``/``rhs`` are then
    unset until the runner picks one. ``scale`` replaces |rhs| in the
    relative error when the right-hand side is zero by construction.
    """

    lhs: Optional[complex] = None
    rhs: Optional[complex] = None
    variants: dict[str, tuple[complex, complex]] = field(default_factory=dict)
    scale: Optional[float] = None
    converged: bool = True
    diagnostic: dict = field(default_factory=dict)


@dataclass(frozen=True)
class CheckDef:
    check_id: str
    title: str
    params: tuple[str, ...]
    evaluate: Callable[[Params, QuadConfig], Evaluation]
    validate: Callable[[Params], None]
    tolerance: float
    lhs_source: str
    rhs_source: str
    variants: tuple[str, ...] = ()


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise DomainError(message)


def _sigma_open(p: Params) -> None:
    _require(-1 < p["sigma"] < 0, "sigma must lie in (-1, 0)")


def _xi(p: Params, regime: Regime) -> XiVector:
    return XiVector(p["xi1"], p["xi2"], p["xi3"], regime)


def _quad_diag(*results: QuadResult) -> dict:
    return {
        "quad_evaluations": sum(r.evaluations for r in results),
        "quad_error_estimate": sum(r.error_estimate for r in results),
    }


def _rel(a: complex, b: complex) -> float:
    return abs(a - b) / abs(b) if b != 0 else math.inf


# -- transition coefficients -------------------------------------------------


def _thm1(p: Params, cfg: QuadConfig) -> Evaluation:
    sigma, rho, lam = p["sigma"], p["rho"], p["lam"]
    deg = Degree(sigma)
    res = functional_F1(
        lambda x: basis_parabolic(lam, deg.dualized(), x),
        lambda x: basis_hyperbolic(-rho, 1, deg, x),
        cfg,
        support=(-1.0, 1.0),
    )
    return Evaluation(
        res.value / (2 * math.pi), coeff_plus(lam, rho, sigma), converged=res.converged,
        diagnostic=_quad_diag(res),
    )


def _validate_thm1(p: Params) -> None:
    _require(p["sigma"] > -1, "sigma must exceed -1")
    _require(p["lam"] > 0, "lam must be positive")


def _rotated_half_line(g, lam: float, cfg: QuadConfig) -> QuadResult:
    """int_0^inf g(t) e^{i lam t} dt along t = i sign(lam) u."""
    d = 1j if lam > 0 else -1j
    res = integrate_semi_infinite(lambda u: g(d * u) * math.exp(-abs(lam) * u), 0.0, cfg)
    return QuadResult(d * res.value, res.error_estimate, res.evaluations, res.converged)


def _thm2(p: Params, cfg: QuadConfig) -> Evaluation:
    lam, rho = p["lam"], p["rho"]
    s = -0.25
    up = _rotated_half_line(
        lambda t: principal_pow(t, complex(s, rho)) * principal_pow(t + 2, complex(s, -rho)), lam, cfg
    )
    down = _rotated_half_line(
        lambda t: principal_pow(t, complex(s, -rho)) * principal_pow(t + 2, complex(s, rho)), -lam, cfg
    )
    lhs = 2**-s * (cmath.exp(1j * lam) * up.value + cmath.exp(-1j * lam) * down.value) / (2 * math.pi)
    rhs = coeff_minus_quarter(lam, rho)
    printed = coeff_minus_quarter_fg_form(lam, rho)
    diag = _quad_diag(up, down)
    diag.update(printed_form=printed, printed_form_rel_err=_rel(printed, lhs))
    return Evaluation(lhs, rhs, converged=up.converged and down.converged, diagnostic=diag)


def _validate_thm2(p: Params) -> None:
    _require(p["lam"] > 0, "lam must be positive")


def _symm(p: Params, cfg: QuadConfig) -> Evaluation:
    sigma, rho, lam = p["sigma"], p["rho"], p["lam"]
    deg = Degree(sigma)
    res = functional_F1(
        lambda x: basis_hyperbolic(rho, 1, deg.dualized(), x),
        lambda x: basis_parabolic(-lam, deg, x),
        cfg,
        support=(-1.0, 1.0),
    )
    lhs = res.value / (2 * math.pi)
    variants = {
        "lower": (lhs, coeff_symmetry(rho, 1, lam, sigma, -1)),
        "upper": (lhs, coeff_symmetry(rho, 1, lam, sigma, +1)),
    }
    return Evaluation(variants=variants, converged=res.converged, diagnostic=_quad_diag(res))


def _validate_symm(p: Params) -> None:
    _sigma_open(p)
    _require(p["lam"] > 0, "lam must be positive")


# -- Coulomb transforms ------------------------------------------------------


def _thm3(p: Params, cfg: QuadConfig) -> Evaluation:
    sigma, rho = p["sigma"], p["rho"]
    xi = _xi(p, Regime.T3)
    shift, gap, dual = xi.shift, xi.gap, -sigma - 1

    def kernel(lam):
        return lam**-0.5 * bessel(BesselKind.K, sigma + 0.5, gap * lam).real

    reflected = integrate_semi_infinite(
        lambda lam: kernel(lam) * cmath.exp(1j * shift * lam) * coulomb_f_signed(dual, -rho, -lam, +1),
        0.0,
        cfg,
    )
    direct = integrate_semi_infinite(
        lambda lam: kernel(lam) * cmath.exp(-1j * shift * lam) * coulomb_f(CoulombParams(dual, -rho, lam)),
        0.0,
        cfg,
    )
    closed = coulomb_k_transform(sigma, rho, xi)
    variants = {}
    for name, sign in (("plus", 1), ("minus", -1)):
        eps = cmath.exp(sign * 1j * math.pi * sigma)
        variants[name] = (reflected.value + eps * direct.value, eps * closed)
    return Evaluation(
        variants=variants,
        converged=reflected.converged and direct.converged,
        diagnostic=_quad_diag(reflected, direct),
    )


def _validate_t3(p: Params) -> None:
    _sigma_open(p)
    _xi(p, Regime.T3)


# the Coulomb-Hankel integrals are split at this many multiples of 1/gap;
# the asymptotic series behind the tails need |argument| of about 18
_HEAD_SPAN = 20.0
_MIN_FREQUENCY = 0.05


def _tail_frequencies(shift: float, gap: float):
    """(sign of shift term, sign of Coulomb phase, sign of Hankel phase, frequency)."""
    for e1 in (1, -1):
        for e2 in (1, -1):
            for e3 in (1, -1):
                yield e1, e2, e3, e1 * shift + e2 + e3 * gap


def _coulomb_hankel_pair(sigma, rho, shift, gap, cfg):
    """int_0^inf lam^{-1/2} P(lam) J_{+-(sigma+1/2)}(gap lam) d lam, both orders.

    P(lam) = e^{i shift lam} e^{pi rho} F_d(rho, lam) + e^{-i shift lam} F_d(-rho, lam)
    with d = -sigma-1. Up to R the integrand is summed in unit panels; beyond
    R, F is split into H+ and H-, J into H1 and H2, and each of the eight
    products is integrated along the ray on which its exponential decays.
    """
    dual = -sigma - 1
    weight = math.exp(math.pi * rho)
    radius = max(_HEAD_SPAN, _HEAD_SPAN / gap)
    n = int(math.ceil(radius))
    edges = [radius * i / n for i in range(n + 1)]

    def coulomb_part(lam):
        return cmath.exp(1j * shift * lam) * weight * coulomb_f(
            CoulombParams(dual, rho, lam)
        ) + cmath.exp(-1j * shift * lam) * coulomb_f(CoulombParams(dual, -rho, lam))

    values = []
    converged = True
    evaluations = 0
    for order in (sigma + 0.5, -sigma - 0.5):
        total = 0j
        for lo, hi in zip(edges, edges[1:]):
            piece = integrate_finite(
                lambda lam: lam**-0.5 * coulomb_part(lam) * bessel(BesselKind.J, order, gap * lam),
                lo,
                hi,
                cfg,
            )
            total += piece.value
            converged = converged and piece.converged
            evaluations += piece.evaluations
        for e1, e2, e3, omega in _tail_frequencies(shift, gap):
            coeff, eta = (weight, rho) if e1 > 0 else (1.0, -rho)
            kind = BesselKind.H1 if e3 > 0 else BesselKind.H2
            ray = 1j if omega > 0 else -1j

            def tail(lam, coeff=coeff, eta=eta, e1=e1, e2=e2, kind=kind):
                return (
                    lam**-0.5
                    * coeff
                    * cmath.exp(1j * e1 * shift * lam)
                    * e2
                    * coulomb_h_complex(dual, eta, lam, e2)
                    / 2j
                    * hankel_asymptotic(kind, order, gap * lam)
                    / 2
                )

            piece = integrate_finite(lambda u: tail(radius + ray * u), 0.0, 40.0 / abs(omega), cfg)
            total += ray * piece.value
            converged = converged and piece.converged
            evaluations += piece.evaluations
        values.append(total)
    return values[0], values[1], converged, evaluations


def _thm4_printed_rhs(sigma, rho, xi: XiVector) -> complex:
    x1, x2, x3 = xi.xi1, xi.xi2, xi.xi3
    d = x2 * x2 + x3 * x3 - x1 * x1
    plus = x1 + x2
    return (
        principal_pow(-1, sigma + 1)
        * principal_pow(plus, sigma)
        * abs(plus) ** (sigma + 0.5)
        * principal_pow(x1 + abs(x3), 1j * rho)
        * math.sin(math.pi * sigma)
        * math.exp(1.5 * math.pi * rho)
        / (
            2**sigma
            * math.sqrt(math.pi)
            * math.sqrt(d)
            * principal_pow(x1 * x1 - x3 * x3, 0.5j * rho)
            * gamma(sigma + 1)
            * gamma(-sigma)
        )
        * legendre_q_offcut(1j * rho, -sigma - 1, -x2 / math.sqrt(d))
    )


def _thm4(p: Params, cfg: QuadConfig) -> Evaluation:
    sigma, rho = p["sigma"], p["rho"]
    xi = _xi(p, Regime.T4)
    shift, gap = xi.shift, xi.gap
    order_plus, order_minus, converged, evaluations = _coulomb_hankel_pair(sigma, rho, shift, gap, cfg)
    plus = xi.xi1 + xi.xi2
    const = (
        abs(gamma(complex(-sigma, -rho)))
        * math.exp(-math.pi * rho / 2)
        / math.pi
        * (abs(plus) / 2) ** sigma
        * math.sqrt(math.pi)
        * gamma(sigma + 1).real
        * (2 * gap) ** (sigma + 0.5)
    )
    phase = cmath.exp(1j * math.pi * sigma)
    # the branch of (-1)^sigma sits on the finite piece when xi1 + xi2 > 0
    inner, outer = (phase, 1.0) if plus > 0 else (1.0, phase)
    sec = 1 / math.cos(math.pi * sigma)
    rhs = hyperbolic_kernel_pairing(rho, 1, sigma, xi)
    variants = {}
    for name, coeff in (("tan", math.tan(math.pi * sigma)), ("tanh", math.tanh(math.pi * sigma))):
        lhs = const * (inner * order_plus - outer * (sec * order_plus + coeff * order_minus))
        variants[name] = (lhs, rhs)
    printed = _thm4_printed_rhs(sigma, rho, xi)
    return Evaluation(
        variants=variants,
        converged=converged,
        diagnostic={
            "quad_evaluations": evaluations,
            "printed_rhs": printed,
            "printed_rhs_rel_err": _rel(printed, rhs),
            "outer_integral": "half line (0, inf)",
        },
    )


def _validate_thm4(p: Params) -> None:
    _sigma_open(p)
    _require(abs(p["sigma"] + 0.5) > 1e-3, "sec(pi sigma) is singular at sigma = -1/2")
    xi = _xi(p, Regime.T4)
    _require(xi.xi2 < 0, "the Q-function side needs xi2 < 0")
    slowest = min(abs(w) for *_, w in _tail_frequencies(xi.shift, xi.gap))
    _require(slowest >= _MIN_FREQUENCY, "a tail frequency is too close to zero for the ray split")


_RHO_PANEL = 5.0
_RHO_LIMIT = 100.0


def _rho_integral(integrand, cfg: QuadConfig) -> QuadResult:
    """Integral over the real rho line, widened in shells until one is negligible."""
    total = integrate_finite(integrand, -_RHO_PANEL, _RHO_PANEL, cfg)
    radius = _RHO_PANEL
    while radius < _RHO_LIMIT:
        shell = integrate_finite(integrand, radius, radius + _RHO_PANEL, cfg) + integrate_finite(
            integrand, -radius - _RHO_PANEL, -radius, cfg
        )
        total = total + shell
        radius += _RHO_PANEL
        if abs(shell.value) <= cfg.tolerance(total.value):
            return total
    total.converged = False
    return total


def _thm5_printed(lam: float, xi: XiVector, cfg: QuadConfig) -> tuple[complex, complex]:
    x1, x2, x3 = xi.xi1, xi.xi2, xi.xi3
    q = math.sqrt(x1 * x1 - x3 * x3)

    def integrand(rho):
        regular = (
            abs(gamma(complex(0.75, rho)))
            * math.exp(math.pi * rho / 2)
            * coulomb_f(CoulombParams(-0.25, rho, lam))
            / math.pi
        )
        bracket = regular + lam**0.75 * coeff_minus_quarter_fg_form(lam, rho)
        return (
            bracket
            * principal_pow(x1 - x3, complex(-0.125, -rho))
            * principal_pow(x1 + x3, complex(-0.125, rho))
            * beta(complex(0.25, rho), complex(0.25, -rho))
            * ferrers_p(0.25, complex(-0.5, rho), abs(x2) / q)
        )

    lhs = _rho_integral(integrand, cfg).value
    rhs = (
        2**0.75
        * math.sqrt(lam / math.pi)
        * (x1 * x1 - x3 * x3) ** 0.125
        * bessel(BesselKind.K, 0.25, lam * xi.gap)
    )
    return lhs, rhs


def _thm5(p: Params, cfg: QuadConfig) -> Evaluation:
    lam = p["lam"]
    xi = _xi(p, Regime.T3)
    sigma = -0.25

    def integrand(rho):
        return coeff_plus(lam, rho, sigma) * hyperbolic_kernel_pairing(
            rho, 1, sigma, xi
        ) + coeff_minus_quarter(lam, rho) * hyperbolic_kernel_pairing(rho, -1, sigma, xi)

    res = _rho_integral(integrand, cfg)
    rhs = poisson_parabolic_at(lam, sigma, (xi.xi1, xi.xi2, xi.xi3))
    diag = _quad_diag(res)
    try:
        printed_lhs, printed_rhs = _thm5_printed(lam, xi, cfg)
    except (ArithmeticError, DomainError) as exc:
        diag["printed_form_error"] = str(exc)
    else:
        diag.update(
            printed_lhs=printed_lhs,
            printed_rhs=printed_rhs,
            printed_form_rel_err=_rel(printed_lhs, printed_rhs),
        )
    return Evaluation(res.value, rhs, converged=res.converged, diagnostic=diag)


def _validate_thm5(p: Params) -> None:
    _require(p["lam"] > 0, "lam must be positive")
    _xi(p, Regime.T3)


# -- Coulomb function identities ---------------------------------------------


def _refl(p: Params, cfg: QuadConfig) -> Evaluation:
    sigma, rho, lam = p["sigma"], p["rho"], p["lam"]
    return Evaluation(
        complex(coulomb_f_reflect(sigma, rho, lam)),
        complex(coulomb_f(CoulombParams(-sigma - 1, rho, lam))),
    )


def _validate_refl(p: Params) -> None:
    _sigma_open(p)
    _require(p["lam"] > 0, "lam must be positive")


def _eq3(p: Params, cfg: QuadConfig) -> Evaluation:
    params = CoulombParams(p["sigma"], p["rho"], p["lam"])
    f = coulomb_f(params)
    outgoing = coulomb_h(params, +1)
    incoming = coulomb_h(params, -1)
    return Evaluation(
        complex(f),
        complex(outgoing.imag),
        diagnostic={"incoming_rel_err": _rel(complex(-incoming.imag), complex(f))},
    )


def _validate_eq3(p: Params) -> None:
    _require(p["sigma"] > -1, "sigma must exceed -1")
    # beyond the series range F and H share one continued-fraction evaluation
    _require(0 < p["lam"] <= SERIES_LIMIT, "lam must lie in (0, 4]")


# -- Poisson transform -------------------------------------------------------


def _poisson(p: Params, cfg: QuadConfig) -> Evaluation:
    sigma, lam, alpha3, beta3 = p["sigma"], p["lam"], p["alpha3"], p["beta3"]
    y = HyperboloidPoint.from_angles(alpha3, beta3)
    xi = XiVector(y.y1, y.y2, y.y3)
    deg = Degree(sigma)
    hinted = QuadConfig(
        abs_tol=cfg.abs_tol,
        rel_tol=cfg.rel_tol,
        max_depth=cfg.max_depth,
        truncation_radius=cfg.truncation_radius,
        oscillation_period_hint=2 * math.pi / abs(lam),
        max_evaluations=cfg.max_evaluations,
    )
    res = functional_F1(
        lambda x: basis_parabolic(lam, deg.dualized(), x), lambda x: kernel_F_xi(xi, deg, x), hinted
    )
    rhs = poisson_parabolic(lam, sigma, alpha3, beta3)
    diag = _quad_diag(res)
    diag.update(printed_form=rhs / 2, printed_form_rel_err=_rel(rhs / 2, res.value))
    return Evaluation(res.value, rhs, converged=res.converged, diagnostic=diag)


def _validate_poisson(p: Params) -> None:
    _sigma_open(p)
    _require(p["lam"] != 0, "lam must be non-zero")
    _require(-math.pi < p["beta3"] < math.pi, "beta3 must lie in (-pi, pi)")


_FD_STEP = 1e-3


def _homogeneous_poisson(lam: float, sigma: float, y: tuple[float, float, float]) -> complex:
    """The closed form on the hyperboloid, extended off it with degree sigma."""
    y1, y2, y3 = y
    t = math.sqrt(y1 * y1 - y2 * y2 - y3 * y3)
    alpha3 = math.acosh(max(y1 / t, 1.0))
    beta3 = math.atan2(y3, y2)
    return t**sigma * poisson_parabolic(lam, sigma, alpha3, beta3)


def _harmonic(p: Params, cfg: QuadConfig) -> Evaluation:
    sigma, lam = p["sigma"], p["lam"]
    y = HyperboloidPoint.from_angles(p["alpha3"], p["beta3"])
    base = (y.y1, y.y2, y.y3)
    h = _FD_STEP
    centre = _homogeneous_poisson(lam, sigma, base)
    box = 0j
    for axis, sign in ((0, 1.0), (1, -1.0), (2, -1.0)):
        up = list(base)
        down = list(base)
        up[axis] += h
        down[axis] -= h
        second = (
            _homogeneous_poisson(lam, sigma, tuple(up))
            - 2 * centre
            + _homogeneous_poisson(lam, sigma, tuple(down))
        ) / (h * h)
        box += sign * second
    return Evaluation(box, 0j, scale=abs(centre), diagnostic={"value": centre, "step": h})


def _validate_harmonic(p: Params) -> None:
    _validate_poisson(p)
    _require(abs(p["alpha3"]) > 0.05, "the angle chart is singular at alpha3 = 0")


def _legrep_integral(sigma, rho, alpha3, order, cfg):
    dual = -sigma - 1
    weight = math.exp(math.pi * rho)
    shrink = math.exp(-alpha3)

    def integrand(lam):
        combo = weight * coulomb_f(CoulombParams(dual, rho, lam)) + coulomb_f(CoulombParams(dual, -rho, lam))
        return lam**-0.5 * combo * bessel(BesselKind.K, order, lam * shrink)

    return integrate_semi_infinite(integrand, 0.0, cfg)


def _legrep(p: Params, cfg: QuadConfig) -> Evaluation:
    sigma, rho, alpha3 = p["sigma"], p["rho"], p["alpha3"]
    res = _legrep_integral(sigma, rho, alpha3, sigma + 0.5, cfg)
    pre = (
        2
        * math.exp(-alpha3 / 2)
        * math.sqrt(math.cosh(alpha3))
        * abs(gamma(complex(-sigma, -rho)))
        * math.exp(-math.pi * rho / 2)
        / (math.pi * gamma(-2 * sigma) * beta(complex(-sigma, rho), complex(-sigma, -rho)))
    )
    rhs = ferrers_p(sigma + 0.5, complex(-0.5, rho), -math.tanh(alpha3))
    diag = _quad_diag(res)
    if sigma < -0.25:
        printed = _legrep_printed(sigma, rho, alpha3, cfg)
        diag.update(printed_form=printed, printed_form_rel_err=_rel(printed, rhs))
    else:
        diag["printed_form_error"] = "K_{sigma+1} makes the integral diverge at the origin"
    return Evaluation(pre * res.value, rhs, converged=res.converged, diagnostic=diag)


def _legrep_printed(sigma, rho, alpha3, cfg) -> complex:
    dual = -sigma - 1
    eps = cmath.exp(1j * math.pi * sigma)
    shrink = math.exp(-alpha3)

    def integrand(lam):
        combo = coulomb_f_signed(dual, -rho, -lam, +1) + eps * coulomb_f(CoulombParams(dual, -rho, lam))
        return lam**-0.5 * combo * bessel(BesselKind.K, sigma + 1, lam * shrink)

    integral = integrate_semi_infinite(integrand, 0.0, cfg).value
    return (
        2
        * math.exp(-(alpha3 + math.pi * rho) / 2)
        / (
            math.pi
            * gamma(-2 * sigma)
            * beta(complex(-sigma, -rho), complex(-sigma, rho))
            * abs(gamma(complex(-sigma, rho)))
        )
        * integral
    )


def _validate_legrep(p: Params) -> None:
    _sigma_open(p)


def _contour(p: Params, cfg: QuadConfig) -> Evaluation:
    sigma, rho = p["sigma"], p["rho"]
    xi = _xi(p, Regime.T3)
    deg = Degree(sigma)

    def dual(x):
        return basis_hyperbolic(rho, 1, deg.dualized(), x)

    def kernel(x):
        return kernel_F_xi(xi, deg, x)

    parabola = functional_F1(dual, kernel, cfg, support=(-1.0, 1.0))
    hyperbola = functional_F2(dual, kernel, cfg, branches=(1,))
    return Evaluation(
        parabola.value,
        hyperbola.value,
        converged=parabola.converged and hyperbola.converged,
        diagnostic=_quad_diag(parabola, hyperbola),
    )


# -- auxiliary table integrals -----------------------------------------------


def _aux_236(p: Params, cfg: QuadConfig) -> Evaluation:
    """int_0^2 t^{a-1} (2-t)^{b-1} e^{-pt} dt with a, b = sigma+1 -+ i rho, p = -i lam."""
    sigma, rho, lam = p["sigma"], p["rho"], p["lam"]
    a, b, rate, width = complex(sigma + 1, -rho), complex(sigma + 1, rho), -1j * lam, 2.0
    res = integrate_finite_split(
        lambda left, right: principal_pow(left, a - 1) * principal_pow(right, b - 1) * cmath.exp(-rate * left),
        0.0,
        width,
        cfg,
    )
    rhs = beta(a, b) * width ** (a + b - 1) * hyp1f1(a, a + b, -width * rate)
    return Evaluation(res.value, rhs, converged=res.converged, diagnostic=_quad_diag(res))


def _validate_aux_236(p: Params) -> None:
    _require(p["sigma"] > -1, "sigma must exceed -1")


def _aux_229(p: Params, cfg: QuadConfig) -> Evaluation:
    """int_0^inf x^{mu-1} (a x^2 + 2 b x + c)^{-nu} dx."""
    mu = complex(p["mu"], p["mu_im"])
    nu, a, b, c = p["nu"], p["a"], p["b"], p["c"]
    res = integrate_semi_infinite(
        lambda x: principal_pow(x, mu - 1) * (a * x * x + 2 * b * x + c) ** -nu, 0.0, cfg
    )
    front = principal_pow(a, -mu / 2) * principal_pow(c, mu / 2 - nu) * beta(mu, 2 * nu - mu)
    rhs = front * hyp2f1(mu, 2 * nu - mu, nu + 0.5, (1 - b / math.sqrt(a * c)) / 2)
    if b == 0:
        # the printed argument is 1 here: Gauss's sum
        printed = front * gamma(nu + 0.5) * gamma(0.5) / (gamma(nu + 0.5 - mu / 2) * gamma(0.5 + mu / 2))
    else:
        printed = front * hyp2f1(mu / 2, nu - mu / 2, nu + 0.5, 1 - b * b / (a * c))
    diag = _quad_diag(res)
    diag.update(printed_form=printed, printed_form_rel_err=_rel(printed, res.value))
    return Evaluation(res.value, rhs, converged=res.converged, diagnostic=diag)


def _validate_aux_229(p: Params) -> None:
    _require(p["a"] > 0 and p["c"] > 0, "a and c must be positive")
    _require(p["b"] ** 2 < p["a"] * p["c"], "the quadratic must have no real roots")
    _require(0 < p["mu"] < 2 * p["nu"], "0 < Re mu < 2 nu is required")


def _aux_3383(p: Params, cfg: QuadConfig) -> Evaluation:
    """int_0^inf x^{nu-1} (x + beta)^{1/2-nu} e^{-mu x} dx, taken along conj(mu)."""
    nu = complex(p["nu"], p["nu_im"])
    shift = p["beta"]
    rate = complex(p["mu"], p["mu_im"])
    ray = rate.conjugate() / abs(rate)
    res = integrate_semi_infinite(
        lambda u: principal_pow(ray * u, nu - 1)
        * principal_pow(ray * u + shift, 0.5 - nu)
        * math.exp(-abs(rate) * u),
        0.0,
        cfg,
    )
    lhs = ray * res.value
    rhs = (
        2 ** (nu - 0.5)
        / cmath.sqrt(rate)
        * gamma(nu)
        * cmath.exp(shift * rate / 2)
        * parabolic_d(1 - 2 * nu, cmath.sqrt(2 * shift * rate))
    )
    return Evaluation(lhs, rhs, converged=res.converged, diagnostic=_quad_diag(res))


def _validate_aux_3383(p: Params) -> None:
    _require(p["nu"] > 0, "Re nu must be positive")
    _require(p["beta"] > 0, "beta must be positive")
    _require(p["mu"] >= 0 and complex(p["mu"], p["mu_im"]) != 0, "Re mu >= 0, mu != 0")


def _aux_2548(p: Params, cfg: QuadConfig) -> Evaluation:
    """int_0^inf cos(b x) (a + cosh c x)^{-nu} dx."""
    a, b, c, nu = p["a"], p["b"], p["c"], p["nu"]
    res = integrate_semi_infinite(lambda x: math.cos(b * x) * (a + math.cosh(c * x)) ** -nu, 0.0, cfg)
    rhs = (
        math.exp(b * math.pi / c)
        * gamma(complex(nu, -b / c))
        / (c * (a * a - 1) ** (nu / 2) * gamma(nu))
        * legendre_q_offcut(1j * b / c, nu - 1, a / math.sqrt(a * a - 1))
    )
    return Evaluation(res.value, rhs, converged=res.converged, diagnostic=_quad_diag(res))


def _validate_aux_2548(p: Params) -> None:
    _require(p["a"] > 1, "a > 1 is required")
    _require(p["b"] > 0 and p["c"] > 0 and p["nu"] > 0, "b, c and nu must be positive")


def _aux_2353(p: Params, cfg: QuadConfig) -> Evaluation:
    """int_{-w}^{w} e^{i lam t} (w^2 - t^2)^sigma dt, w the half width."""
    sigma, lam, half = p["sigma"], p["lam"], p["half_width"]
    res = integrate_finite_split(
        lambda left, right: cmath.exp(1j * lam * (left - half)) * (left * right) ** sigma,
        -half,
        half,
        cfg,
    )
    rhs = (
        (2 * half / lam) ** (sigma + 0.5)
        * math.sqrt(math.pi)
        * gamma(sigma + 1)
        * bessel(BesselKind.J, sigma + 0.5, lam * half)
    )
    return Evaluation(res.value, rhs, converged=res.converged, diagnostic=_quad_diag(res))


def _validate_aux_235(p: Params) -> None:
    _require(-1 < p["sigma"] < 0, "sigma must lie in (-1, 0)")
    _require(p["lam"] > 0 and p["half_width"] > 0, "lam and the half width must be positive")


def _aux_2355(p: Params, cfg: QuadConfig) -> Evaluation:
    """Sum over both signs of int_w^inf e^{+-i lam t} (t^2 - w^2)^sigma dt.

    With t = w + u each half is rotated onto u = +-i v, where it decays.
    """
    sigma, lam, half = p["sigma"], p["lam"], p["half_width"]
    total = 0j
    results = []
    for sign in (1, -1):
        ray = sign * 1j
        res = integrate_semi_infinite(
            lambda v: principal_pow(ray * v, sigma)
            * principal_pow(2 * half + ray * v, sigma)
            * math.exp(-lam * v),
            0.0,
            cfg,
        )
        total += ray * cmath.exp(sign * 1j * lam * half) * res.value
        results.append(res)
    k_abs = half / 2
    hankel_gap = bessel(BesselKind.H1, -sigma - 0.5, lam * half) - bessel(
        BesselKind.H2, -sigma - 0.5, lam * half
    )
    rhs = 4**sigma * math.sqrt(math.pi) * 1j * (lam / k_abs) ** (-sigma - 0.5) * gamma(sigma + 1) * hankel_gap
    return Evaluation(
        total, rhs, converged=all(r.converged for r in results), diagnostic=_quad_diag(*results)
    )


def _aux_london(p: Params, cfg: QuadConfig) -> Evaluation:
    """int_R [a^2 + (x + sign b)^2]^{-nu} e^{i x y} dx."""
    a, b, nu, y = p["a"], p["b"], p["nu"], p["y"]
    sign = 1.0 if p["sign"] > 0 else -1.0
    hinted = QuadConfig(
        abs_tol=cfg.abs_tol,
        rel_tol=cfg.rel_tol,
        max_depth=cfg.max_depth,
        truncation_radius=cfg.truncation_radius,
        oscillation_period_hint=2 * math.pi / abs(y),
        max_evaluations=cfg.max_evaluations,
    )
    res = integrate_real_line(lambda x: (a * a + (x + sign * b) ** 2) ** -nu * cmath.exp(1j * x * y), hinted)
    rhs = (
        2
        * math.sqrt(math.pi)
        * cmath.exp(-sign * 1j * b * y)
        / gamma(nu)
        * (abs(y) / (2 * a)) ** (nu - 0.5)
        * bessel(BesselKind.K, nu - 0.5, a * abs(y))
    )
    return Evaluation(res.value, rhs, converged=res.converged, diagnostic=_quad_diag(res))


def _validate_aux_london(p: Params) -> None:
    _require(p["a"] > 0 and p["nu"] > 0, "a and nu must be positive")
    _require(p["y"] != 0, "y must be non-zero")
    _require(p["sign"] in (1.0, -1.0), "sign must be +1 or -1")


def _aux_hankel(p: Params, cfg: QuadConfig) -> Evaluation:
    """H1 - H2 of order -sigma-1/2 against J of orders +-(sigma+1/2)."""
    sigma, x = p["sigma"], p["x"]
    order = sigma + 0.5
    lhs = bessel(BesselKind.H1, -order, x) - bessel(BesselKind.H2, -order, x)
    j_plus = bessel(BesselKind.J, order, x)
    j_minus = bessel(BesselKind.J, -order, x)
    sec = 1 / math.cos(math.pi * sigma)
    rhs = 2j * (sec * j_plus + math.tan(math.pi * sigma) * j_minus)
    printed = 2j * (sec * j_plus - math.tanh(math.pi * sigma) * j_minus)
    return Evaluation(lhs, rhs, diagnostic={"printed_form": printed, "printed_form_rel_err": _rel(printed, lhs)})


def _validate_aux_hankel(p: Params) -> None:
    _sigma_open(p)
    _require(abs(p["sigma"] + 0.5) > 1e-3, "sec(pi sigma) is singular at sigma = -1/2")
    # below 1 the library forms Y from J by the same identity
    _require(p["x"] > 1, "x > 1 keeps the two sides independent")


def _aux_7341(p: Params, cfg: QuadConfig) -> Evaluation:
    """2F1(a, b; a+b+1/2; x) against a Ferrers function, a, b = (-sigma +- i rho)/2 conj."""
    sigma, rho, x = p["sigma"], p["rho"], p["x"]
    a = complex(-sigma, rho) / 2
    b = complex(-sigma, -rho) / 2
    lhs = hyp2f1(a, b, a + b + 0.5, x)
    rhs = (
        principal_pow(2, a + b - 0.5)
        * principal_pow(x, (1 - 2 * a - 2 * b) / 4)
        * gamma(a + b + 0.5)
        * ferrers_p(0.5 - a - b, a - b - 0.5, math.sqrt(1 - x))
    )
    return Evaluation(lhs, rhs)


def _validate_aux_7341(p: Params) -> None:
    _sigma_open(p)
    _require(0 < p["x"] < 1, "x must lie in (0, 1)")


def _pqconn(p: Params, cfg: QuadConfig) -> Evaluation:
    mu = p["mu"]
    nu = complex(p["nu"], p["nu_im"])
    z = p["z"]
    lhs = legendre_p_offcut(mu, nu, z)
    printed = (
        math.sqrt(2 / math.pi)
        * 1j
        * cmath.exp(1j * nu * math.pi)
        * (z * z - 1) ** -0.25
        * legendre_q_offcut(-nu - 0.5, -mu - 0.5, z / math.sqrt(z * z - 1))
    )
    rhs = printed / gamma(-nu - mu)
    return Evaluation(lhs, rhs, diagnostic={"printed_form": printed, "printed_form_rel_err": _rel(printed, lhs)})


def _validate_pqconn(p: Params) -> None:
    _require(1 < p["z"] < 3, "z must lie in (1, 3)")


_THEOREM_TOL = 1e-6
_ALGEBRAIC_TOL = 1e-9
_AUX_TOL = 1e-7

_DEFS = [
    CheckDef("THM1", "parabolic to + hyperbolic coefficient", ("sigma", "rho", "lam"),
             _thm1, _validate_thm1, _THEOREM_TOL, QUADRATURE, CLOSED_FORM),
    CheckDef("THM2", "parabolic to - hyperbolic coefficient at sigma = -1/4", ("lam", "rho"),
             _thm2, _validate_thm2, _THEOREM_TOL, QUADRATURE, CLOSED_FORM),
    CheckDef("THM3", "K transform of Coulomb functions (T3)", ("sigma", "rho", "xi1", "xi2", "xi3"),
             _thm3, _validate_t3, 1e-5, QUADRATURE, CLOSED_FORM, ("plus", "minus")),
    CheckDef("THM4", "Hankel transforms of Coulomb functions (T4)", ("sigma", "rho", "xi1", "xi2", "xi3"),
             _thm4, _validate_thm4, 1e-5, QUADRATURE, CLOSED_FORM, ("tan", "tanh")),
    CheckDef("THM5", "rho integral of coefficients against conical functions", ("lam", "xi1", "xi2", "xi3"),
             _thm5, _validate_thm5, 1e-5, QUADRATURE, CLOSED_FORM),
    CheckDef("REFL", "reflection formula for F_{-sigma-1}", ("sigma", "rho", "lam"),
             _refl, _validate_refl, 1e-8, CLOSED_FORM, CLOSED_FORM),
    CheckDef("EQ3", "F = Im H+", ("sigma", "rho", "lam"),
             _eq3, _validate_eq3, _ALGEBRAIC_TOL, CLOSED_FORM, CLOSED_FORM),
    CheckDef("POISSON", "Poisson transform of the parabolic function", ("sigma", "lam", "alpha3", "beta3"),
             _poisson, _validate_poisson, _THEOREM_TOL, QUADRATURE, CLOSED_FORM),
    CheckDef("HARMONIC", "(1,2)-Laplacian of the Poisson transform", ("sigma", "lam", "alpha3", "beta3"),
             _harmonic, _validate_harmonic, 1e-4, CLOSED_FORM, CLOSED_FORM),
    CheckDef("LEGREP", "K-integral representation of a conical function", ("sigma", "rho", "alpha3"),
             _legrep, _validate_legrep, _THEOREM_TOL, QUADRATURE, CLOSED_FORM),
    CheckDef("SYMM", "hyperbolic to parabolic coefficient by symmetry", ("sigma", "rho", "lam"),
             _symm, _validate_symm, _THEOREM_TOL, QUADRATURE, CLOSED_FORM, ("lower", "upper")),
    CheckDef("CONTOUR", "parabola and hyperbola pairings agree", ("sigma", "rho", "xi1", "xi2", "xi3"),
             _contour, _validate_t3, _THEOREM_TOL, QUADRATURE, QUADRATURE),
    CheckDef("AUX-2.3.6", "beta-type integral with exponential", ("sigma", "rho", "lam"),
             _aux_236, _validate_aux_236, _AUX_TOL, QUADRATURE, CLOSED_FORM),
    CheckDef("AUX-2.2.9", "Mellin transform of a quadratic power", ("mu", "mu_im", "nu", "a", "b", "c"),
             _aux_229, _validate_aux_229, _AUX_TOL, QUADRATURE, CLOSED_FORM),
    CheckDef("AUX-3.383", "Laplace transform giving a parabolic cylinder function",
             ("nu", "nu_im", "beta", "mu", "mu_im"),
             _aux_3383, _validate_aux_3383, _AUX_TOL, QUADRATURE, CLOSED_FORM),
    CheckDef("AUX-2.5.48", "cosine transform of a cosh power", ("a", "b", "c", "nu"),
             _aux_2548, _validate_aux_2548, _AUX_TOL, QUADRATURE, CLOSED_FORM),
    CheckDef("AUX-2.3.5.3", "finite Fourier transform of (w^2 - t^2)^sigma", ("sigma", "lam", "half_width"),
             _aux_2353, _validate_aux_235, _AUX_TOL, QUADRATURE, CLOSED_FORM),
    CheckDef("AUX-2.3.5.5", "Fourier tails of (t^2 - w^2)^sigma", ("sigma", "lam", "half_width"),
             _aux_2355, _validate_aux_235, _AUX_TOL, QUADRATURE, CLOSED_FORM),
    CheckDef("AUX-LONDON", "Fourier transform of a shifted quadratic power", ("a", "b", "nu", "y", "sign"),
             _aux_london, _validate_aux_london, _AUX_TOL, QUADRATURE, CLOSED_FORM),
    CheckDef("AUX-HANKEL", "H1 - H2 through J of opposite orders", ("sigma", "x"),
             _aux_hankel, _validate_aux_hankel, _ALGEBRAIC_TOL, CLOSED_FORM, CLOSED_FORM),
    CheckDef("AUX-7.3.1", "2F1 as a Ferrers function", ("sigma", "rho", "x"),
             _aux_7341, _validate_aux_7341, _ALGEBRAIC_TOL, CLOSED_FORM, CLOSED_FORM),
    CheckDef("PQCONN", "P off the cut through Q", ("mu", "nu", "nu_im", "z"),
             _pqconn, _validate_pqconn, _ALGEBRAIC_TOL, CLOSED_FORM, CLOSED_FORM),
]

REGISTRY: dict[str, CheckDef] = {d.check_id: d for d in _DEFS}
