"""Cone functions of the proper Lorentz group SO(2,1) and their pairings.

Points live on the cone x1^2 - x2^2 - x3^2 = 0. Functions of homogeneity
degree sigma pair with functions of the dual degree -sigma-1 through contour
integrals over the parabola x1 + x2 = 1 or the two hyperbola branches
x2 = +-1. The transition coefficients between the parabolic basis
(eigenfunctions of the h1 shifts) and the hyperbolic basis (eigenfunctions of
the h2 boosts) are expressed through Coulomb wave functions.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

from .coulomb import (
    CoulombParams,
    coulomb_f,
    coulomb_f_signed,
    coulomb_h,
    phase_c,
)
from .cxcore import DomainError, beta, gamma, ln_gamma, principal_pow
from .quad import QuadConfig, QuadResult, integrate_finite_split, integrate_real_line
from .specfun import BesselKind, bessel, ferrers_p, legendre_q_offcut

__all__ = [
    "ConePoint",
    "HyperboloidPoint",
    "Regime",
    "XiVector",
    "Degree",
    "gamma1_point",
    "gamma2_point",
    "basis_parabolic",
    "basis_hyperbolic",
    "kernel_F_xi",
    "functional_F1",
    "functional_F2",
    "coeff_plus",
    "coeff_plus_signed",
    "coeff_minus_quarter",
    "coeff_minus_quarter_fg_form",
    "coeff_symmetry",
    "hyperbolic_kernel_pairing",
    "coulomb_k_transform",
    "poisson_parabolic",
    "poisson_parabolic_at",
    "h1_matrix",
    "h2_matrix",
    "act",
]

ConeFunction = Callable[["ConePoint"], complex]

_CONE_TOL = 1e-12
# nodes closer than this to a support end are dropped: (1 + alpha)^2 would
# underflow, and for endpoint exponents above -0.9 their share is below 1e-15
_EDGE_CUTOFF = 1e-150


@dataclass(frozen=True)
class ConePoint:
    """A point of the cone.

    ``plus12`` and ``plus13`` hold x1 + x2 and x1 + x3. They default to the
    plain sums; constructors that know them more accurately than the rounded
    components (near the cone's edges the sums cancel) pass them in.
    """

    x1: float
    x2: float
    x3: float
    plus12: Optional[float] = field(default=None, repr=False, compare=False)
    plus13: Optional[float] = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        scale = self.x1 * self.x1 + self.x2 * self.x2 + self.x3 * self.x3
        if scale == 0.0:
            raise DomainError("the cone's vertex is excluded")
        residual = self.x1 * self.x1 - self.x2 * self.x2 - self.x3 * self.x3
        if abs(residual) > _CONE_TOL * scale:
            raise DomainError(f"point is off the cone (residual {residual:.3e})")
        if self.plus12 is None:
            object.__setattr__(self, "plus12", self.x1 + self.x2)
        if self.plus13 is None:
            object.__setattr__(self, "plus13", self.x1 + self.x3)

    def scaled(self, t: float) -> "ConePoint":
        return ConePoint(t * self.x1, t * self.x2, t * self.x3, t * self.plus12, t * self.plus13)


@dataclass(frozen=True)
class HyperboloidPoint:
    y1: float
    y2: float
    y3: float

    def __post_init__(self):
        residual = self.y1 * self.y1 - self.y2 * self.y2 - self.y3 * self.y3 - 1.0
        if abs(residual) > _CONE_TOL * max(1.0, self.y1 * self.y1):
            raise DomainError("point is off the unit hyperboloid")

    @classmethod
    def from_angles(cls, alpha3: float, beta3: float) -> "HyperboloidPoint":
        """(cosh a, sinh a cos b, sinh a sin b)."""
        sh = math.sinh(alpha3)
        return cls(math.cosh(alpha3), sh * math.cos(beta3), sh * math.sin(beta3))


class Regime(enum.Enum):
    T3 = "T3"  # |xi2| < sqrt(xi1^2 - xi3^2)
    T4 = "T4"  # |xi2| > sqrt(xi1^2 - xi3^2) > 0


@dataclass(frozen=True)
class XiVector:
    """Parameter vector of the kernel (xi1 x1 - xi2 x2 - xi3 x3)^sigma."""

    xi1: float
    xi2: float
    xi3: float
    regime: Optional[Regime] = None

    def __post_init__(self):
        if not self.xi1 > self.xi3:
            raise DomainError("xi1 > xi3 is required")
        if self.xi1 + self.xi2 == 0.0:
            raise DomainError("xi1 + xi2 must be non-zero")
        q2 = self.xi1 * self.xi1 - self.xi3 * self.xi3
        if abs(self.xi2) < math.sqrt(q2):
            found = Regime.T3
        elif q2 > 0 and abs(self.xi2) > math.sqrt(q2):
            found = Regime.T4
        else:
            raise DomainError("xi lies on the boundary between the two regimes")
        if self.regime is None:
            object.__setattr__(self, "regime", found)
        elif self.regime is not found:
            raise DomainError(f"xi is in regime {found.value}, not {self.regime.value}")

    @property
    def shift(self) -> float:
        """xi3 / (xi1 + xi2): centre of the kernel's quadratic on the parabola."""
        return self.xi3 / (self.xi1 + self.xi2)

    @property
    def gap(self) -> float:
        """sqrt|xi1^2 - xi2^2 - xi3^2| / |xi1 + xi2|.

        In T3 it is the decay rate of the parabolic pairing, in T4 the
        half-distance between the kernel's two real zeros on the parabola.
        """
        d = self.xi1 * self.xi1 - self.xi2 * self.xi2 - self.xi3 * self.xi3
        return math.sqrt(abs(d)) / abs(self.xi1 + self.xi2)


@dataclass(frozen=True)
class Degree:
    sigma: float
    dual: bool = False

    @property
    def exponent(self) -> float:
        return -self.sigma - 1.0 if self.dual else self.sigma

    def dualized(self) -> "Degree":
        return Degree(self.sigma, not self.dual)


def gamma1_point(alpha1: float) -> ConePoint:
    """Point of the parabola x1 + x2 = 1 with x3 = alpha1."""
    sq = alpha1 * alpha1
    return ConePoint(
        0.5 * (1.0 + sq), 0.5 * (1.0 - sq), alpha1, 1.0, 0.5 * (1.0 + alpha1) ** 2
    )


def _gamma1_between(a: float, b: float, left: float, right: float) -> ConePoint:
    """Parabola point at alpha1 = a + left = b - right with exact edge distances."""
    alpha = a + left if left <= right else b - right
    up = (1.0 + a) + left if left <= right else (1.0 + b) - right
    down = (1.0 - b) + right if left > right else (1.0 - a) - left
    x2 = 0.5 * up * down
    return ConePoint(1.0 - x2, x2, alpha, 1.0, 0.5 * up * up)


def gamma2_point(alpha2: float, branch: int) -> ConePoint:
    """Point (cosh a, +-1, sinh a) of a hyperbola branch."""
    if branch not in (1, -1):
        raise ValueError("branch must be +1 or -1")
    ch = math.cosh(alpha2)
    # cosh a - 1 written without cancellation
    plus12 = ch + 1.0 if branch > 0 else 2.0 * math.sinh(alpha2 / 2) ** 2
    return ConePoint(ch, float(branch), math.sinh(alpha2), plus12, math.exp(alpha2))


def basis_parabolic(lam: float, deg: Degree, x: ConePoint) -> complex:
    """(x1 + x2)^d exp(i lam x3 / (x1 + x2)), d the degree's exponent."""
    base = x.plus12
    if base == 0.0:
        raise DomainError("x1 + x2 = 0 on this point")
    return principal_pow(base, deg.exponent) * cmath.exp(1j * lam * x.x3 / base)


def basis_hyperbolic(rho: float, branch: int, deg: Degree, x: ConePoint) -> complex:
    """(x2)_+-^{d - i rho} (x1 + x3)^{i rho}; zero off the chosen half of the cone."""
    if x.plus13 <= 0.0:
        raise DomainError("x1 + x3 must be positive")
    if branch * x.x2 <= 0.0:
        return 0j
    return principal_pow(abs(x.x2), complex(deg.exponent, -rho)) * principal_pow(
        x.plus13, 1j * rho
    )


def kernel_F_xi(xi: XiVector, deg: Degree, x: ConePoint) -> complex:
    """(xi1 x1 - xi2 x2 - xi3 x3)^sigma; always degree sigma, whatever deg.dual says."""
    base = xi.xi1 * x.x1 - xi.xi2 * x.x2 - xi.xi3 * x.x3
    if base == 0.0:
        raise DomainError("kernel base vanishes")
    return principal_pow(base, deg.sigma)


def functional_F1(
    f: ConeFunction,
    g: ConeFunction,
    cfg: QuadConfig = QuadConfig(),
    support: Optional[tuple[float, float]] = None,
) -> QuadResult:
    """Integral of f g over the parabola, d alpha1.

    With ``support=(a, b)`` the product is taken to vanish outside [a, b]
    and may be singular at a and b; the points handed to f and g then carry
    exact distances to the ends.
    """
    if support is None:
        return integrate_real_line(lambda t: f(gamma1_point(t)) * g(gamma1_point(t)), cfg)
    a, b = support

    def integrand(left, right):
        if min(left, right) < _EDGE_CUTOFF:
            return 0j
        x = _gamma1_between(a, b, left, right)
        return f(x) * g(x)

    return integrate_finite_split(integrand, a, b, cfg)


def functional_F2(
    f: ConeFunction,
    g: ConeFunction,
    cfg: QuadConfig = QuadConfig(),
    branches: Sequence[int] = (1, -1),
) -> QuadResult:
    """Sum over the hyperbola branches of the integral of f g, d alpha2."""
    total = QuadResult(0j, 0.0, 0, True)
    for br in branches:
        total = total + integrate_real_line(
            lambda t, br=br: f(gamma2_point(t, br)) * g(gamma2_point(t, br)), cfg
        )
    return total


def coeff_plus_signed(lam: float, rho: float, sigma: float, sign: int = +1) -> complex:
    """|Gamma(sigma+1+i rho)| e^{pi rho/2} F_sigma(rho, lam) / (pi lam^{sigma+1}).

    Any real lam != 0; at lam < 0 the power is principal and F comes from
    the Whittaker M form with the given sign choice.
    """
    if not sigma > -1:
        raise DomainError("sigma must exceed -1")
    if lam == 0:
        raise DomainError("lam must be non-zero")
    mod = math.exp(ln_gamma(complex(sigma + 1, rho)).real + math.pi * rho / 2)
    if lam > 0:
        value = coulomb_f(CoulombParams(sigma, rho, lam))
    else:
        value = coulomb_f_signed(sigma, rho, lam, sign)
    return mod * value / (math.pi * principal_pow(lam, sigma + 1))


def coeff_plus(lam: float, rho: float, sigma: float) -> complex:
    """Coefficient of the + hyperbolic function in the parabolic expansion."""
    if not lam > 0:
        raise DomainError("lam must be positive")
    return coeff_plus_signed(lam, rho, sigma)


def coeff_minus_quarter(lam: float, rho: float) -> complex:
    """Coefficient of the - hyperbolic function at sigma = -1/4.

    lam^{-3/4} e^{-pi rho/2} |Gamma(3/4+i rho)| / pi
    * Re(e^{i(c_{-1/4}(rho) - c_{-3/4}(rho))} H+_{-3/4}(rho, lam)).
    """
    if not lam > 0:
        raise DomainError("lam must be positive")
    mod = math.exp(ln_gamma(complex(0.75, rho)).real - math.pi * rho / 2)
    phase = cmath.exp(1j * (phase_c(-0.25, rho) - phase_c(-0.75, rho)))
    h = coulomb_h(CoulombParams(-0.75, rho, lam), +1)
    return complex(lam**-0.75 * mod / math.pi * (phase * h).real)


def coeff_minus_quarter_fg_form(lam: float, rho: float) -> complex:
    """2 (A G_{-3/4} - B F_{-3/4}) / (sqrt(lam) sqrt(cosh 2 pi rho)).

    A + iB = i^{1/4} e^{i c_{-1/4}(rho)}. This combination does not equal
    the quadrature of the pairing; it is kept so the discrepancy can be
    reported next to :func:`coeff_minus_quarter`.
    """
    if not lam > 0:
        raise DomainError("lam must be positive")
    w = principal_pow(1j, 0.25) * cmath.exp(1j * phase_c(-0.25, rho))
    h = coulomb_h(CoulombParams(-0.75, rho, lam), +1)
    return complex(
        2 * (w.real * h.real - w.imag * h.imag) / (math.sqrt(lam) * math.sqrt(math.cosh(2 * math.pi * rho)))
    )


def coeff_symmetry(rho: float, branch: int, lam: float, sigma: float, sign: int = -1) -> complex:
    """Coefficient of f_lam in the expansion of the dual + hyperbolic function.

    Equals the parabolic-to-hyperbolic coefficient at (-lam, -rho) and degree
    -sigma-1. Only the + branch has a closed form for general sigma. ``sign``
    selects the Whittaker form used for F at the negative argument.
    """
    if branch != 1:
        raise DomainError("only the + branch has a closed form")
    return coeff_plus_signed(-lam, -rho, -sigma - 1, sign)


def poisson_parabolic_at(lam: float, sigma: float, y: Sequence[float]) -> complex:
    """Pairing of the dual parabolic function with (x . y)^sigma, y inside the cone.

    ((y1+y2)/2)^sigma e^{i a lam} 2 sqrt(pi)/Gamma(-sigma) (|lam|/2s)^{-sigma-1/2}
    K_{sigma+1/2}(s |lam|), a = y3/(y1+y2), s = sqrt(y.y)/(y1+y2).
    Homogeneous of degree sigma in y, so it may be differentiated off the
    hyperboloid.
    """
    if not -1 < sigma < 0:
        raise DomainError("sigma must lie in (-1, 0)")
    if lam == 0:
        raise DomainError("lam must be non-zero")
    y1, y2, y3 = y
    norm2 = y1 * y1 - y2 * y2 - y3 * y3
    plus = y1 + y2
    if not (norm2 > 0 and plus > 0):
        raise DomainError("y must lie inside the future cone")
    s = math.sqrt(norm2) / plus
    x = abs(lam)
    return (
        (plus / 2) ** sigma
        * cmath.exp(1j * lam * y3 / plus)
        * 2
        * math.sqrt(math.pi)
        / gamma(-sigma)
        * (x / (2 * s)) ** (-sigma - 0.5)
        * bessel(BesselKind.K, sigma + 0.5, s * x)
    )


def poisson_parabolic(lam: float, sigma: float, alpha3: float, beta3: float) -> complex:
    """Poisson transform of the dual parabolic function at a hyperboloid point.

    With D = cosh a + sinh a cos b this is
    2 sqrt(2 pi / D) |lam|^{-sigma-1/2} / Gamma(-sigma)
    * exp(i lam sinh a sin b / D) K_{sigma+1/2}(|lam| / D).
    """
    if not -math.pi < beta3 < math.pi:
        raise DomainError("beta3 must lie in (-pi, pi)")
    if not -1 < sigma < 0:
        raise DomainError("sigma must lie in (-1, 0)")
    if lam == 0:
        raise DomainError("lam must be non-zero")
    den = math.cosh(alpha3) + math.sinh(alpha3) * math.cos(beta3)
    x = abs(lam)
    return (
        2
        * math.sqrt(2 * math.pi / den)
        * x ** (-sigma - 0.5)
        / gamma(-sigma)
        * cmath.exp(1j * lam * math.sinh(alpha3) * math.sin(beta3) / den)
        * bessel(BesselKind.K, sigma + 0.5, x / den)
    )


def hyperbolic_kernel_pairing(rho: float, branch: int, sigma: float, xi: XiVector) -> complex:
    """Pairing of the dual hyperbolic function on one branch with the xi kernel.

    The integral over the chosen hyperbola branch of
    e^{i rho alpha} (xi1 cosh alpha -+ xi2 - xi3 sinh alpha)^sigma.
    In T3 it is a Ferrers function of the first kind; in T4 (branch + with
    xi2 < 0, where the kernel has no zeros) a Legendre Q off the cut.
    """
    if not -1 < sigma < 0:
        raise DomainError("sigma must lie in (-1, 0)")
    if branch not in (1, -1):
        raise ValueError("branch must be +1 or -1")
    x1, x2, x3 = xi.xi1, xi.xi2, xi.xi3
    if xi.regime is Regime.T3:
        q = math.sqrt(x1 * x1 - x3 * x3)
        ratio = x2 / q
        return (
            2.0 ** (-2 * sigma - 0.5)
            * principal_pow(x1 - x3, complex(sigma, -rho) / 2)
            * principal_pow(x1 + x3, complex(sigma, rho) / 2)
            * beta(complex(-sigma, rho), complex(-sigma, -rho))
            * (1 - ratio * ratio) ** ((2 * sigma + 1) / 4)
            * gamma(0.5 - sigma)
            * ferrers_p(sigma + 0.5, complex(-0.5, rho), -branch * ratio)
        )
    if branch != 1 or x2 >= 0:
        raise DomainError("in T4 only branch + with xi2 < 0 has a closed form")
    d = x2 * x2 + x3 * x3 - x1 * x1
    return (
        2
        * math.exp(math.pi * rho)
        * principal_pow((x1 + x3) / (x1 - x3), 0.5j * rho)
        * d ** (sigma / 2)
        * gamma(complex(-sigma, -rho))
        / gamma(-sigma)
        * legendre_q_offcut(1j * rho, -sigma - 1, -x2 / math.sqrt(d))
    )


def coulomb_k_transform(sigma: float, rho: float, xi: XiVector) -> complex:
    """Closed form of a K-Bessel transform of Coulomb functions (T3 only).

    With a = xi.shift, s = xi.gap and d = -sigma-1 this is the value of
    int_0^inf lam^{-1/2} K_{sigma+1/2}(s lam)
        [e^{i a lam} F_d(-rho, -lam) + e^{i pi sigma} e^{-i a lam} F_d(-rho, lam)] d lam
    divided by e^{i pi sigma}, where F_d(-rho, -lam) is continued from the
    upper sign of the Whittaker M form.
    """
    if not -1 < sigma < 0:
        raise DomainError("sigma must lie in (-1, 0)")
    if xi.regime is not Regime.T3:
        raise DomainError("the K transform needs a T3 vector")
    x1, x2, x3 = xi.xi1, xi.xi2, xi.xi3
    q = math.sqrt(x1 * x1 - x3 * x3)
    plus = x1 + x2
    return (
        math.pi
        / 2
        * gamma(-2 * sigma)
        * math.exp(math.pi * rho / 2)
        * beta(complex(-sigma, rho), complex(-sigma, -rho))
        / abs(gamma(complex(-sigma, -rho)))
        * principal_pow(x1 - x3, complex(sigma, -rho) / 2)
        * principal_pow(x1 + x3, complex(sigma, rho) / 2)
        * plus**-sigma
        * (plus / q) ** (sigma + 0.5)
        * ferrers_p(sigma + 0.5, complex(-0.5, rho), -x2 / q)
    )


Matrix = tuple[tuple[float, float, float], ...]


def h1_matrix(theta: float) -> Matrix:
    """Element of the subgroup moving the parabola along itself."""
    t2 = theta * theta
    return (
        (1 + t2 / 2, t2 / 2, theta),
        (-t2 / 2, 1 - t2 / 2, -theta),
        (theta, theta, 1.0),
    )


def h2_matrix(theta: float) -> Matrix:
    """Boost in the (x1, x3) plane."""
    ch, sh = math.cosh(theta), math.sinh(theta)
    return ((ch, 0.0, sh), (0.0, 1.0, 0.0), (sh, 0.0, ch))


def act(m: Matrix, x: ConePoint) -> ConePoint:
    """The cone point m x."""
    v = (x.x1, x.x2, x.x3)
    return ConePoint(*(sum(m[i][j] * v[j] for j in range(3)) for i in range(3)))
