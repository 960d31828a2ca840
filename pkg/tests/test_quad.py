import cmath
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import close
from lorentzcoulomb.cxcore import beta, gamma, principal_pow
from lorentzcoulomb.hyp import hyp1f1
from lorentzcoulomb.quad import (
    QuadConfig,
    integrate_finite,
    integrate_finite_split,
    integrate_real_line,
    integrate_semi_infinite,
)
from lorentzcoulomb.specfun import legendre_q_offcut, parabolic_d


def test_finite_constant():
    close(integrate_finite(lambda x: 1.0, 0, 1).value, 1, 1e-12)


def test_finite_endpoint_singularity():
    res = integrate_finite(lambda x: x**-0.5, 0, 1)
    assert res.converged
    close(res.value, 2, 1e-12)


def test_finite_split_hands_over_both_distances():
    # (w^2 - t^2)^{-1/2} from the exact distances to each end
    res = integrate_finite_split(lambda left, right: (left * right) ** -0.5, -1.0, 1.0)
    close(res.value, math.pi, 1e-12)


def test_finite_beta_type_with_exponential():
    sigma, rho, lam = -0.5, 1.0, 2.0
    res = integrate_finite_split(
        lambda t, rest: principal_pow(t, complex(sigma, -rho))
        * principal_pow(rest, complex(sigma, rho))
        * cmath.exp(1j * lam * t),
        0,
        2,
    )
    a = complex(sigma + 1, -rho)
    want = 2 ** (2 * sigma + 1) * beta(a, a.conjugate()) * hyp1f1(a, 2 * sigma + 2, 2j * lam)
    close(res.value, want, 1e-9)


def test_semi_infinite_exponential():
    close(integrate_semi_infinite(lambda x: math.exp(-x), 0).value, 1, 1e-12)


def test_semi_infinite_algebraic_tail():
    sigma = -0.75
    res = integrate_semi_infinite(lambda t: (t * (t + 2)) ** sigma, 0)
    want = 2 ** (2 * sigma + 1) * beta(sigma + 1, -2 * sigma - 1)
    close(res.value, want, 1e-8)


def test_semi_infinite_rotated_laplace():
    # x^{nu-1} (x+beta)^{1/2-nu} e^{-mu x}, mu = -1.5 i, taken along x = i u
    nu, shift, mu = complex(0.75, 0.5), 2.0, -1.5j
    ray = 1j
    res = integrate_semi_infinite(
        lambda u: principal_pow(ray * u, nu - 1) * principal_pow(ray * u + shift, 0.5 - nu) * cmath.exp(-mu * ray * u),
        0,
    )
    lhs = ray * res.value
    want = (
        2 ** (nu - 0.5)
        / cmath.sqrt(mu)
        * gamma(nu)
        * cmath.exp(shift * mu / 2)
        * parabolic_d(1 - 2 * nu, cmath.sqrt(2 * shift * mu))
    )
    close(lhs, want, 1e-8)


def test_real_line_gaussian():
    close(integrate_real_line(lambda x: math.exp(-x * x)).value, math.sqrt(math.pi), 1e-12)


def test_real_line_cosh_power():
    a, sigma, rho = -1.5, -0.5, 0.5
    res = integrate_real_line(lambda u: cmath.exp(1j * rho * u) * (math.cosh(u) - a) ** sigma)
    # the cosine transform closed form with a -> -a, nu = -sigma
    b, nu, c = rho, -sigma, 1.0
    half = (
        math.exp(b * math.pi / c)
        * gamma(complex(nu, -b / c))
        / (c * (a * a - 1) ** (nu / 2) * gamma(nu))
        * legendre_q_offcut(1j * b / c, nu - 1, -a / math.sqrt(a * a - 1))
    )
    close(res.value, 2 * half.real, 1e-8)


def test_divergent_tail_is_flagged():
    assert not integrate_semi_infinite(lambda x: 1 / (1 + x), 0).converged


def test_config_validation():
    with pytest.raises(ValueError):
        QuadConfig(rel_tol=1e-15)
    with pytest.raises(ValueError):
        QuadConfig(max_depth=61)
    with pytest.raises(ValueError):
        QuadConfig(oscillation_period_hint=-1.0)


@pytest.mark.parametrize(
    "run, want",
    [
        (lambda: integrate_finite(lambda x: 1.0, 0, 1), 1.0),
        (lambda: integrate_finite(lambda x: x**-0.5, 0, 1), 2.0),
        (lambda: integrate_semi_infinite(lambda x: math.exp(-x), 0), 1.0),
        (lambda: integrate_real_line(lambda x: math.exp(-x * x)), math.sqrt(math.pi)),
        (lambda: integrate_semi_infinite(lambda t: (t * (t + 2)) ** -0.75, 0), 2**-0.5 * beta(0.25, 0.5).real),
    ],
    ids=["constant", "inverse-sqrt", "exponential", "gaussian", "algebraic-tail"],
)
def test_error_estimate_is_honest(run, want):
    res = run()
    assert abs(res.value - want) <= 3 * res.error_estimate + 4e-16 * abs(want)


def test_oscillatory_and_plain_tails_agree():
    f = lambda x: math.exp(-x) * math.sin(10 * x)  # noqa: E731
    hinted = integrate_semi_infinite(f, 0, QuadConfig(oscillation_period_hint=2 * math.pi / 10))
    plain = integrate_semi_infinite(f, 0)
    close(hinted.value, 10 / 101, 1e-12)
    close(hinted.value, plain.value, 1e-7)


@settings(max_examples=40, deadline=None)
@given(st.floats(0.2, 3), st.floats(-4, 4), st.floats(-3, 3), st.floats(-3, 3))
def test_linearity(width, freq, alpha, beta_):
    f = lambda x: math.exp(-width * x * x) * math.cos(freq * x)  # noqa: E731
    g = lambda x: 1 / (1 + x * x) ** 2  # noqa: E731
    both = integrate_real_line(lambda x: alpha * f(x) + beta_ * g(x))
    rf, rg = integrate_real_line(f), integrate_real_line(g)
    budget = both.error_estimate + abs(alpha) * rf.error_estimate + abs(beta_) * rg.error_estimate
    assert abs(both.value - (alpha * rf.value + beta_ * rg.value)) <= 3 * budget + 1e-14
