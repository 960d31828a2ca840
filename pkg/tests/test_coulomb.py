import cmath
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import close
from lorentzcoulomb.cxcore import DomainError, gamma
from lorentzcoulomb.coulomb import (
    CoulombParams,
    coulomb_f,
    coulomb_f_reflect,
    coulomb_f_signed,
    coulomb_g,
    coulomb_h,
    gamow_c,
    ode_residual,
    phase_c,
)


def test_gamow_golden():
    close(gamow_c(0, 0), 1, 1e-14)
    close(gamow_c(1, 0), 1 / 3, 1e-14)


def test_gamow_oracle():
    # mpmath coulombc(-0.5, 1)
    close(gamow_c(-0.5, 1), 0.07652325776531822, 1e-12)


def test_phase_golden():
    assert phase_c(0.25, 0) == 0


def test_phase_oracle():
    # mpmath arg(gamma(0.75+0.7j))
    close(phase_c(-0.25, 0.7), -0.5476894155779555, 1e-13)


def test_phase_strips_modulus():
    rho = 0.5
    g = gamma(complex(0.25, rho))
    close(abs(g), g * cmath.exp(-1j * phase_c(-0.75, rho)), 1e-13)


def test_f_sine():
    close(coulomb_f(CoulombParams(0, 0, 1.1)), math.sin(1.1), 1e-13)


def test_f_oracle():
    # mpmath coulombf(-0.75, 0.5, 1.5)
    close(coulomb_f(CoulombParams(-0.75, 0.5, 1.5)), 0.9215554247730704, 1e-12)


def test_f_is_imaginary_part_of_h():
    p = CoulombParams(0.25, 0.5, 2)
    close(coulomb_f(p), coulomb_h(p, +1).imag, 1e-9)


def test_h_exponential():
    lam = 0.8
    h = coulomb_h(CoulombParams(0, 0, lam), +1)
    close(h, cmath.exp(1j * lam), 1e-12)
    close(h.real, math.cos(lam), 1e-12)


def test_h_oracle():
    # mpmath coulombg + 1j coulombf at (-0.75, 0.5, 1.5)
    close(coulomb_h(CoulombParams(-0.75, 0.5, 1.5), +1), 0.7357311894759302 + 0.9215554247730704j, 1e-12)


def test_g_cosine():
    close(coulomb_g(CoulombParams(0, 0, 2.3)), math.cos(2.3), 1e-12)


def test_g_oracle():
    # mpmath coulombg(-0.75, 0.5, 1.5)
    close(coulomb_g(CoulombParams(-0.75, 0.5, 1.5)), 0.7357311894759302, 1e-12)


def test_modulus_of_h():
    p = CoulombParams(0.25, 0.5, 2)
    close(coulomb_f(p) ** 2 + coulomb_g(p) ** 2, abs(coulomb_h(p, +1)) ** 2, 1e-12)


def test_reflection_fixed_point():
    close(coulomb_f_reflect(-0.5, 0.8, 1.7), coulomb_f(CoulombParams(-0.5, 0.8, 1.7)), 1e-14)


def test_reflection_oracle():
    # mpmath coulombf(-0.75, 0.5, 1.5)
    close(coulomb_f_reflect(-0.25, 0.5, 1.5), 0.9215554247730704, 1e-10)


def _theta(sigma, rho):
    return (sigma + 0.5) * math.pi + phase_c(-sigma - 1, rho) - phase_c(sigma, rho)


def test_reflection_twice_is_identity():
    sigma, rho, lam = -0.3, 0.7, 2.0
    p = CoulombParams(sigma, rho, lam)
    f, g = coulomb_f(p), coulomb_g(p)
    t = _theta(sigma, rho)
    f1, g1 = math.cos(t) * f + math.sin(t) * g, -math.sin(t) * f + math.cos(t) * g
    close(f1, coulomb_f_reflect(sigma, rho, lam), 1e-14)
    back = _theta(-sigma - 1, rho)
    close(math.cos(back) * f1 + math.sin(back) * g1, f, 1e-8)


def test_reflection_needs_open_interval():
    with pytest.raises(DomainError):
        coulomb_f_reflect(0.25, 0.5, 1)


@pytest.mark.parametrize("lam", [0, -1.5])
def test_params_reject_non_positive_lambda(lam):
    with pytest.raises(DomainError):
        CoulombParams(0.2, 0.5, lam)


@pytest.mark.parametrize("sigma, rho", [(-0.5, 1), (0.25, 0.5), (-0.75, 0.5)])
@pytest.mark.parametrize("lam", [1, 2, 5])
@pytest.mark.parametrize("func", [coulomb_f, coulomb_g], ids=["F", "G"])
def test_coulomb_equation_residual(sigma, rho, lam, func):
    def y(x):
        return func(CoulombParams(sigma, rho, x))

    assert ode_residual(y, sigma, rho, lam) <= 1e-5 * max(1.0, abs(y(lam)))


grid = dict(
    sigma=st.floats(-0.95, 1.5), rho=st.floats(-2, 2), lam=st.floats(0.1, 12)
)


@settings(max_examples=80, deadline=None)
@given(**grid)
def test_sign_choice_is_immaterial(sigma, rho, lam):
    upper = coulomb_f_signed(sigma, rho, lam, +1)
    lower = coulomb_f_signed(sigma, rho, lam, -1)
    close(upper, lower, 1e-9)


@settings(max_examples=80, deadline=None)
@given(**grid)
def test_f_and_g_from_h(sigma, rho, lam):
    p = CoulombParams(sigma, rho, lam)
    outgoing, incoming = coulomb_h(p, +1), coulomb_h(p, -1)
    scale = abs(outgoing)
    assert abs(coulomb_f(p) - outgoing.imag) <= 1e-9 * scale
    assert abs(coulomb_f(p) + incoming.imag) <= 1e-9 * scale
    assert abs(coulomb_g(p) - outgoing.real) <= 1e-9 * scale
