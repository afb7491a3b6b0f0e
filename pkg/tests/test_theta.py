"""Numeric and exact checks for theta functions and the eta function."""

import math
from fractions import Fraction as Q

import pytest
from scipy.special import gamma

from ajack.qseries import NomeSeries
from ajack.theta import (ThetaKind, ell_E, ell_G, eta, eta_series,
                         sqrt_tau_over_i, theta1_dv0, theta_jacobi,
                         theta_jacobi_series, theta_level,
                         theta_level_series)

TAU = 0.11 + 1.07j
V = 0.23 - 0.05j


def _num(series: NomeSeries, v: complex, tau: complex) -> complex:
    # series store x = e^{2 pi i v}; x_mult folds the argument scaling
    return series.eval_numeric(v, 0.0, tau)


@pytest.mark.parametrize("kind", list(ThetaKind))
def test_jacobi_series_matches_direct_sum(kind):
    s = theta_jacobi_series(kind, order=30)  # evaluates at doubled argument
    lhs = _num(s, V, TAU)
    rhs = theta_jacobi(kind, 2 * V, TAU)
    if kind is ThetaKind.THETA1:
        rhs = -1j * rhs  # the series form carries the odd sum without its i
    assert abs(lhs - rhs) < 1e-12


def test_theta1_is_odd_and_vanishes_at_zero():
    assert abs(theta_jacobi(ThetaKind.THETA1, 0.0, TAU)) < 1e-14
    a = theta_jacobi(ThetaKind.THETA1, V, TAU)
    b = theta_jacobi(ThetaKind.THETA1, -V, TAU)
    assert abs(a + b) < 1e-13


def test_theta1_derivative_product_identity():
    want = (theta_jacobi(ThetaKind.THETA0, 0, TAU)
            * theta_jacobi(ThetaKind.THETA2, 0, TAU)
            * theta_jacobi(ThetaKind.THETA3, 0, TAU)) * math.pi
    assert abs(theta1_dv0(TAU) - want) < 1e-12


def test_eta_series_matches_numeric_and_special_value():
    s = eta_series(40)
    assert abs(_num(s, 0, TAU) - eta(TAU)) < 1e-13
    assert abs(eta(1j) - gamma(0.25) / (2 * math.pi ** 0.75)) < 1e-13


def test_eta_scale_argument():
    s2 = eta_series(40, Q(2))
    assert abs(_num(s2, 0, TAU) - eta(2 * TAU)) < 1e-13
    sh = eta_series(40, Q(1, 2))
    assert abs(_num(sh, 0, TAU) - eta(TAU / 2)) < 1e-13


@pytest.mark.parametrize("m,kappa", [(0, 2), (1, 2), (1, 3), (2, 5), (-1, 3)])
def test_level_theta_series_matches_direct_sum(m, kappa):
    s = theta_level_series(m, kappa, order=25)  # doubled argument
    lhs = _num(s, V, TAU)
    rhs = theta_level(m, kappa, 2 * V, TAU)
    assert abs(lhs - rhs) < 1e-11


def test_level_theta_periodicity_in_label():
    # the label only matters mod 2*kappa
    a = theta_level(1, 3, V, TAU)
    b = theta_level(7, 3, V, TAU)
    assert abs(a - b) < 1e-13


def test_ell_e_and_g_basic_values():
    # E(v) ~ 2 pi i v for small v
    eps = 1e-5
    assert abs(ell_E(eps, TAU) / (2j * math.pi * eps) - 1) < 1e-3
    # G has a simple pole with unit residue at v = 0
    assert abs(eps * ell_G(eps, 0.21, TAU) - 1) < 1e-3


def test_sqrt_tau_over_i_principal_branch():
    w = sqrt_tau_over_i(TAU)
    assert abs(w * w - TAU / 1j) < 1e-14
    assert w.real > 0
