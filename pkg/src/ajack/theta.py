"""Jacobi and level-kappa theta functions, Dedekind eta, elliptic integrand pieces.

Every function comes in two modes: an exact q-series (:class:`NomeSeries`)
and a double-precision numeric evaluation at complex arguments.  Conventions:

* p = e^{2 pi i tau}, x = e^{2 pi i z};
* theta_level implements  theta_{a,kappa}(x|tau) = sum_{l in Z + a/2kappa}
  p^{kappa l^2} e^{2 pi i x kappa l};
* the series mode of the four Jacobi thetas takes the argument v = x_mult * z
  and a tau multiplier, so theta1(2z|2tau)-style objects are first-class;
* theta1 carries an overall factor i that is not rational: its series mode
  returns the series of  -i * theta1,  which has rational coefficients.
  Numeric mode returns theta1 itself.
"""

from __future__ import annotations

import cmath
import math
from enum import Enum
from fractions import Fraction

from .errors import DomainError, GridError
from .qseries import TWO_PI_I, LaurentX, NomeSeries, Q

NUMERIC_TAIL = 1e-16


class ThetaKind(str, Enum):
    THETA0 = "theta0"
    THETA1 = "theta1"
    THETA2 = "theta2"
    THETA3 = "theta3"


def _check_tau(tau: complex):
    if tau.imag <= 0:
        raise DomainError(f"Im tau must be positive, got {tau}")


# ----------------------------------------------------------------------
# Jacobi theta functions
# ----------------------------------------------------------------------

def theta_jacobi_series(kind: ThetaKind, order: int, x_mult: int = 2,
                        tau_scale=Q(1)) -> NomeSeries:
    """Series of theta_kind(x_mult * z | tau_scale * tau) truncated at p^order.

    ``order`` bounds the absolute p-exponent.  For THETA1 the returned series
    is -i * theta1 (the rational part); all other kinds are returned as-is.
    """
    kind = ThetaKind(kind)
    s = Q(tau_scale)
    half_integer = kind in (ThetaKind.THETA1, ThetaKind.THETA2)
    if half_integer and x_mult % 2:
        raise GridError("theta1/theta2 series need an even x multiplier")
    # p-exponents are s*(n-1/2)^2/2 (grid s/8) or s*n^2/2 (grid s/2)
    D = (s / 8).denominator if half_integer else (s / 2).denominator
    trunc = order * D
    coeffs: dict[int, LaurentX] = {}

    def put(e: Q, j: int, c: int):
        step = e * D
        if step.denominator != 1 or step > trunc:
            return
        n = int(step)
        coeffs.setdefault(n, LaurentX())
        prev = coeffs[n].c.get(j, Q(0)) + c
        if prev:
            coeffs[n].c[j] = prev
        else:
            coeffs[n].c.pop(j, None)

    n = 0
    while True:
        done = True
        for m in (n, -n) if n else (0,):
            if half_integer:
                e = s * Q((2 * m - 1) ** 2, 8)
                j = x_mult * (2 * m - 1) // 2
                if e <= order:
                    done = False
                    c = (-1) ** (m & 1) if kind is ThetaKind.THETA1 else 1
                    put(e, j, c)
            else:
                e = s * Q(m * m, 2)
                j = x_mult * m
                if e <= order:
                    done = False
                    c = (-1) ** (m & 1) if kind is ThetaKind.THETA0 else 1
                    put(e, j, c)
        if done and n > 0:
            break
        n += 1
    return NomeSeries(0, D, Q(0), trunc, coeffs)


def theta_jacobi(kind: ThetaKind, v: complex, tau: complex) -> complex:
    """Numeric theta_kind(v|tau); lattice sum with tail below 1e-15."""
    kind = ThetaKind(kind)
    _check_tau(tau)
    half_integer = kind in (ThetaKind.THETA1, ThetaKind.THETA2)
    total = 0j
    n = 1 if half_integer else 0
    while True:
        if half_integer:
            batch = (n, 1 - n)
        else:
            batch = (n, -n) if n else (0,)
        term = 0j
        for m in batch:
            if half_integer:
                w = cmath.exp(1j * math.pi * tau * (m - 0.5) ** 2
                              + 1j * math.pi * v * (2 * m - 1))
                if kind is ThetaKind.THETA1:
                    w *= 1j * (-1) ** m
            else:
                w = cmath.exp(1j * math.pi * tau * m * m
                              + 1j * math.pi * v * 2 * m)
                if kind is ThetaKind.THETA0:
                    w *= (-1) ** m
            term += w
        total += term
        if n > 2 and abs(term) < NUMERIC_TAIL * max(1.0, abs(total)):
            break
        n += 1
        if n > 4000:
            raise DomainError("theta sum failed to converge")
    return total


def theta1_dv0(tau: complex) -> complex:
    """theta1'(0|tau) by the term-wise differentiated lattice sum."""
    _check_tau(tau)
    total = 0j
    n = 1
    while True:
        # pair m = n and m = 1 - n gives 2 * i * (-1)^n * i pi (2n-1) * q^{...}
        m = n
        w = 1j * (-1) ** m * cmath.exp(1j * math.pi * tau * (m - 0.5) ** 2) \
            * (1j * math.pi * (2 * m - 1))
        m2 = 1 - n
        w2 = 1j * (-1) ** m2 * cmath.exp(1j * math.pi * tau * (m2 - 0.5) ** 2) \
            * (1j * math.pi * (2 * m2 - 1))
        total += w + w2
        if n > 2 and abs(w + w2) < NUMERIC_TAIL * max(1.0, abs(total)):
            return total
        n += 1
        if n > 4000:
            raise DomainError("theta1' sum failed to converge")


# ----------------------------------------------------------------------
# Dedekind eta
# ----------------------------------------------------------------------

def eta_series(order: int, scale=Q(1)) -> NomeSeries:
    """Series of eta(scale * tau) truncated at absolute p-order ``order``.

    eta(s tau) = p^{s/24} prod_{j>=1} (1 - p^{s j}); lead s/24, grid chosen so
    both the lead and the increments sit on it (D = 48 for s = 1/2).
    """
    s = Q(scale)
    D = math.lcm((s / 24).denominator, s.denominator)
    trunc = order * D
    # Euler's pentagonal number theorem: prod (1-q^j) = sum_m (-1)^m q^{m(3m-1)/2}
    coeffs: dict[int, LaurentX] = {}
    m = 0
    while True:
        added = False
        for mm in (m, -m) if m else (0,):
            e = s * Q(mm * (3 * mm - 1), 2)
            step = e * D
            if step <= trunc:
                added = True
                coeffs[int(step)] = LaurentX({0: (-1) ** (mm & 1)})
        if not added and m > 0:
            break
        m += 1
    return NomeSeries(0, D, s / 24, trunc, coeffs)


def eta(tau: complex) -> complex:
    """Numeric Dedekind eta via the pentagonal-number sum."""
    _check_tau(tau)
    q = cmath.exp(TWO_PI_I * tau)
    total = 0j
    m = 0
    while True:
        term = 0j
        for mm in (m, -m) if m else (0,):
            term += (-1) ** mm * q ** (mm * (3 * mm - 1) // 2)
        total += term
        if m > 2 and abs(term) < NUMERIC_TAIL * max(1.0, abs(total)):
            break
        m += 1
        if m > 4000:
            raise DomainError("eta sum failed to converge")
    return cmath.exp(TWO_PI_I * tau / 24) * total


# ----------------------------------------------------------------------
# Level-kappa theta functions
# ----------------------------------------------------------------------

def theta_level_series(m: int, kappa: int, order: int, x_mult: int = 2) -> NomeSeries:
    """Series of theta_{m,kappa}(x_mult * z | tau) truncated at p^order.

    Lattice sum over l in Z + m/2kappa; x-exponents are x_mult * kappa * l,
    which must be integers (x_mult even, or m even).  The level tag is kappa.
    """
    if (x_mult * m) % 2:
        raise GridError(f"x-exponents not integral for m={m}, x_mult={x_mult}")
    D = 4 * kappa
    trunc = order * D
    coeffs: dict[int, LaurentX] = {}
    n = 0
    while True:
        added = False
        for nn in (n, -n - 1):
            l = Q(m, 2 * kappa) + nn
            e = kappa * l * l
            step = e * D
            if step.denominator != 1:
                raise GridError("exponent off grid in theta_level_series")
            if step <= trunc:
                added = True
                j = int(x_mult * kappa * l)
                ns = int(step)
                cur = coeffs.setdefault(ns, LaurentX())
                cur.c[j] = cur.c.get(j, Q(0)) + 1
        if not added:
            break
        n += 1
    return NomeSeries(kappa, D, Q(0), trunc, coeffs)


def theta_level(m: int, kappa: int, x: complex, tau: complex) -> complex:
    """Numeric theta_{m,kappa}(x|tau)."""
    _check_tau(tau)
    total = 0j
    n = 0
    while True:
        term = 0j
        for nn in (n, -n - 1):
            l = m / (2 * kappa) + nn
            term += cmath.exp(TWO_PI_I * (tau * kappa * l * l + x * kappa * l))
        total += term
        if n > 2 and abs(term) < NUMERIC_TAIL * max(1.0, abs(total)):
            return total
        n += 1
        if n > 4000:
            raise DomainError("theta_level sum failed to converge")


# ----------------------------------------------------------------------
# Elliptic integrand ingredients
# ----------------------------------------------------------------------

def ell_E(v: complex, tau: complex) -> complex:
    """E(v) = 2 pi i theta1(v|tau) / theta1'(0|tau)."""
    return TWO_PI_I * theta_jacobi(ThetaKind.THETA1, v, tau) / theta1_dv0(tau)


def ell_G(v: complex, z: complex, tau: complex) -> complex:
    """G(v; z|tau) = theta1'(0) theta1(v+2z) / (theta1(2z) theta1(v))."""
    d1 = theta_jacobi(ThetaKind.THETA1, 2 * z, tau)
    d2 = theta_jacobi(ThetaKind.THETA1, v, tau)
    if abs(d1) < 1e-12 or abs(d2) < 1e-12:
        raise DomainError("pole of G: v or 2z at a lattice point")
    return theta1_dv0(tau) * theta_jacobi(ThetaKind.THETA1, v + 2 * z, tau) / (d1 * d2)


def sqrt_tau_over_i(tau: complex) -> complex:
    """sqrt(tau/i) with the branch that equals 1 at tau = i.

    For Im tau > 0, tau/i has positive real part, so the principal square
    root is the continuous choice with value 1 at tau = i.
    """
    _check_tau(tau)
    return cmath.sqrt(tau / 1j)
