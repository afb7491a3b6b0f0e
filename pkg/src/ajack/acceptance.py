"""Programmatic acceptance checks, shared by the CLI suite and the test suite.

Each check returns (criterion id, passed, detail string).  ``quick=True``
reduces series orders so the whole battery runs in seconds.
"""

from __future__ import annotations

import cmath
import math
import random

import numpy as np

from .affine import AffineWeight, character, dominance_leq, weyl_denominator, \
    weyl_denominator_shifted
from .jack import JackLabel, apply_l, apply_m, closed_form, heat_check, \
    jack_series
from .modular import build_SJ, build_S_macdonald, build_S_product, \
    fixture_matrix, fixture_relations, g_factor, g_ratio, selberg_B, sinq, \
    sj_relations, t_phase, verify_modular_numeric
from .affine import orbit_sum
from .qseries import Q
from .theta import ThetaKind, eta, sqrt_tau_over_i, theta1_dv0, \
    theta_jacobi, theta_jacobi_series, theta_level, ell_E, ell_G


def check_a1(quick: bool = False):
    """Level-1 closed forms match the eigen-recursion exactly."""
    order = 6 if quick else 12
    for k in (1, 2, 3, 4):
        for j0 in (0, 1):
            l = j0 + k
            r = jack_series(JackLabel(1, k, l), order)
            cf = closed_form(1, k, l, order)
            if not r.normalized.agrees_with(cf, through=Q(order - 2)):
                return "A1", False, f"k={k} l={l} series differ"
    return "A1", True, f"8 labels to order {order}, exact"


def check_a2(quick: bool = False):
    """Level-2 closed forms match the eigen-recursion exactly."""
    order = 6 if quick else 12
    for k in (1, 2, 3):
        for j0 in (0, 1, 2):
            l = j0 + k
            r = jack_series(JackLabel(2, k, l), order)
            cf = closed_form(2, k, l, order)
            if not r.normalized.agrees_with(cf, through=Q(order - 2)):
                return "A2", False, f"k={k} l={l} series differ"
    return "A2", True, f"9 labels to order {order}, exact"


def check_a3(quick: bool = False):
    """Product, Macdonald, and fixture S-matrices agree entrywise."""
    worst = 0.0
    for K in range(5):
        for k in range(1, 6):
            a = build_S_product(K, k).entries
            b = build_S_macdonald(K, k).entries
            f = fixture_matrix(K, k).entries
            worst = max(worst, float(np.max(np.abs(a - b))),
                        float(np.max(np.abs(a - f))))
    ok = worst < 1e-10
    return "A3", ok, f"max entry deviation {worst:.2e}"


def check_a4(quick: bool = False):
    """Level-4 fixture entry relations."""
    worst = 0.0
    for k in range(1, 6):
        rel = fixture_relations(4, k)
        worst = max(worst, rel["gc_bd"], rel["gc_ee"], rel["c_closed"])
    ok = worst < 1e-10
    return "A4", ok, f"max relation residual {worst:.2e}"


def check_a5(quick: bool = False):
    """Constant parts of S^J at levels 1 and 2 match the published displays."""
    worst = 0.0
    for k in range(1, 6):
        M, _ = build_SJ(1, k)
        ph = cmath.exp(0.5j * math.pi * (k - 1) / (2 * (1 + 2 * k)))
        ref = ph * np.array([[1, 1], [1, -1]]) / math.sqrt(2)
        worst = max(worst, float(np.max(np.abs(M.entries - ref))))
        M, _ = build_SJ(2, k)
        e = (k - 1) / (k + 1)
        r2 = math.sqrt(2)
        ph = cmath.exp(0.5j * math.pi * (k - 1) * 2 / (2 * (2 + 2 * k)))
        ref = ph * np.array([[1, r2 ** (1 + e), 1],
                             [r2 ** (1 - e), 0, -r2 ** (1 - e)],
                             [1, -r2 ** (1 + e), 1]]) / 2
        worst = max(worst, float(np.max(np.abs(M.entries - ref))))
    ok = worst < 1e-10
    return "A5", ok, f"max deviation from displays {worst:.2e}"


def check_a6(quick: bool = False):
    """Projective group relations with unimodular scalars."""
    worst = 0.0
    for K in range(5):
        for k in range(1, 5):
            r = sj_relations(K, k)
            worst = max(worst, r["s_squared_residual"], r["braid_residual"],
                        r["s_squared_unimodular"], r["braid_unimodular"])
    ok = worst < 1e-8
    return "A6", ok, f"max residual {worst:.2e}"


def check_a7(quick: bool = False):
    """Eigen residual, eigenvalue, triangularity, symmetry, delta shift."""
    order = 5 if quick else 10
    count = 0
    for K in range(0, 4):
        for k in range(1, 4):
            for j0 in range(0, K + 1):
                l = j0 + k
                lab = JackLabel(K, k, l)
                r = jack_series(lab, order)
                J = r.unnormalized
                if r.eigenvalue != Q(l * l - k * k, 2):
                    return "A7", False, f"{lab}: bad eigenvalue"
                res = apply_m(J, k) - J.scale(r.eigenvalue)
                if not res.is_zero():
                    return "A7", False, f"{lab}: nonzero eigen residual"
                lam = AffineWeight(j0, Q(0), K)
                for e, j, v in J.terms():
                    if v != J.coefficient(e, -j):
                        return "A7", False, f"{lab}: asymmetry at ({e},{j})"
                    if not dominance_leq(AffineWeight(j, e, K), lam):
                        return "A7", False, f"{lab}: weight ({j},{e}) not dominated"
                sh = jack_series(lab, order, delta_shift=3)
                if not sh.unnormalized.agrees_with(J.shifted(3)):
                    return "A7", False, f"{lab}: delta shift violated"
                count += 1
    return "A7", True, f"{count} labels at order {order}, exact"


def check_a8(quick: bool = False):
    """Conjugation of the two operator forms on orbit-sum probes."""
    order = 4 if quick else 8
    for K in (1, 2):
        for k in (1, 2, 3):
            for l in range(0, K + 1):
                f = orbit_sum(l, K, order)
                dk = weyl_denominator(k, order)
                lhs = apply_l(dk * f, k) - (dk * f).scale(Q(k * k, 2))
                rhs = dk * apply_m(f, k)
                if not lhs.agrees_with(rhs):
                    return "A8", False, f"K={K} k={k} l={l} conjugation fails"
    return "A8", True, f"18 probes at order {order}, exact"


def check_a9(quick: bool = False):
    """Heat-equation identity for the closed-form transition matrices."""
    order = 5 if quick else 10
    for K in (1, 2):
        for k in (2, 3):
            ok, msg = heat_check(K, k, order)
            if not ok:
                return "A9", False, f"K={K} k={k}: {msg}"
    return "A9", True, f"K in (1,2), k in (2,3) at order {order}, exact"


def check_a10(quick: bool = False):
    """Selberg closed form vs quadrature; g-factor consistency."""
    worst_q = 0.0
    for (a, b, g) in ((1.0, 1.0, 1.0), (1.0, 1.0, 0.5), (1.5, 2.0, 0.75)):
        for n in (1, 2):
            c = selberg_B(n, a, b, g)
            q = selberg_B(n, a, b, g, "quadrature")
            worst_q = max(worst_q, abs(c - q) / abs(c))
    worst_g = 0.0
    for (K, k) in ((1, 2), (2, 2), (3, 2), (1, 3), (2, 3), (3, 3)):
        kap = K + 2 * k
        for m in range(k, kap - k):
            r = g_ratio(K, k, m, 1)
            av = abs(g_factor(K, k, m, "absolute")
                     / g_factor(K, k, m + 1, "absolute"))
            worst_g = max(worst_g, abs(av - abs(r)) / abs(r))
    worst_l = 0.0
    for k in range(1, 6):
        v = (1 / g_ratio(2, k, k, 1)) * math.sqrt(2) ** (1 + (k - 1) / (k + 1)) \
            * sinq(2, k, k)
        worst_l = max(worst_l, abs(v - 1))
        kap = 2 + 2 * k
        for m in range(k, kap - k + 1):
            worst_l = max(worst_l, abs(g_factor(2, k, m).real
                                       - g_factor(2, k, kap - m).real))
    ok = worst_q < 1e-6 and worst_g < 1e-8 and worst_l < 1e-10
    return "A10", ok, (f"quad {worst_q:.2e}, ratio-vs-abs {worst_g:.2e}, "
                       f"symmetry {worst_l:.2e}")


def theta_law_residuals(samples: int = 20, seed: int = 7):
    """Residuals of the five S-laws and two T-laws at random points."""
    rng = random.Random(seed)
    out = {name: 0.0 for name in
           ("S_theta1", "S_theta1_prime", "S_E", "S_G", "S_level",
            "T_theta1", "T_level")}
    for _ in range(samples):
        tau = complex(rng.uniform(-0.4, 0.4), rng.uniform(0.9, 1.8))
        v = complex(rng.uniform(-0.3, 0.3), rng.uniform(-0.2, 0.2))
        z = complex(rng.uniform(-0.3, 0.3), rng.uniform(-0.2, 0.2))
        kappa = rng.choice((2, 3, 4, 5))
        m = rng.randrange(0, 2 * kappa)
        rt = sqrt_tau_over_i(tau)
        # theta1 S-law
        lhs = theta_jacobi(ThetaKind.THETA1, v / tau, -1 / tau)
        rhs = (1 / 1j) * rt * cmath.exp(1j * math.pi * v * v / tau) \
            * theta_jacobi(ThetaKind.THETA1, v, tau)
        out["S_theta1"] = max(out["S_theta1"], abs(lhs - rhs))
        # theta1' S-law
        lhs = theta1_dv0(-1 / tau)
        rhs = (tau / 1j) * rt * theta1_dv0(tau)
        out["S_theta1_prime"] = max(out["S_theta1_prime"],
                                    abs(lhs - rhs) / abs(rhs))
        # E S-law
        lhs = ell_E(-v / tau, -1 / tau)
        rhs = cmath.exp(1j * math.pi * v * v / tau) * ell_E(-v, tau) / tau
        out["S_E"] = max(out["S_E"], abs(lhs - rhs))
        # G S-law
        lhs = ell_G(v / tau, z / tau, -1 / tau)
        rhs = tau * cmath.exp(1j * math.pi * 4 * v * z / tau) \
            * ell_G(v, z, tau)
        out["S_G"] = max(out["S_G"], abs(lhs - rhs) / abs(rhs))
        # level theta S-law
        lhs = theta_level(m, kappa, v / tau, -1 / tau)
        rhs = rt * cmath.exp(1j * math.pi * kappa * v * v / (2 * tau)) \
            / math.sqrt(2 * kappa) \
            * sum(cmath.exp(-1j * math.pi * m * l / kappa)
                  * theta_level(l, kappa, v, tau) for l in range(2 * kappa))
        out["S_level"] = max(out["S_level"], abs(lhs - rhs))
        # T-laws
        lhs = theta_jacobi(ThetaKind.THETA1, v, tau + 1)
        rhs = cmath.exp(1j * math.pi / 4) * theta_jacobi(ThetaKind.THETA1, v, tau)
        out["T_theta1"] = max(out["T_theta1"], abs(lhs - rhs))
        lhs = theta_level(m, kappa, v, tau + 1)
        rhs = cmath.exp(1j * math.pi * m * m / (2 * kappa)) \
            * theta_level(m, kappa, v, tau)
        out["T_level"] = max(out["T_level"], abs(lhs - rhs))
    return out


def check_a11(quick: bool = False):
    """Theta transformation law suite plus the exact triple product."""
    res = theta_law_residuals(5 if quick else 20)
    worst = max(res.values())
    order = 8 if quick else 20
    ds = weyl_denominator_shifted(1, order)
    th = theta_jacobi_series(ThetaKind.THETA1, order, x_mult=2)
    exact = ds.agrees_with((-th).with_level(2), through=Q(order - 1))
    ok = worst < 1e-9 and exact
    return "A11", ok, f"max law residual {worst:.2e}, triple product exact={exact}"


def check_a12(quick: bool = False):
    """End-to-end numeric S-transformation of the normalized Jack series."""
    order = 12 if quick else 20
    worst = 0.0
    consts = []
    for K in (1, 2):
        for k in (2, 3):
            rep = verify_modular_numeric(K, k, 0.17, 1.3j, order=order)
            worst = max(worst, rep["relative_deviation"], rep["unimodularity"])
            consts.append(f"(K={K},k={k}): c={rep['fitted_constant']:.6f}")
    ok = worst < 1e-6
    return "A12", ok, f"max deviation {worst:.2e}; " + "; ".join(consts)


ALL_CHECKS = [check_a1, check_a2, check_a3, check_a4, check_a5, check_a6,
              check_a7, check_a8, check_a9, check_a10, check_a11, check_a12]


def run_acceptance(quick: bool = False, only=None):
    """Run the acceptance battery; returns a list of result dicts."""
    results = []
    for fn in ALL_CHECKS:
        cid, ok, detail = fn(quick)
        if only and cid not in only:
            continue
        results.append({"id": cid, "pass": bool(ok), "detail": detail})
    return results
