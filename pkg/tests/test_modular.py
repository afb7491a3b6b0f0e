"""S-matrix routes, projective relations, special-value factors."""

import math

import numpy as np
import pytest

from ajack.modular import (build_SJ, build_S_macdonald, build_S_product,
                           fixture_matrix, fixture_relations, g_factor,
                           g_ratio, selberg_B, sinq, sj_relations, sj_weight,
                           t_phase, verify_modular_numeric)
from ajack.qseries import Q


@pytest.mark.parametrize("K", range(0, 5))
@pytest.mark.parametrize("k", range(1, 6))
def test_product_and_expansion_routes_agree(K, k):
    a = build_S_product(K, k)
    b = build_S_macdonald(K, k)
    assert a.rows == b.rows == list(range(k, K + k + 1))
    assert np.max(np.abs(a.entries - b.entries)) < 1e-12


@pytest.mark.parametrize("K", range(0, 5))
@pytest.mark.parametrize("k", range(1, 6))
def test_fixture_route_agrees(K, k):
    a = build_S_product(K, k)
    f = fixture_matrix(K, k)
    assert np.max(np.abs(a.entries - f.entries)) < 1e-12


@pytest.mark.parametrize("k", range(1, 6))
def test_alternate_fixture_form(k):
    assert np.max(np.abs(fixture_matrix(3, k).entries
                         - fixture_matrix(3, k, "alt").entries)) < 1e-12


@pytest.mark.parametrize("K,k", [(2, 2), (3, 2), (4, 2), (4, 3)])
def test_fixture_entry_relations(K, k):
    rel = fixture_relations(K, k)
    assert all(v < 1e-12 for v in rel.values()), rel


def test_coupling_one_recovers_the_character_matrix():
    # at coupling 1 the reduced matrix is the bare sine kernel; the
    # normalization sqrt(2/kappa) enters only through the dressed prefactor
    K = 3
    kappa = K + 2
    m = build_S_product(K, 1).entries
    want = np.array([[math.sin(math.pi * a * b / kappa)
                      for b in range(1, K + 2)] for a in range(1, K + 2)])
    assert np.max(np.abs(m - want)) < 1e-12


def test_selberg_closed_form_against_quadrature():
    for n in (1, 2):
        c = selberg_B(n, 1.2, 0.8, 0.35, "closed")
        q = selberg_B(n, 1.2, 0.8, 0.35, "quadrature")
        assert abs(c - q) < 1e-7


def test_selberg_n0_is_one():
    assert selberg_B(0, 1.0, 1.0, 0.3, "closed") == 1.0


def test_g_ratio_telescopes():
    K, k = 2, 3
    lo, hi = k, K + k
    direct = g_ratio(K, k, lo, hi - lo)
    stepped = 1.0
    for m in range(lo, hi):
        stepped *= g_ratio(K, k, m, 1)
    assert abs(direct - stepped) < 1e-12 * abs(direct)


def test_g_factor_ratio_mode_is_normalized():
    for K, k in [(1, 2), (2, 2), (3, 3)]:
        assert abs(g_factor(K, k, k, "ratio") - 1) < 1e-13
        base = g_factor(K, k, k, "absolute")
        for m in range(k, K + k + 1):
            # absolute and ratio modes differ by one overall constant
            want = g_factor(K, k, m, "absolute") / base
            assert abs(want - complex(g_factor(K, k, m, "ratio"))) < 1e-9 * abs(want)


def test_sj_weight_and_phase():
    assert sj_weight(2, 3) == -Q(2 * 2, 2 * 8)
    ph = t_phase(1, 1, 1)
    assert abs(ph - complex(math.cos(2 * math.pi * Q(-1, 24)),
                            math.sin(2 * math.pi * Q(-1, 24)))) < 1e-14


@pytest.mark.parametrize("K,k", [(1, 1), (1, 2), (2, 2), (3, 2)])
def test_sj_projective_relations(K, k):
    r = sj_relations(K, k)
    assert r["s_squared_residual"] < 1e-10
    assert r["braid_residual"] < 1e-10
    assert r["s_squared_unimodular"] < 1e-10
    assert r["braid_unimodular"] < 1e-10


@pytest.mark.parametrize("s_form", ["product", "macdonald", "fixture"])
def test_sj_independent_of_the_s_route(s_form):
    base, w0 = build_SJ(2, 2, "product")
    other, w1 = build_SJ(2, 2, s_form)
    assert w0 == w1
    assert np.max(np.abs(base.entries - other.entries)) < 1e-12


@pytest.mark.parametrize("K,k", [(1, 1), (1, 2), (2, 2)])
def test_numeric_transformation_law(K, k):
    rep = verify_modular_numeric(K, k, 0.17, 1.3j, order=18, tol=1e-8)
    assert rep["pass"], rep
    c = complex(rep["fitted_constant"])
    assert abs(c - 1) < 1e-8


def test_sinq_values():
    assert abs(sinq(1, 1, 1) - math.sin(math.pi / 3)) < 1e-15
    assert abs(sinq(2, 3, 4) - math.sin(4 * math.pi / 8)) < 1e-15
