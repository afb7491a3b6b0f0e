"""Weight arithmetic, orbits, and character series for the rank-one case."""

from fractions import Fraction as Q

import pytest

from ajack.affine import (RHO, AffineWeight, character, character_lead,
                          dominance_leq, form, orbit_sum, orbit_weights,
                          weyl_denominator, weyl_denominator_shifted)
from ajack.theta import theta_jacobi_series, ThetaKind


def test_form_is_symmetric_and_matches_norm():
    a = AffineWeight(3, Q(1), 2)
    b = AffineWeight(1, Q(0), 1)
    assert form(a, b) == form(b, a) == Q(3, 2) - Q(1)
    assert a.norm() == form(a, a)
    assert RHO.norm() == Q(1, 2)


def test_dominance_partial_order():
    lam = AffineWeight(2, Q(0), 2)
    assert dominance_leq(lam, lam)
    assert dominance_leq(AffineWeight(0, Q(1), 2), lam)   # drop by alpha + delta
    assert dominance_leq(AffineWeight(0, Q(0), 2), lam)   # drop by alpha
    assert not dominance_leq(AffineWeight(4, Q(0), 2), lam)
    assert not dominance_leq(AffineWeight(2, Q(-1), 2), lam)
    assert not dominance_leq(AffineWeight(3, Q(0), 2), lam)  # parity mismatch


def test_orbit_weights_preserve_norm():
    K = 3
    l = 2
    lam_norm = Q(l * l, 2)
    pts = list(orbit_weights(l, K, Q(6)))
    assert (l, Q(0)) in [(w.j, w.n) for w in pts]
    for w in pts:
        # the affine action preserves (lam, lam) - 2K*n  <->  j^2/2 - 2Kn
        assert Q(w.j * w.j, 2) - 2 * K * w.n == lam_norm
    assert len(pts) == len({(w.j, w.n) for w in pts})


def test_orbit_sum_truncation_and_symmetry():
    s = orbit_sum(2, 3, order=8)
    assert s.level == 3
    assert s.coefficient(Q(0), 2) == 1
    # x -> 1/x symmetry of the orbit
    for n, term in s.coeffs.items():
        for j, c in term.c.items():
            assert term.c.get(-j) == c


def test_weyl_denominator_equals_odd_theta():
    d = weyl_denominator_shifted(1, order=10)
    th = theta_jacobi_series(ThetaKind.THETA1, 10)
    assert d.agrees_with((-th).with_level(2), through=Q(9))


def test_weyl_denominator_power_is_multiplicative():
    d1 = weyl_denominator(1, order=8)
    d2 = weyl_denominator(2, order=8)
    assert d2.agrees_with(d1 * d1)


@pytest.mark.parametrize("l,K", [(0, 1), (1, 1), (0, 2), (1, 2), (2, 2),
                                 (1, 3)])
def test_character_lead_and_leading_term(l, K):
    chi = character(l, K, order=6)
    assert chi.level == K
    lead = character_lead(l, K)
    s = chi.strip()
    assert s.lead == lead
    assert s.coeffs[0].c == {l: Q(1)} or s.coeffs[0].c.get(l) == Q(1)


def test_character_specialization_counts_states():
    # at x = 1 the vacuum level-1 character counts graded dimensions:
    # dim(n) = sum over integers m of partitions(n - m^2)
    chi = character(0, 1, order=8).strip()
    partitions = [1, 1, 2, 3, 5, 7, 11, 15]
    for n in range(8):
        want = partitions[n] + 2 * sum(partitions[n - m * m]
                                       for m in range(1, n + 1) if m * m <= n)
        e = chi.lead + Q(n)
        got = sum(chi.coefficient(e, j) for j in range(-4 * n - 2, 4 * n + 3))
        assert got == want
