"""Operator algebra, triangular recursion, closed forms, and heat flow."""

from fractions import Fraction as Q

import pytest

from ajack.affine import character, orbit_sum, weyl_denominator
from ajack.errors import AjackError, DomainError
from ajack.jack import (JackLabel, apply_delta, apply_l, apply_m, closed_form,
                        heat_check, jack_series)

ORDER = 8


def test_label_validation_and_invariants():
    lab = JackLabel(2, 2, 3)
    assert lab.kappa == 6 and lab.j0 == 1
    assert lab.alpha == Q(2, 8) - Q(9, 24)
    assert lab.eigenvalue == Q(9 - 4, 2)
    with pytest.raises(AjackError):
        JackLabel(1, 2, 5)  # l outside [k, K+k]
    with pytest.raises(AjackError):
        JackLabel(1, 2, 1)


def test_apply_delta_is_diagonal_on_single_terms():
    m = orbit_sum(1, 1, ORDER)
    out = apply_delta(m)
    # the weight (j=1, n=0) carries j^2/2 = 1/2
    assert out.coefficient(Q(0), 1) == Q(1, 2)
    # the reflected weight (j=-1, n=...) sits deeper with shifted eigenvalue
    for e, j, c in out.terms():
        assert c == m.coefficient(e, j) * (Q(j * j, 2) - 2 * e * m.level)


def test_apply_m_diagonal_coefficient():
    # on the basic orbit sum the diagonal part contributes (j^2+2kj)/2 at the top
    k = 1
    out = apply_m(orbit_sum(1, 1, ORDER), k)
    assert out.coefficient(Q(0), 1) == Q(3, 2)


def test_apply_m_rejects_asymmetric_input():
    from ajack.qseries import LaurentX, NomeSeries
    probe = NomeSeries(1, 1, Q(0), 4, {0: LaurentX.monomial(Q(1), 1)})
    with pytest.raises(DomainError):
        apply_m(probe, 1)


@pytest.mark.parametrize("K,k,j", [(1, 2, 1), (1, 2, 0), (2, 2, 2), (2, 3, 1)])
def test_conjugation_intertwines_the_two_operators(K, k, j):
    f = orbit_sum(j, K, ORDER) + orbit_sum(max(j - 2, j % 2), K, ORDER)
    dk = weyl_denominator(k, ORDER)
    lhs = apply_l(dk * f, k) - (dk * f).scale(Q(k * k, 2))
    rhs = dk * apply_m(f, k)
    assert lhs.agrees_with(rhs, through=Q(ORDER - 2))


def test_k_equals_one_reduces_to_characters():
    # at coupling 1 the monic series is the character scaled to lead with 1
    for K in (1, 2):
        for j0 in range(0, K + 1):
            res = jack_series(JackLabel(K, 1, j0 + 1), ORDER)
            chi = character(j0, K, ORDER).strip()
            chi = chi.shifted(-chi.lead)
            assert res.unnormalized.agrees_with(chi, through=Q(ORDER - 1))


def test_level_zero_is_trivial():
    res = jack_series(JackLabel(0, 3, 3), 4)
    assert res.unnormalized.coefficient(Q(0), 0) == 1
    assert len(list(res.unnormalized.terms())) == 1


@pytest.mark.parametrize("K,k", [(1, 1), (1, 2), (1, 3), (1, 4)])
def test_level_one_closed_form(K, k):
    for l in (k, k + 1):
        res = jack_series(JackLabel(K, k, l), ORDER)
        cf = closed_form(K, k, l, ORDER)
        assert res.normalized.agrees_with(cf, through=Q(ORDER - 2))


@pytest.mark.parametrize("k", [1, 2, 3])
def test_level_two_closed_form(k):
    for l in (k, k + 1, k + 2):
        res = jack_series(JackLabel(2, k, l), ORDER)
        cf = closed_form(2, k, l, ORDER)
        assert res.normalized.agrees_with(cf, through=Q(ORDER - 2))


def test_normalized_lead_values():
    # the normalization shifts by k/8 - l^2/(4 kappa)
    res = jack_series(JackLabel(1, 1, 1), 4)
    assert res.normalized.strip().lead == -Q(1, 24)
    res = jack_series(JackLabel(1, 2, 2), 4)
    assert res.normalized.strip().lead == -Q(1, 20)


def test_eigenvalue_equation():
    # dressing the monic series by the k-th denominator power gives an
    # eigenvector of the Calogero-Sutherland form
    label = JackLabel(2, 2, 3)
    res = jack_series(label, ORDER)
    dressed = weyl_denominator(label.k, ORDER) * res.unnormalized
    lhs = apply_l(dressed, label.k)
    rhs = dressed.scale(label.eigenvalue + Q(label.k ** 2, 2))
    assert lhs.agrees_with(rhs, through=Q(ORDER - 2))


@pytest.mark.parametrize("K,k", [(1, 1), (1, 2), (2, 2), (2, 3)])
def test_heat_equation(K, k):
    ok, msg = heat_check(K, k, ORDER)
    assert ok, msg
