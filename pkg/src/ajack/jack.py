"""Affine Calogero-Sutherland operators and the eigen-recursion for Jack series.

Operators act in series coordinates: a level-K series Sum c(n,j) x^j p^n is a
sum of weight vectors e^{j*Lb1 - n*delta + K*Lambda0} (n measured absolutely,
lead included).  All three operators below are exact on truncated series: the
coefficient they produce at depth n depends only on source depths <= n.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .affine import character, orbit_sum, weyl_denominator
from .errors import DomainError, ResonanceError
from .qseries import LaurentX, NomeSeries, Q
from .theta import eta_series


def apply_delta(f: NomeSeries) -> NomeSeries:
    """The Laplacian: multiply the (n, j) term by (w, w) = j^2/2 - 2nK.

    n is the absolute p-exponent (the series lead contributes), K the level tag.
    """
    K = f.level
    out = {}
    for s, c in f.coeffs.items():
        e = f.exponent(s)
        r = LaurentX()
        for j, v in c.c.items():
            w = (Q(j * j, 2) - 2 * e * K) * v
            if w:
                r.c[j] = w
        if r:
            out[s] = r
    return NomeSeries(K, f.D, f.lead, f.trunc, out)


def _root_pairing_rho(j: int, e: Fraction) -> Fraction:
    """(rho-hat, weight) = j/2 - 2n for the weight x^j p^e."""
    return Q(j, 2) - 2 * e


def apply_m(f: NomeSeries, k: int) -> NomeSeries:
    """M-hat_k = Delta-hat + 2k sum_{pos roots} sum_{m>=1} e^{-m root} d_root
    + 2k d_rho, in the identity-chamber expansion.

    Requires the x-coefficients to be balanced (sum_j j c(n,j) = 0 within each
    parity class at every depth), which holds for Weyl-invariant series; the
    depth-preserving root family otherwise produces an infinite Laurent tail.
    """
    K = f.level
    D = f.D
    out: dict[int, LaurentX] = {}

    def add(s: int, j: int, v: Fraction):
        if v:
            cur = out.setdefault(s, LaurentX())
            w = cur.c.get(j, Q(0)) + v
            if w:
                cur.c[j] = w
            else:
                cur.c.pop(j, None)

    for s, c in f.coeffs.items():
        e = f.exponent(s)
        # diagonal: Delta-hat plus 2k (rho-hat, .)
        for j, v in c.c.items():
            add(s, j, (Q(j * j, 2) - 2 * e * K
                       + 2 * k * _root_pairing_rho(j, e)) * v)
        # depth-preserving family (root alpha, r = 0): target j' receives
        # 2k * sum_{m>=1} (j'+2m) c(j'+2m), a weighted suffix sum per parity
        for par in (0, 1):
            sup = sorted(jj for jj in c.c if jj % 2 == par)
            if not sup:
                continue
            total = sum((Q(jj) * c.c[jj] for jj in sup), Q(0))
            if total:
                raise DomainError(
                    "unbalanced x-coefficients: depth-preserving ladder does "
                    "not terminate (input is not Weyl-symmetric)")
            suffix = Q(0)
            idx = len(sup) - 1
            # walk targets downward keeping suffix = sum_{jj >= j'+2} jj*c(jj)
            for jp in range(sup[-1] - 2, sup[0] - 2, -2):
                while idx >= 0 and sup[idx] >= jp + 2:
                    suffix += Q(sup[idx]) * c.c[sup[idx]]
                    idx -= 1
                add(s, jp, 2 * k * suffix)
        # depth-increasing families: roots alpha + r delta, -alpha + r delta,
        # r delta (r >= 1), applied with multiplicity index m >= 1
        max_shift = (f.trunc - s) // D
        for r in range(1, max_shift + 1):
            for m in range(1, max_shift // r + 1):
                s2 = s + m * r * D
                for j, v in c.c.items():
                    add(s2, j - 2 * m, 2 * k * (j + r * K) * v)
                    add(s2, j + 2 * m, 2 * k * (-j + r * K) * v)
                    add(s2, j, 2 * k * (r * K) * v)
    return NomeSeries(K, D, f.lead, f.trunc, out)


def apply_l(g: NomeSeries, k: int) -> NomeSeries:
    """L-hat_k = Delta-hat - 2 k(k-1) V, the Calogero-Sutherland form.

    The diagonal part reuses apply_delta with g's own level tag (for the
    conjugated operand delta-hat^k f that tag is K + 2k).  The potential V,
    expanded in the identity chamber with (alpha, alpha) = 2 folded in, is
        V = sum_{m>=1} m x^{-2m}  +  sum_{n>=1, m>=1} m p^{nm} (x^{2m}+x^{-2m}).
    The depth-preserving piece needs sum_j c = sum_j j c = 0 per parity class
    (an order-k zero at x = +-1), or the product is not Laurent.
    """
    out = apply_delta(g)
    if k * (k - 1) == 0:
        return out
    D = g.D
    cc = -2 * k * (k - 1)
    extra: dict[int, LaurentX] = {}

    def add(s: int, j: int, v: Fraction):
        if v:
            cur = extra.setdefault(s, LaurentX())
            w = cur.c.get(j, Q(0)) + v
            if w:
                cur.c[j] = w
            else:
                cur.c.pop(j, None)

    for s, c in g.coeffs.items():
        # p^0 piece of V: target j' gets sum_{m>=1} m c(j'+2m)
        for par in (0, 1):
            sup = sorted(jj for jj in c.c if jj % 2 == par)
            if not sup:
                continue
            tot0 = sum((c.c[jj] for jj in sup), Q(0))
            tot1 = sum((Q(jj) * c.c[jj] for jj in sup), Q(0))
            if tot0 or tot1:
                raise DomainError(
                    "operand lacks the required zero at x = +-1; "
                    "potential multiplication does not terminate")
            # T(j') = sum_{m>=1} m c(j'+2m) obeys T(j'-2) = T(j') + U(j'+2)
            # with U(t) = sum_{jj >= t} c(jj); both vanish below the support
            U = Q(0)
            T = Q(0)
            idx = len(sup) - 1
            for jp in range(sup[-1] - 2, sup[0] - 2, -2):
                while idx >= 0 and sup[idx] >= jp + 2:
                    U += c.c[sup[idx]]
                    idx -= 1
                T += U
                add(s, jp, cc * T)
        # p^{nm} pieces
        max_shift = (g.trunc - s) // D
        for n in range(1, max_shift + 1):
            for m in range(1, max_shift // n + 1):
                s2 = s + n * m * D
                for j, v in c.c.items():
                    add(s2, j + 2 * m, cc * m * v)
                    add(s2, j - 2 * m, cc * m * v)
    return out + NomeSeries(g.level, D, g.lead, g.trunc, extra)


# ----------------------------------------------------------------------
# Labels and the eigen-recursion
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class JackLabel:
    """(K, k, l) with k <= l <= kappa - k, kappa = K + 2k.

    The highest weight is (l-k)*Lb1 + K*Lambda0; the parameter l is the
    rho-shifted finite weight l = (l-k) + k.
    """

    K: int
    k: int
    l: int

    def __post_init__(self):
        if self.K < 0 or self.k < 1:
            raise DomainError(f"bad label {self}")
        if not self.k <= self.l <= self.K + self.k:
            raise DomainError(
                f"l = {self.l} outside [{self.k}, {self.K + self.k}]")

    @property
    def kappa(self) -> int:
        return self.K + 2 * self.k

    @property
    def j0(self) -> int:
        return self.l - self.k

    @property
    def alpha(self) -> Fraction:
        """k(rho,rho)/2h - (l*Lb1, l*Lb1)/2kappa = k/8 - l^2/(4 kappa)."""
        return Q(self.k, 8) - Q(self.l * self.l, 4 * self.kappa)

    @property
    def eigenvalue(self) -> Fraction:
        """(lam, lam + 2k rho-hat) = (l^2 - k^2)/2."""
        return Q(self.l * self.l - self.k * self.k, 2)


@dataclass
class JackResult:
    unnormalized: NomeSeries
    alpha: Fraction
    normalized: NomeSeries
    eigenvalue: Fraction
    orbit_coeffs: dict


def _depth_eigen(j: int, n: int, k: int, kappa: int) -> Fraction:
    """Diagonal value of M-hat_k on p^n m_j: (j^2 + 2kj)/2 - 2 n kappa."""
    return Q(j * j + 2 * k * j, 2) - 2 * n * kappa


def jack_series(label: JackLabel, order: int, delta_shift: int = 0) -> JackResult:
    """Solve the eigen-recursion for the monic Jack series of ``label``.

    Works in the orbit-sum basis indexed by dominant pairs (j, n), depth
    ascending and j descending, so every off-diagonal source is already
    known when a coefficient is solved.  A vanishing denominator raises
    :class:`ResonanceError`.

    ``delta_shift`` translates the label by ``delta_shift`` imaginary-root
    steps, which simply multiplies the series by p^{delta_shift}.
    """
    K, k = label.K, label.k
    kappa = label.kappa
    j0 = label.j0
    E0 = label.eigenvalue

    if K == 0:
        unnorm = NomeSeries.one(order, level=0)
    else:
        js = [j for j in range(K, -1, -1) if (j - j0) % 2 == 0]
        mhat = {j: apply_m(orbit_sum(j, K, order), k) for j in js}
        # orbit-basis matrix entries: coefficient of the dominant e-weight
        coeff = {(j0, 0): Q(1)}
        for n in range(0, order + 1):
            for j in js:
                if (j, n) == (j0, 0):
                    continue
                if n < max(0, (j - j0) // 2):
                    continue  # not dominated by the highest weight
                src = Q(0)
                for (j1, n1), c1 in coeff.items():
                    if n1 > n or (j1, n1) == (j, n):
                        continue
                    src += c1 * mhat[j1].coefficient(Q(n - n1), j)
                den = E0 - _depth_eigen(j, n, k, kappa)
                if den == 0:
                    raise ResonanceError(
                        f"degenerate eigenvalue at (j, n) = ({j}, {n}) "
                        f"for label {label}")
                if src:
                    coeff[(j, n)] = src / den
        total: dict[int, LaurentX] = {}
        orbits = {j: orbit_sum(j, K, order) for j in js}
        for (j, n), c in coeff.items():
            for s, cx in orbits[j].coeffs.items():
                if s + n <= order:
                    cur = total.setdefault(s + n, LaurentX())
                    for jj, v in cx.c.items():
                        w = cur.c.get(jj, Q(0)) + c * v
                        if w:
                            cur.c[jj] = w
                        else:
                            cur.c.pop(jj, None)
        unnorm = NomeSeries(K, 1, Q(0), order, total)
    if delta_shift:
        unnorm = unnorm.shifted(delta_shift)
    alpha = label.alpha
    D = lcm(8, 4 * kappa)
    norm = unnorm.with_grid(D).shifted(-alpha)
    oc = coeff if K else {(0, 0): Q(1)}
    return JackResult(unnorm, alpha, norm, E0, oc)


def jack_normalized(label: JackLabel, order: int) -> NomeSeries:
    """The normalized Jack series p^{-alpha} * (monic series)."""
    return jack_series(label, order).normalized


# ----------------------------------------------------------------------
# Closed forms at levels 1 and 2
# ----------------------------------------------------------------------

def _eta_quotient_pow(num, den, expo: Fraction, order: int) -> NomeSeries:
    """(prod eta(s tau) / prod eta(s' tau))^expo as an exact series."""
    hi = order + 2
    a = NomeSeries.one(hi, level=0)
    for s in num:
        a = a * eta_series(hi, s)
    b = NomeSeries.one(hi, level=0)
    for s in den:
        b = b * eta_series(hi, s)
    return a.divide_exact(b).pow_rational(expo)


def closed_form(K: int, k: int, l: int, order: int) -> NomeSeries:
    """Character/eta-quotient expression for the normalized Jack series.

    Available at levels 1 and 2 only; the level-2 middle label's naive
    sqrt(2) prefactors cancel exactly, so every coefficient is rational.
    """
    label = JackLabel(K, k, l)  # validates the range
    kappa = label.kappa
    j0 = label.j0
    if K == 1:
        chi = character(j0, 1, order + 1)
        h = _eta_quotient_pow([], [Q(1)], Q(k - 1, kappa), order)
        return (chi * h).with_level(1)
    if K == 2:
        e = Q(k - 1, k + 1)
        if j0 == 1:
            chi = character(1, 2, order + 1)
            h = _eta_quotient_pow([Q(2)], [Q(1), Q(1)], e, order)
            return (chi * h).with_level(2)
        chi0 = character(0, 2, order + 1)
        chi2 = character(2, 2, order + 1)
        inv_h1 = _eta_quotient_pow([Q(1)], [Q(1, 2), Q(2)], e, order)
        inv_h2 = _eta_quotient_pow([Q(1, 2)], [Q(1), Q(1)], e, order)
        sgn = 1 if j0 == 0 else -1
        t1 = ((chi0 + chi2) * inv_h1).scale(Q(1, 2))
        t2 = ((chi0 - chi2) * inv_h2).scale(Q(sgn, 2))
        return (t1 + t2).with_level(2).strip()
    raise DomainError(f"no closed form implemented at level {K}")


# ----------------------------------------------------------------------
# Heat-equation check for the transition matrices
# ----------------------------------------------------------------------

def heat_check(K: int, k: int, order: int):
    """Verify sum_mu (k-1) b Delta-hat chi_mu + 2 kappa (p d_p b) chi_mu = 0.

    The transition coefficients b are read off the closed forms.  Returns
    (True, None) on success, or (False, description) at the first failure.
    """
    kappa = K + 2 * k
    if K == 1:
        rows = {
            0: [(0, _eta_quotient_pow([], [Q(1)], Q(k - 1, kappa), order))],
            1: [(1, _eta_quotient_pow([], [Q(1)], Q(k - 1, kappa), order))],
        }
    elif K == 2:
        e = Q(k - 1, k + 1)
        inv_h1 = _eta_quotient_pow([Q(1)], [Q(1, 2), Q(2)], e, order)
        inv_h2 = _eta_quotient_pow([Q(1, 2)], [Q(1), Q(1)], e, order)
        h3 = _eta_quotient_pow([Q(2)], [Q(1), Q(1)], e, order)
        ap = (inv_h1 + inv_h2).scale(Q(1, 2))
        am = (inv_h1 - inv_h2).scale(Q(1, 2))
        rows = {
            0: [(0, ap), (2, am)],
            1: [(1, h3)],
            2: [(0, am), (2, ap)],
        }
    else:
        raise DomainError(f"heat check needs level 1 or 2, got {K}")
    chis = {mu: character(mu, K, order + 1) for mu in
            {mu for row in rows.values() for mu, _ in row}}
    dchis = {mu: apply_delta(chi) for mu, chi in chis.items()}
    for lam, row in rows.items():
        acc = None
        for mu, b in row:
            term = (dchis[mu] * b).scale(k - 1) + (chis[mu] * b.p_dp()).scale(2 * kappa)
            acc = term if acc is None else acc + term
        zero = NomeSeries.zero(0, level=K, D=acc.D, lead=acc.lead)
        if not acc.agrees_with(zero, through=Q(order) + acc.lead - Q(1)):
            for ee, jj, vv in acc.terms():
                return False, f"row {lam}: residue {vv} at x^{jj} p^{ee}"
    return True, None
