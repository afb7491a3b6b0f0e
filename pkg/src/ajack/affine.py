"""Affine sl2 weight combinatorics: bilinear form, Weyl orbits, characters.

Weights are triples (j, n, K) standing for j*Lb1 - n*delta + K*Lambda0, where
Lb1 is the finite fundamental weight (half the simple root alpha).  In series
coordinates e^{weight} is x^j p^n at level K.  The bilinear form is normalized
by (Lb1, Lb1) = 1/2, (Lambda0, delta) = 1, everything else among
{Lambda0, delta} x {Lambda0, delta, Lb1} zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, LevelMismatchError
from .qseries import LaurentX, NomeSeries, Q
from .theta import theta_level_series


@dataclass(frozen=True)
class AffineWeight:
    """A level-K weight j*Lb1 - n*delta + K*Lambda0."""

    j: int
    n: Fraction
    K: int

    def __post_init__(self):
        object.__setattr__(self, "n", Q(self.n))

    def norm(self) -> Fraction:
        """(w, w) = j^2/2 - 2nK."""
        return form(self, self)


def form(a: AffineWeight, b: AffineWeight) -> Fraction:
    """Bilinear form (a, b) = j j'/2 - n K' - n' K."""
    return Q(a.j * b.j, 2) - a.n * b.K - b.n * a.K


RHO = AffineWeight(1, Q(0), 2)  # rho-hat = Lb1 + 2 Lambda0


def dominance_leq(mu: AffineWeight, lam: AffineWeight) -> bool:
    """True iff lam - mu is a nonnegative integer combination of simple roots.

    Writing lam - mu = a*alpha0 + b*alpha1 with alpha1 = 2*Lb1 and
    alpha0 = delta - 2*Lb1 gives a = n_mu - n_lam and b = a + (j_lam - j_mu)/2.
    """
    if mu.K != lam.K:
        raise LevelMismatchError(f"levels differ: {mu.K} vs {lam.K}")
    a = mu.n - lam.n
    if a.denominator != 1 or a < 0:
        return False
    dj = lam.j - mu.j
    if dj % 2:
        return False
    b = a + dj // 2
    return b >= 0


def orbit_weights(l: int, K: int, max_depth: Fraction):
    """All affine Weyl orbit weights of l*Lb1 + K*Lambda0 with depth <= max_depth.

    The orbit is {(+-l + 2Kb, Kb^2 +- lb) : b in Z}; depths come from norm
    preservation and are automatically nonnegative integers.
    """
    if K < 1:
        raise DomainError(f"orbit enumeration needs level >= 1, got {K}")
    if not 0 <= l <= K:
        raise DomainError(f"weight {l} outside the dominant range [0, {K}]")
    seen = set()
    out = []
    for sign in (1, -1):
        b = 0
        while True:
            hit = False
            for bb in (b, -b) if b else (0,):
                j = sign * l + 2 * K * bb
                n = K * bb * bb + sign * l * bb
                if n <= max_depth:
                    hit = True
                    if (j, n) not in seen:
                        seen.add((j, n))
                        out.append(AffineWeight(j, Q(n), K))
            if not hit:
                break
            b += 1
    return out


def orbit_sum(l: int, K: int, order: int) -> NomeSeries:
    """The orbit sum m_{l*Lb1 + K*Lambda0} truncated at p-order ``order``."""
    coeffs: dict[int, LaurentX] = {}
    for w in orbit_weights(l, K, Q(order)):
        n = int(w.n)
        cur = coeffs.setdefault(n, LaurentX())
        cur.c[w.j] = cur.c.get(w.j, Q(0)) + 1
    return NomeSeries(K, 1, Q(0), order, coeffs)


def weyl_denominator(power: int = 1, order: int = 0) -> NomeSeries:
    """delta-hat^power as a level-2*power series, truncated at p-order ``order``.

    delta-hat = e^{rho-hat} prod_{positive roots} (1 - e^{-root})
              = (x - x^{-1}) prod_{r>=1} (1-p^r)(1-p^r x^{-2})(1-p^r x^2).
    """
    if power < 1:
        raise DomainError(f"power must be >= 1, got {power}")
    base = NomeSeries(2, 1, Q(0), order, {0: LaurentX({1: 1, -1: -1})})
    for r in range(1, order + 1):
        for js in ((0,), (-2,), (2,)):
            f = NomeSeries(0, 1, Q(0), order,
                           {0: LaurentX.one(), r: LaurentX({js[0]: -1})})
            base = base * f
    out = base
    for _ in range(power - 1):
        out = out * base
    return out


def weyl_denominator_shifted(power: int = 1, order: int = 0) -> NomeSeries:
    """delta-hat'^power = (p^{1/8} delta-hat)^power, on grid D = 8."""
    d = weyl_denominator(power, order).with_grid(8)
    return d.shifted(Q(power, 8))


def character(l: int, K: int, order: int) -> NomeSeries:
    """Normalized character of the integrable module with highest weight
    l*Lb1 + K*Lambda0, truncated at p-order ``order``.

    Built as the theta quotient
        (theta_{l+1, K+2}(2z) - theta_{-(l+1), K+2}(2z))
        / (theta_{1,2}(2z) - theta_{-1,2}(2z)),
    whose lead is h_l - c_V/24 = (2l^2 + 4l - K)/(8(K+2)) and whose leading
    term is x^l.  The level tag of the result is K.
    """
    if not 0 <= l <= K:
        raise DomainError(f"weight {l} outside the dominant range [0, {K}]")
    kap = K + 2
    hi = order + 1
    num = (theta_level_series(l + 1, kap, hi) - theta_level_series(-(l + 1), kap, hi))
    den = (theta_level_series(1, 2, hi) - theta_level_series(-1, 2, hi))
    quot = num.strip().divide_exact(den.strip())
    want = int((Q(order) - quot.lead) * quot.D)
    if 0 <= want < quot.trunc:
        quot = quot.truncated(want)
    return quot


def character_lead(l: int, K: int) -> Fraction:
    """h_l - c_V/24 for the level-K module of finite weight l."""
    return Q(2 * l * l + 4 * l - K, 8 * (K + 2))
