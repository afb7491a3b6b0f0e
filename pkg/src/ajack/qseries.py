"""Exact truncated series in the nome p with Laurent-polynomial coefficients.

A :class:`NomeSeries` represents

    e^{2 pi i K u} * p^lead * sum_{n=0}^{trunc} c_n(x) p^{n/D},

with p = e^{2 pi i tau}, x = e^{2 pi i z}, and every c_n a Laurent polynomial
in x over the rationals.  All arithmetic is exact; truncation is tracked in
grid steps of size 1/D relative to the leading exponent.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction

from .errors import DomainError, GridError, LevelMismatchError, NotInvertibleError

Q = Fraction

TWO_PI_I = 2j * math.pi


def _as_q(v) -> Q:
    if isinstance(v, Q):
        return v
    if isinstance(v, int):
        return Q(v)
    if isinstance(v, str):
        return Q(v)
    raise TypeError(f"expected rational, got {type(v).__name__}")


class LaurentX:
    """Laurent polynomial in x with exact rational coefficients."""

    __slots__ = ("c",)

    def __init__(self, coeffs=None):
        self.c = {}
        if coeffs:
            for j, v in coeffs.items():
                v = _as_q(v)
                if v:
                    self.c[int(j)] = v

    @classmethod
    def zero(cls) -> "LaurentX":
        return cls()

    @classmethod
    def one(cls) -> "LaurentX":
        return cls({0: 1})

    @classmethod
    def monomial(cls, coeff, j: int) -> "LaurentX":
        return cls({j: coeff})

    def is_zero(self) -> bool:
        return not self.c

    def __bool__(self) -> bool:
        return bool(self.c)

    def __eq__(self, other) -> bool:
        return isinstance(other, LaurentX) and self.c == other.c

    def __hash__(self):
        return hash(frozenset(self.c.items()))

    def __neg__(self) -> "LaurentX":
        r = LaurentX()
        r.c = {j: -v for j, v in self.c.items()}
        return r

    def __add__(self, other: "LaurentX") -> "LaurentX":
        r = dict(self.c)
        for j, v in other.c.items():
            s = r.get(j, Q(0)) + v
            if s:
                r[j] = s
            else:
                r.pop(j, None)
        out = LaurentX()
        out.c = r
        return out

    def __sub__(self, other: "LaurentX") -> "LaurentX":
        return self + (-other)

    def __mul__(self, other: "LaurentX") -> "LaurentX":
        r = {}
        for j1, v1 in self.c.items():
            for j2, v2 in other.c.items():
                j = j1 + j2
                s = r.get(j, Q(0)) + v1 * v2
                if s:
                    r[j] = s
                else:
                    r.pop(j, None)
        out = LaurentX()
        out.c = r
        return out

    def scale(self, r) -> "LaurentX":
        r = _as_q(r)
        out = LaurentX()
        if r:
            out.c = {j: r * v for j, v in self.c.items()}
        return out

    def shift(self, dj: int) -> "LaurentX":
        out = LaurentX()
        out.c = {j + dj: v for j, v in self.c.items()}
        return out

    def is_monomial(self) -> bool:
        return len(self.c) == 1

    def support(self):
        return sorted(self.c)

    def divexact(self, den: "LaurentX") -> "LaurentX":
        """Exact Laurent division; raises NotInvertibleError on a nonzero remainder."""
        if den.is_zero():
            raise NotInvertibleError("division by the zero Laurent polynomial")
        if self.is_zero():
            return LaurentX.zero()
        ds = den.support()
        dlo, dhi = ds[0], ds[-1]
        rem = dict(self.c)
        quot = {}
        while rem:
            ks = sorted(rem)
            lo, hi = ks[0], ks[-1]
            jq = hi - dhi
            if lo - dlo > jq:
                raise NotInvertibleError("inexact Laurent polynomial division")
            cq = rem[hi] / den.c[dhi]
            quot[jq] = cq
            for j, v in den.c.items():
                jj = j + jq
                s = rem.get(jj, Q(0)) - cq * v
                if s:
                    rem[jj] = s
                else:
                    rem.pop(jj, None)
        return LaurentX(quot)

    def eval(self, x: complex) -> complex:
        return sum(complex(v) * x**j for j, v in self.c.items())

    def eval_at_one_weighted(self) -> Q:
        """sum_j j * c_j, the x d/dx value at x = 1."""
        return sum((j * v for j, v in self.c.items()), Q(0))

    def eval_at_one(self) -> Q:
        return sum(self.c.values(), Q(0))

    def __repr__(self):
        if not self.c:
            return "0"
        parts = []
        for j in self.support():
            v = self.c[j]
            if j == 0:
                parts.append(f"{v}")
            else:
                parts.append(f"{v}*x^{j}" if v != 1 else f"x^{j}")
        return " + ".join(parts)


class NomeSeries:
    """Truncated series in fractional powers of the nome, level-tagged."""

    __slots__ = ("level", "D", "lead", "trunc", "coeffs")

    def __init__(self, level: int, D: int, lead, trunc: int, coeffs):
        if D < 1:
            raise GridError(f"grid denominator must be >= 1, got {D}")
        if trunc < 0:
            raise GridError(f"truncation order must be >= 0, got {trunc}")
        self.level = int(level)
        self.D = int(D)
        self.lead = _as_q(lead)
        self.trunc = int(trunc)
        self.coeffs = {}
        for n, c in coeffs.items():
            if not isinstance(c, LaurentX):
                c = LaurentX(c)
            if c and 0 <= n <= trunc:
                self.coeffs[int(n)] = c

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, trunc: int, level: int = 0, D: int = 1, lead=Q(0)) -> "NomeSeries":
        return cls(level, D, lead, trunc, {})

    @classmethod
    def constant(cls, value, trunc: int, level: int = 0, D: int = 1) -> "NomeSeries":
        return cls(level, D, Q(0), trunc, {0: LaurentX({0: value})})

    @classmethod
    def one(cls, trunc: int, level: int = 0, D: int = 1) -> "NomeSeries":
        return cls.constant(1, trunc, level=level, D=D)

    # -- bookkeeping ---------------------------------------------------

    @property
    def validity(self) -> Q:
        """Largest exponent through which the coefficients are exact."""
        return self.lead + Q(self.trunc, self.D)

    def tail_exponent(self) -> Q:
        """First omitted p-exponent (for numeric tail bounds)."""
        return self.lead + Q(self.trunc + 1, self.D)

    def is_zero(self) -> bool:
        return not self.coeffs

    def exponent(self, n: int) -> Q:
        return self.lead + Q(n, self.D)

    def terms(self):
        """Yield (absolute exponent, x-power, coefficient) triples."""
        for n in sorted(self.coeffs):
            c = self.coeffs[n]
            e = self.exponent(n)
            for j in c.support():
                yield e, j, c.c[j]

    def coefficient(self, exponent, j: int) -> Q:
        """Exact coefficient of x^j p^exponent (0 if absent and within validity)."""
        e = _as_q(exponent)
        step = (e - self.lead) * self.D
        if step.denominator != 1 or not (0 <= step <= self.trunc):
            return Q(0)
        c = self.coeffs.get(int(step))
        return c.c.get(j, Q(0)) if c else Q(0)

    def with_grid(self, D: int) -> "NomeSeries":
        """Refine to a finer grid (D must be a multiple of the current one)."""
        if D == self.D:
            return self
        if D % self.D:
            raise GridError(f"{D} is not a multiple of grid {self.D}")
        f = D // self.D
        return NomeSeries(self.level, D, self.lead, self.trunc * f,
                          {n * f: c for n, c in self.coeffs.items()})

    def with_level(self, level: int) -> "NomeSeries":
        """Re-tag the suppressed e^{2 pi i K u} factor."""
        return NomeSeries(level, self.D, self.lead, self.trunc, self.coeffs)

    def shifted(self, dlead) -> "NomeSeries":
        """Multiply by the pure prefactor p^dlead."""
        return NomeSeries(self.level, self.D, self.lead + _as_q(dlead),
                          self.trunc, self.coeffs)

    def truncated(self, trunc: int) -> "NomeSeries":
        if trunc > self.trunc:
            raise GridError("cannot extend a truncated series")
        return NomeSeries(self.level, self.D, self.lead, trunc,
                          {n: c for n, c in self.coeffs.items() if n <= trunc})

    # -- ring operations ------------------------------------------------

    def _common(self, other: "NomeSeries"):
        D = math.lcm(self.D, other.D)
        delta = self.lead - other.lead
        if (delta * D).denominator != 1:
            raise GridError(
                f"leads {self.lead} and {other.lead} are not alignable on grid 1/{D}")
        return D

    def __neg__(self) -> "NomeSeries":
        return NomeSeries(self.level, self.D, self.lead, self.trunc,
                          {n: -c for n, c in self.coeffs.items()})

    def __add__(self, other: "NomeSeries") -> "NomeSeries":
        if self.level != other.level:
            raise LevelMismatchError(
                f"cannot add series of level {self.level} and {other.level}")
        D = self._common(other)
        a, b = self.with_grid(D), other.with_grid(D)
        lead = min(a.lead, b.lead)
        validity = min(a.validity, b.validity)
        trunc = int((validity - lead) * D)
        coeffs = {}
        for s in (a, b):
            off = int((s.lead - lead) * D)
            for n, c in s.coeffs.items():
                if n + off <= trunc:
                    coeffs[n + off] = coeffs.get(n + off, LaurentX.zero()) + c
        return NomeSeries(self.level, D, lead, trunc, coeffs)

    def __sub__(self, other: "NomeSeries") -> "NomeSeries":
        return self + (-other)

    def __mul__(self, other: "NomeSeries") -> "NomeSeries":
        D = math.lcm(self.D, other.D)
        a, b = self.with_grid(D), other.with_grid(D)
        lead = a.lead + b.lead
        trunc = min(a.trunc, b.trunc)
        coeffs = {}
        for n1, c1 in a.coeffs.items():
            if n1 > trunc:
                continue
            for n2, c2 in b.coeffs.items():
                n = n1 + n2
                if n > trunc:
                    continue
                prod = c1 * c2
                if n in coeffs:
                    coeffs[n] = coeffs[n] + prod
                else:
                    coeffs[n] = prod
        return NomeSeries(self.level + other.level, D, lead, trunc, coeffs)

    def scale(self, r) -> "NomeSeries":
        r = _as_q(r)
        return NomeSeries(self.level, self.D, self.lead, self.trunc,
                          {n: c.scale(r) for n, c in self.coeffs.items()})

    def mul_monomial(self, coeff, j: int) -> "NomeSeries":
        """Multiply by the Laurent monomial coeff * x^j."""
        m = LaurentX.monomial(coeff, j)
        return NomeSeries(self.level, self.D, self.lead, self.trunc,
                          {n: c * m for n, c in self.coeffs.items()})

    def invert(self) -> "NomeSeries":
        c0 = self.coeffs.get(0)
        if c0 is None or not c0.is_monomial():
            raise NotInvertibleError(
                "leading coefficient is not a single monomial c*x^j")
        (j0,) = c0.support()
        inv0 = LaurentX.monomial(1 / c0.c[j0], -j0)
        out = {0: inv0}
        for n in range(1, self.trunc + 1):
            acc = LaurentX.zero()
            for m, am in self.coeffs.items():
                if 1 <= m <= n and (n - m) in out:
                    acc = acc + am * out[n - m]
            if acc:
                out[n] = (-acc) * inv0
        return NomeSeries(-self.level, self.D, -self.lead, self.trunc, out)

    def divide_exact(self, den: "NomeSeries") -> "NomeSeries":
        """Exact quotient self/den, requiring termwise Laurent divisibility.

        Unlike :meth:`invert`, the order-0 coefficient of den may be any
        nonzero Laurent polynomial, as long as the division closes at every
        order (this is how Weyl-Kac character quotients are formed).
        """
        D = self._common(den)
        a, b = self.with_grid(D), den.with_grid(D)
        d0 = b.coeffs.get(0)
        if d0 is None:
            raise NotInvertibleError("denominator has vanishing leading coefficient")
        trunc = min(a.trunc, b.trunc)
        out = {}
        for n in range(0, trunc + 1):
            r = a.coeffs.get(n, LaurentX.zero())
            for m, qm in out.items():
                bm = b.coeffs.get(n - m)
                if bm is not None:
                    r = r - qm * bm
            if r:
                out[n] = r.divexact(d0)
        return NomeSeries(a.level - b.level, D, a.lead - b.lead, trunc, out)

    def pow_rational(self, c) -> "NomeSeries":
        """Generalized binomial power (1 + h)^c with exact coefficients.

        Requires the order-0 coefficient to be exactly 1 (after the lead).
        """
        c = _as_q(c)
        if self.coeffs.get(0) != LaurentX.one():
            raise NotInvertibleError(
                "pow_rational requires leading coefficient exactly 1")
        lvl = self.level * c
        if lvl.denominator != 1:
            raise LevelMismatchError(
                f"level {self.level} not preserved under power {c}")
        h = NomeSeries(0, self.D, Q(0), self.trunc,
                       {n: cc for n, cc in self.coeffs.items() if n >= 1})
        acc = NomeSeries.one(self.trunc, level=0, D=self.D)
        term = acc
        bc = Q(1)
        m = 0
        while not term.is_zero() or m == 0:
            m += 1
            bc = bc * (c - (m - 1)) / m
            term = term * h
            if term.is_zero() or bc == 0:
                break
            acc = acc + term.scale(bc)
            if m > self.trunc:
                break
        return NomeSeries(int(lvl), self.D, self.lead * c, self.trunc, acc.coeffs)

    def strip(self) -> "NomeSeries":
        """Relocate the lead to the first nonzero coefficient (keeps validity)."""
        if not self.coeffs:
            return self
        n0 = min(self.coeffs)
        if n0 == 0:
            return self
        return NomeSeries(self.level, self.D, self.lead + Q(n0, self.D),
                          self.trunc - n0,
                          {n - n0: c for n, c in self.coeffs.items()})

    def p_dp(self) -> "NomeSeries":
        """Coefficient-wise p d/dp (multiplies each term by its full exponent)."""
        return NomeSeries(self.level, self.D, self.lead, self.trunc,
                          {n: c.scale(self.exponent(n)) for n, c in self.coeffs.items()})

    # -- comparison -----------------------------------------------------

    def agrees_with(self, other: "NomeSeries", through=None) -> bool:
        """Exact coefficient agreement up to an exponent bound.

        The bound defaults to the smaller validity of the two series.
        Levels must match.
        """
        if self.level != other.level:
            return False
        try:
            D = self._common(other)
        except GridError:
            return False
        bound = min(self.validity, other.validity)
        if through is not None:
            bound = min(bound, _as_q(through))
        a, b = self.with_grid(D), other.with_grid(D)
        lead = min(a.lead, b.lead)
        na = int((a.lead - lead) * D)
        nb = int((b.lead - lead) * D)
        nmax = int((bound - lead) * D)
        for n in range(0, nmax + 1):
            ca = a.coeffs.get(n - na, LaurentX.zero()) if n >= na else LaurentX.zero()
            cb = b.coeffs.get(n - nb, LaurentX.zero()) if n >= nb else LaurentX.zero()
            if ca != cb:
                return False
        return True

    def __eq__(self, other) -> bool:
        return (isinstance(other, NomeSeries)
                and self.level == other.level
                and self.agrees_with(other)
                and self.validity == other.validity)

    # -- numerics ---------------------------------------------------------

    def eval_numeric(self, z: complex, u: complex, tau: complex) -> complex:
        """Evaluate at (z, u, tau); requires Im tau > 0."""
        if tau.imag <= 0:
            raise DomainError(f"Im tau must be positive, got {tau}")
        x = cmath.exp(TWO_PI_I * z)
        total = 0.0 + 0.0j
        for n in sorted(self.coeffs):
            e = self.exponent(n)
            total += self.coeffs[n].eval(x) * cmath.exp(TWO_PI_I * tau * float(e))
        return total * cmath.exp(TWO_PI_I * self.level * u)

    # -- serialization ------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "level": self.level,
            "gridDenominator": self.D,
            "lead": f"{self.lead.numerator}/{self.lead.denominator}",
            "order": self.trunc,
            "coeffs": [
                {"n": n,
                 "terms": [{"j": j, "c": f"{v.numerator}/{v.denominator}"}
                           for j, v in sorted(self.coeffs[n].c.items())]}
                for n in sorted(self.coeffs)
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "NomeSeries":
        coeffs = {
            entry["n"]: LaurentX({t["j"]: Q(t["c"]) for t in entry["terms"]})
            for entry in data["coeffs"]
        }
        return cls(data["level"], data["gridDenominator"], Q(data["lead"]),
                   data["order"], coeffs)

    def __repr__(self):
        head = []
        for n in sorted(self.coeffs)[:4]:
            head.append(f"p^{self.exponent(n)}*({self.coeffs[n]!r})")
        body = " + ".join(head) if head else "0"
        return (f"NomeSeries(level={self.level}, D={self.D}, lead={self.lead}, "
                f"trunc={self.trunc}: {body}{' + ...' if len(self.coeffs) > 4 else ''})")
