"""Symmetrized twisted period polynomials of the period-kernel cusp forms.

Two independent routes are implemented for the polynomial

    P_n(X) = r_chi(R_n)(X) + (-1)^(n-1) chi(-1) r_chi(R_n)(-X):

* ``closed_form_polynomial`` evaluates the closed form directly: a
  (2i)^(w+1)/tau(conj chi) prefactor, four epsilon-gated weighted-Bernoulli
  terms, and the finite quadruple sum G_n(X) + (-1)^(n-1)chi(-1)G_n(-X).

* ``case_sum_polynomial`` assembles the same polynomial from the six
  per-residue case contributions (cosets of Gamma_0(N) split by the signs
  of a, c and the translated row entries), weighted by conj(chi)(h)/tau.

The two must agree exactly on every valid context; that equality is the
module's central oracle.  Individual twisted periods are recovered from
polynomial coefficients when the parity (-1)^(m+n+1)chi(-1) = 1 admits them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .bernoulli import (
    bernoulli_number,
    bernoulli_shifted_coeffs,
    generalized_bernoulli_poly,
)
from .characters import (
    DirichletCharacter,
    bezout_pair,
    chi_four_tuple_exponent,
    gauss_sum,
)
from .cyclotomic import ExactNumber, ExactPolynomial, factorize

_ZERO = Fraction(0)


class ContextError(ValueError):
    pass


class ParityError(ValueError):
    """Raised when a period is not extractable at the requested parity."""


class EpsilonFlags(NamedTuple):
    """The three gates of the closed form: level one, coprime level, dividing level."""

    eps1: int
    eps2: int
    eps3: int

    @classmethod
    def for_level(cls, level: int, modulus: int) -> "EpsilonFlags":
        return cls(
            1 if level == 1 else 0,
            1 if math.gcd(level, modulus) == 1 else 0,
            1 if modulus % level == 0 else 0,
        )


class FareyQuadruple(NamedTuple):
    """Positive (a, c, k, ell) with gcd(a,c)=1, N|c and k*a + ell*c = D."""

    a: int
    c: int
    k: int
    ell: int


@dataclass(frozen=True)
class PeriodContext:
    """Parameters (N, w, n, chi) of one twisted period polynomial."""

    level: int
    w: int
    n: int
    chi: DirichletCharacter

    def __post_init__(self):
        if self.level < 1:
            raise ContextError("level must be positive")
        if self.w < 2 or self.w % 2:
            raise ContextError("w must be a positive even integer")
        if not 0 < self.n < self.w:
            raise ContextError(f"n must satisfy 0 < n < w, got n={self.n}, w={self.w}")
        if self.chi.modulus < 2:
            raise ContextError("character modulus must exceed 1")
        if not self.chi.is_primitive:
            raise ContextError(
                f"character must be primitive (conductor {self.chi.conductor} "
                f"!= modulus {self.chi.modulus})"
            )

    @property
    def modulus(self) -> int:
        return self.chi.modulus

    @property
    def n_tilde(self) -> int:
        return self.w - self.n

    @property
    def weight(self) -> int:
        return self.w + 2

    def epsilons(self) -> EpsilonFlags:
        return EpsilonFlags.for_level(self.level, self.modulus)

    def with_n(self, n: int) -> "PeriodContext":
        return PeriodContext(self.level, self.w, n, self.chi)

    def parity_holds(self, m: int) -> bool:
        return (-1) ** (m + self.n + 1) * self.chi.sign_at_minus_one() == 1


# ---------------------------------------------------------------------------
# quadruple enumeration and the finite sum


def enumerate_quadruples(level: int, modulus: int) -> list[FareyQuadruple]:
    """All quadruples, lexicographic by (c, a, k); finite since a, c < D."""
    if level < 1 or modulus < 2:
        raise ContextError("need level >= 1 and modulus > 1")
    out = []
    for c in range(level, modulus, level):
        for a in range(1, modulus - c + 1):
            if math.gcd(a, c) != 1:
                continue
            for k in range(1, (modulus - c) // a + 1):
                rem = modulus - k * a
                if rem % c == 0 and rem >= c:
                    out.append(FareyQuadruple(a, c, k, rem // c))
    return out


def _binomial_power(p: Fraction, q: Fraction, n: int) -> list[Fraction]:
    """Ascending coefficients of (p*x + q)**n."""
    return [math.comb(n, i) * p**i * q ** (n - i) for i in range(n + 1)]


def _conv(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [_ZERO] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _quadruple_buckets(ctx: PeriodContext) -> list[list[Fraction]]:
    """Rational polynomial attached to each conj(chi) value exponent in G_n."""
    chibar = ctx.chi.conjugate()
    d = ctx.modulus
    buckets: list[list[Fraction]] = [[] for _ in range(chibar.order)]
    for a, c, k, ell in enumerate_quadruples(ctx.level, d):
        e = chi_four_tuple_exponent(chibar, a, c, k, ell)
        if e is None:
            continue
        term = _conv(
            _binomial_power(Fraction(a), Fraction(ell, d), ctx.n),
            _binomial_power(Fraction(-c), Fraction(k, d), ctx.n_tilde),
        )
        bucket = buckets[e]
        if len(bucket) < len(term):
            bucket.extend([_ZERO] * (len(term) - len(bucket)))
        for i, t in enumerate(term):
            bucket[i] += t
    return buckets


def _assemble_buckets(buckets: list[list[Fraction]], order: int) -> ExactPolynomial:
    top = max((len(b) for b in buckets), default=0)
    coeffs = [ExactNumber.zero(order) for _ in range(top)]
    for e, bucket in enumerate(buckets):
        if not any(bucket):
            continue
        root = ExactNumber.zeta(order, e)
        for i, c in enumerate(bucket):
            if c:
                coeffs[i] = coeffs[i] + root * c
    return ExactPolynomial(coeffs)


def quadruple_sum_polynomial(ctx: PeriodContext) -> ExactPolynomial:
    """G_n(X): the finite sum over quadruples of
    conj(chi)(a,c,k,ell) * (a*X + ell/D)^n * (-c*X + k/D)^(w-n)."""
    return _assemble_buckets(_quadruple_buckets(ctx), ctx.chi.order)


# ---------------------------------------------------------------------------
# closed form


def _two_i_power(exponent: int) -> ExactNumber:
    return ExactNumber.zeta(4, exponent % 4) * (2**exponent)


_closed_form_cache: dict[tuple, ExactPolynomial] = {}


def _ctx_key(ctx: PeriodContext) -> tuple:
    chi = ctx.chi
    return (ctx.level, ctx.w, ctx.n, chi.modulus, chi.order, chi.exponents)


def closed_form_polynomial(ctx: PeriodContext) -> ExactPolynomial:
    """P_n(X) by the closed form (production path)."""
    key = _ctx_key(ctx)
    cached = _closed_form_cache.get(key)
    if cached is not None:
        return cached
    result = _closed_form_polynomial(ctx)
    _closed_form_cache[key] = result
    return result


def _closed_form_polynomial(ctx: PeriodContext) -> ExactPolynomial:
    w, n, nt = ctx.w, ctx.n, ctx.n_tilde
    d, level = ctx.modulus, ctx.level
    chi = ctx.chi
    chibar = chi.conjugate()
    eps = ctx.epsilons()

    total = ExactPolynomial.zero()

    if eps.eps1:
        poly = generalized_bernoulli_poly(nt + 1, chibar).scale_argument(d)
        total = total + poly.scale(Fraction(1, (-d) ** nt) * Fraction(1, nt + 1))

    poly = generalized_bernoulli_poly(n + 1, chibar).scale_argument(d)
    total = total - poly.scale(Fraction(1, d**n) * Fraction(1, n + 1))

    if eps.eps2:
        sign = chi.value(-level) * ((-1) ** (n - 1))
        poly = generalized_bernoulli_poly(nt + 1, chi).reversed_scaled(w, Fraction(-1, d * level))
        total = total + poly.scale(sign * (Fraction(level**nt * d**n) / (nt + 1)))

    if eps.eps3:
        sign = chi.value(-1)
        poly = generalized_bernoulli_poly(n + 1, chi).reversed_scaled(w, Fraction(-1, d))
        total = total + poly.scale(sign * (Fraction(d**nt) / (n + 1)))

    g = quadruple_sum_polynomial(ctx)
    gsign = (-1) ** (n - 1) * chi.sign_at_minus_one()
    total = total + g + g.negate_argument().scale(gsign)

    prefactor = _two_i_power(w + 1) * gauss_sum(chibar).inverse()
    return total.scale(prefactor)


# ---------------------------------------------------------------------------
# the six case contributions (per residue h)


def _prime_ratio_product(level: int, s: int, w: int) -> Fraction:
    out = Fraction(1)
    for p in factorize(level):
        out *= (1 - Fraction(1, p**s)) / (1 - Fraction(1, p ** (w + 2)))
    return out


def _case_rational(j: int, h: int, level: int, w: int, n: int, d: int) -> list[Fraction]:
    """Ascending coefficients of the case-j residue contribution divided by
    the common (2i)^(w+1) factor.  Gated cases return []."""
    nt = w - n
    h %= d
    if j == 1:
        if level != 1:
            return []
        coeffs = bernoulli_shifted_coeffs(nt + 1, Fraction(h, d))
        sign = Fraction((-1) ** n, nt + 1)
        return [sign * c for c in coeffs]
    if j == 2:
        coeffs = bernoulli_shifted_coeffs(n + 1, Fraction(h, d))
        return [-c / (n + 1) for c in coeffs]
    if j == 3:
        if math.gcd(level, d) != 1:
            return []
        hbar = pow(h, -1, d)
        nbar = pow(level % d, -1, d)
        alpha = Fraction((-nbar * hbar) % d, d)
        return _reversed_bernoulli(
            nt + 1, alpha, Fraction(-1, d * d * level), w,
            Fraction((-1) ** (n - 1) * level**nt * d**w, nt + 1),
        )
    if j == 4:
        if d % level != 0:
            return []
        hbar = pow(h, -1, d)
        beta = Fraction((-hbar) % d, d)
        return _reversed_bernoulli(
            n + 1, beta, Fraction(-1, d * d), w, Fraction(d**w, n + 1)
        )
    if j == 5:
        return _case_five(h, level, w, n, d)
    if j == 6:
        bw = bernoulli_number(w + 2)
        scalar = (
            Fraction((-1) ** n * (w + 2))
            / bw
            * bernoulli_number(n + 1)
            / (n + 1)
            * bernoulli_number(nt + 1)
            / (nt + 1)
        )
        if scalar == 0:
            return []
        out = [_ZERO] * (w + 1)
        out[0] = -scalar * Fraction(1, level ** (n + 1)) * _prime_ratio_product(level, nt + 1, w)
        out[w] = scalar * Fraction(d**w, level) * _prime_ratio_product(level, n + 1, w)
        return out
    raise ValueError(f"case index must be 1..6, got {j}")


def _reversed_bernoulli(k: int, shift: Fraction, c: Fraction, w: int, scalar: Fraction) -> list[Fraction]:
    """scalar * X^w * B_k(shift + c/X) as ascending coefficients (k <= w)."""
    shifted = bernoulli_shifted_coeffs(k, shift)  # B_k(shift + y), ascending in y
    out = [_ZERO] * (w + 1)
    power = Fraction(1)
    for i, coeff in enumerate(shifted):
        out[w - i] = scalar * coeff * power
        power *= c
    return out


def _case_five(h: int, level: int, w: int, n: int, d: int) -> list[Fraction]:
    nt = w - n
    out = [_ZERO] * (w + 1)
    any_term = False
    for a, c, k, ell in enumerate_quadruples(level, d):
        b0, d0 = bezout_pair(a, c)
        e = (k * b0 + ell * d0) % d
        # sign class a,c > 0 pairs the residue -e; class c < 0 pairs +e,
        # and in each class exactly one matrix realizes the residue
        if (-e) % d == h % d:
            term = _conv(
                _binomial_power(Fraction(a), Fraction(-ell, d), n),
                _binomial_power(Fraction(c), Fraction(k, d), nt),
            )
            for i, t in enumerate(term):
                out[i] -= t
            any_term = True
        if e % d == h % d:
            term = _conv(
                _binomial_power(Fraction(a), Fraction(ell, d), n),
                _binomial_power(Fraction(-c), Fraction(k, d), nt),
            )
            for i, t in enumerate(term):
                out[i] += t
            any_term = True
    return out if any_term else []


def case_contribution(j: int, h: int, ctx: PeriodContext) -> ExactPolynomial:
    """The case-j part of the symmetrized residue-twist polynomial at h.

    Cases are gated by the context (1 needs N=1, 3 needs gcd(N,D)=1,
    4 needs N|D) and return the zero polynomial when inapplicable; case 6
    does not depend on h.
    """
    if math.gcd(h, ctx.modulus) != 1:
        raise ContextError(f"residue {h} is not coprime to {ctx.modulus}")
    coeffs = _case_rational(j, h, ctx.level, ctx.w, ctx.n, ctx.modulus)
    if not any(coeffs):
        return ExactPolynomial.zero()
    factor = _two_i_power(ctx.w + 1)
    return ExactPolynomial([factor * c if c else ExactNumber.zero(4) for c in coeffs])


def case_sum_polynomial(ctx: PeriodContext) -> ExactPolynomial:
    """P_n(X) assembled from the six case contributions over all residues.

    This is the independent oracle: it must equal closed_form_polynomial
    exactly on every valid context.
    """
    d = ctx.modulus
    chibar = ctx.chi.conjugate()
    buckets: list[list[Fraction]] = [[] for _ in range(chibar.order)]
    for h in range(1, d):
        e = chibar.value_exponent(h)
        if e is None:
            continue
        for j in range(1, 7):
            part = _case_rational(j, h, ctx.level, ctx.w, ctx.n, d)
            if not part:
                continue
            bucket = buckets[e]
            if len(bucket) < len(part):
                bucket.extend([_ZERO] * (len(part) - len(bucket)))
            for i, c in enumerate(part):
                bucket[i] += c
    assembled = _assemble_buckets(buckets, chibar.order)
    prefactor = _two_i_power(ctx.w + 1) * gauss_sum(chibar).inverse()
    return assembled.scale(prefactor)


# ---------------------------------------------------------------------------
# period extraction


def twisted_period(ctx: PeriodContext, m: int) -> ExactNumber:
    """r_{m,chi}(R_n), extracted from the closed-form polynomial.

    Only the parity class (-1)^(m+n+1)chi(-1) = 1 survives symmetrization;
    anything else raises ParityError.
    """
    if not 0 <= m <= ctx.w:
        raise ContextError(f"m must lie in 0..{ctx.w}")
    if not ctx.parity_holds(m):
        raise ParityError(
            f"period m={m} not extractable: symmetrization annihilates parity "
            f"(-1)^(m+n+1)chi(-1) = -1"
        )
    poly = closed_form_polynomial(ctx)
    coeff = poly.coefficient(ctx.w - m)
    denom = Fraction(2 * (-1) ** m * math.comb(ctx.w, m))
    return coeff * (1 / denom)


def residue_period(ctx: PeriodContext, m: int, h: int) -> ExactNumber:
    """rho(m, n, h): the symmetrized residue-twist period, read off the
    coefficient of X^(w-m) in the sum of all six case contributions."""
    if not 0 <= m <= ctx.w:
        raise ContextError(f"m must lie in 0..{ctx.w}")
    coeff = residue_case_sum(ctx, h).coefficient(ctx.w - m)
    return coeff * (1 / Fraction((-1) ** m * math.comb(ctx.w, m)))


def residue_case_sum(ctx: PeriodContext, h: int) -> ExactPolynomial:
    """Sum of all six case contributions at residue h (shared by tests)."""
    total = ExactPolynomial.zero()
    for j in range(1, 7):
        total = total + case_contribution(j, h, ctx)
    return total
