"""Floating-point reproduction of the level-one numeric checks.

Everything here is double precision with conservative truncation: the
completed L-values of the discriminant form via incomplete-gamma sums, its
Petersson norm via the zeta-ratio formula, and twisted periods as path
integrals split at the cusp height.  These are sanity anchors for the
exact machinery, not high-precision evaluators.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache

from .characters import DirichletCharacter, gauss_sum
from .cyclotomic import numeric_eval
from .traces import TraceQuery, trace_closed_form


@dataclass(frozen=True)
class QExpansion:
    """Integer Fourier coefficients a(1..M) of a normalized form."""

    coefficients: tuple[int, ...]
    weight: int
    level: int

    def __post_init__(self):
        if self.coefficients and self.coefficients[0] != 1:
            raise ValueError("normalized forms start with a(1) = 1")

    def a(self, n: int) -> int:
        return self.coefficients[n - 1]

    def truncation(self) -> int:
        return len(self.coefficients)


# ---------------------------------------------------------------------------
# tau coefficients via the eta product


def _pentagonal_series(m: int) -> list[int]:
    """Coefficients of prod (1 - q^n) up to q^(m-1)."""
    out = [0] * m
    out[0] = 1
    k = 1
    while True:
        g1 = k * (3 * k - 1) // 2
        g2 = k * (3 * k + 1) // 2
        if g1 >= m and g2 >= m:
            break
        sign = -1 if k % 2 else 1
        if g1 < m:
            out[g1] = sign
        if g2 < m:
            out[g2] = sign
        k += 1
    return out


def _poly_mul_trunc(a: list[int], b: list[int], m: int) -> list[int]:
    """Truncated integer-series product by Kronecker substitution: pack into
    one big integer per operand, multiply once, unpack balanced digits."""
    ca = max(1, max(abs(x) for x in a))
    cb = max(1, max(abs(x) for x in b))
    bound = min(len(a), len(b)) * ca * cb
    bits = bound.bit_length() + 2
    packed = _pack(a, bits) * _pack(b, bits)
    return _unpack(packed, bits, m)


def _pack(coeffs: list[int], bits: int) -> int:
    total = 0
    for c in reversed(coeffs):
        total = (total << bits) + c
    return total


def _unpack(value: int, bits: int, m: int) -> list[int]:
    mask = (1 << bits) - 1
    half = 1 << (bits - 1)
    out = []
    for _ in range(m):
        d = value & mask
        if d >= half:
            d -= 1 << bits
        out.append(d)
        value = (value - d) >> bits
    return out


_tau_cache: list[int] = []


def tau_coefficients(m: int) -> QExpansion:
    """tau(1..m), exact, from the 24th power of the pentagonal series."""
    if m > 10**6:
        raise ValueError("truncation capped at 10^6")
    global _tau_cache
    if len(_tau_cache) < m:
        e1 = _pentagonal_series(m)
        e2 = _poly_mul_trunc(e1, e1, m)
        e4 = _poly_mul_trunc(e2, e2, m)
        e8 = _poly_mul_trunc(e4, e4, m)
        e16 = _poly_mul_trunc(e8, e8, m)
        _tau_cache = _poly_mul_trunc(e16, e8, m)
    return QExpansion(tuple(_tau_cache[:m]), weight=12, level=1)


# ---------------------------------------------------------------------------
# completed L-values of the discriminant form


def incomplete_gamma_integer(k: int, x: float) -> float:
    """Gamma(k, x) for integer k >= 1 as the finite exponential sum."""
    if k < 1:
        raise ValueError("need k >= 1")
    acc = 0.0
    term = 1.0
    for j in range(k):
        if j:
            term *= x / j
        acc += term
    return math.factorial(k - 1) * math.exp(-x) * acc


@lru_cache(maxsize=None)
def lambda_delta(s: int, truncation: int = 120) -> float:
    """Completed L-value of the discriminant form at integer s in 1..11."""
    if not 1 <= s <= 11:
        raise ValueError("s must lie in 1..11")
    tau = tau_coefficients(truncation)
    total = 0.0
    for n in range(1, truncation + 1):
        x = 2 * math.pi * n
        term = tau.a(n) * (
            incomplete_gamma_integer(s, x) / x**s
            + incomplete_gamma_integer(12 - s, x) / x ** (12 - s)
        )
        total += term
        if abs(term) < 1e-18 and n > 8:
            break
    return total


@lru_cache(maxsize=None)
def zeta_value(s: int, terms: int = 100000) -> float:
    """Zeta by direct summation plus the integral-plus-half tail correction."""
    if s < 2:
        raise ValueError("need s >= 2")
    total = 0.0
    n = 0
    for n in range(1, terms + 1):
        term = 1.0 / float(n) ** s
        total += term
        if term < 1e-18:
            return total
    # sum_{k > n} k^-s ~ n^(1-s)/(s-1) + n^-s/2 (Euler-Maclaurin)
    total += float(n) ** (1 - s) / (s - 1) + 0.5 / float(n) ** s
    return total


@lru_cache(maxsize=None)
def petersson_delta_inverse(truncation: int = 10**4) -> float:
    """1 / ||Delta||^2 by inverting the zeta-ratio identity for the
    weighted sum of squared tau values."""
    if truncation < 100:
        raise ValueError("need at least 100 terms")
    tau = tau_coefficients(truncation)
    weighted = 0.0
    for n in range(1, truncation + 1):
        weighted += float(tau.a(n)) ** 2 / float(n) ** 20
    constant = (
        2.0 / 245.0 * 4.0**20 * math.pi**29 / math.factorial(20)
        * zeta_value(9) / zeta_value(18)
    )
    return constant / weighted


# ---------------------------------------------------------------------------
# twisted periods as path integrals


@lru_cache(maxsize=None)
def numeric_twisted_period(m: int, h: int, d: int, truncation: int = 300) -> complex:
    """r_{m, h/d} of the discriminant form: the path integral split at
    height 1/d, the lower piece mapped back up through the cusp matrix."""
    if math.gcd(h, d) != 1:
        raise ValueError(f"residue {h} not coprime to {d}")
    if not 0 <= m <= 10:
        raise ValueError("m must lie in 0..10")
    tau = tau_coefficients(truncation)
    y0 = 1.0 / d
    upper = 0j
    lower = 0j
    s_inv = pow(h, -1, d)
    for n in range(1, truncation + 1):
        x = 2 * math.pi * n
        up = (
            tau.a(n)
            * cmath.exp(2j * math.pi * n * h / d)
            * incomplete_gamma_integer(m + 1, x * y0)
            / x ** (m + 1)
        )
        low = (
            tau.a(n)
            * cmath.exp(-2j * math.pi * n * s_inv / d)
            * incomplete_gamma_integer(11 - m, x * y0)
            / x ** (11 - m)
        )
        upper += up
        lower += low
        if abs(up) + abs(low) < 1e-20 and n > 8:
            break
    return 1j ** (m + 1) * upper + (-1) ** (m + 1) * 1j ** (11 - m) * float(d) ** (10 - 2 * m) * lower


@lru_cache(maxsize=None)
def assembled_twisted_lambda(m: int, chi: DirichletCharacter, truncation: int = 300) -> complex:
    """Lambda(Delta, chi, m+1) numerically: (-D i)^(m+1) / tau(conj chi)
    times the conj(chi)-weighted sum of residue periods."""
    d = chi.modulus
    chibar = chi.conjugate()
    total = 0j
    for h in range(1, d):
        if math.gcd(h, d) != 1:
            continue
        total += numeric_eval(chibar.value(h)) * numeric_twisted_period(m, h, d, truncation)
    total /= numeric_eval(gauss_sum(chibar))
    return (-d * 1j) ** (m + 1) * total


# ---------------------------------------------------------------------------
# end-to-end check against the exact trace


@dataclass(frozen=True)
class NumericCheck:
    expected: complex
    computed: complex
    abs_err: float
    rel_err: float
    passed: bool

    def to_json(self) -> dict:
        def fmt(z: complex):
            return z.real if abs(z.imag) < 1e-9 * max(1.0, abs(z.real)) else [z.real, z.imag]

        return {
            "expected": fmt(self.expected),
            "computed": fmt(self.computed),
            "abs_err": self.abs_err,
            "rel_err": self.rel_err,
            "pass": self.passed,
        }


def verify_trace_numeric(
    query: TraceQuery, truncation: int = 300, tolerance: float = 1e-5
) -> NumericCheck:
    """Compare the exact trace (evaluated as a float) against the numeric
    product Lambda(Delta, chi, m+1) * Lambda(Delta, n+1) / ||Delta||^2.

    Only the one-dimensional level-one case is supported (f = Delta).
    """
    ctx = query.ctx
    if ctx.level != 1 or ctx.w != 10:
        raise ValueError("numeric verification covers level 1, weight 12 only")
    exact = numeric_eval(trace_closed_form(query))
    numeric = (
        assembled_twisted_lambda(query.m, ctx.chi, truncation)
        * lambda_delta(ctx.n + 1)
        * petersson_delta_inverse()
    )
    abs_err = abs(exact - numeric)
    scale = max(abs(exact), abs(numeric), 1.0)
    rel_err = abs_err / scale
    return NumericCheck(exact, numeric, abs_err, rel_err, rel_err < tolerance)
