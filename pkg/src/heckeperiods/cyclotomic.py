"""Exact arithmetic in cyclotomic fields Q(zeta_M).

Numbers are stored as dense rational coordinate vectors on the power basis
1, zeta_M, ..., zeta_M^(phi(M)-1), reduced modulo the M-th cyclotomic
polynomial.  Binary operations lift both operands to the least common
cyclotomic level, so values born at different levels (rationals, character
values, Gauss sums, i) mix freely.

Everything here is immutable and pure; the per-level reduction tables are
filled once and only read afterwards.
"""

from __future__ import annotations

import cmath
import math
import re
from fractions import Fraction
from typing import Iterable, Optional, Sequence

BigRational = Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


# ---------------------------------------------------------------------------
# integer helpers


def euler_phi(n: int) -> int:
    if n < 1:
        raise ValueError("euler_phi needs a positive integer")
    result = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of n >= 1 by trial division (desk-scale inputs)."""
    if n < 1:
        raise ValueError("factorize needs a positive integer")
    factors: dict[int, int] = {}
    m = n
    p = 2
    while p * p <= m:
        while m % p == 0:
            factors[p] = factors.get(p, 0) + 1
            m //= p
        p += 1
    if m > 1:
        factors[m] = factors.get(m, 0) + 1
    return factors


def square_and_squarefree_part(n: int) -> tuple[int, int]:
    """Write n = s**2 * f with f squarefree; returns (s, f)."""
    s, f = 1, 1
    for p, e in factorize(n).items():
        s *= p ** (e // 2)
        if e % 2:
            f *= p
    return s, f


def is_squarefree(n: int) -> bool:
    return n >= 1 and square_and_squarefree_part(n)[0] == 1


def squarefree_divisors(n: int) -> list[int]:
    divs = [1]
    for p in factorize(n):
        divs += [d * p for d in divs]
    return sorted(divs)


# ---------------------------------------------------------------------------
# cyclotomic polynomials and reduction tables

_cyclo_cache: dict[int, tuple[int, ...]] = {1: (-1, 1)}
_power_cache: dict[int, list[tuple[int, ...]]] = {}
_root_cache: dict[int, list[complex]] = {}


def _int_poly_divide(num: Sequence[int], den: Sequence[int]) -> tuple[int, ...]:
    """Exact division of integer polynomials (ascending coefficients)."""
    num = list(num)
    dn = len(den) - 1
    out = [0] * (len(num) - dn)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + dn]
        if c % den[dn] != 0:
            raise ArithmeticError("non-exact cyclotomic division")
        q = c // den[dn]
        out[i] = q
        if q:
            for j, dj in enumerate(den):
                num[i + j] -= q * dj
    if any(num[:dn]):
        raise ArithmeticError("non-exact cyclotomic division")
    return tuple(out)


def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_m, ascending, computed by dividing x^m - 1
    by all lower-order cyclotomic polynomials."""
    if m < 1:
        raise ValueError("level must be positive")
    cached = _cyclo_cache.get(m)
    if cached is not None:
        return cached
    poly: Sequence[int] = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            poly = _int_poly_divide(poly, cyclotomic_polynomial(d))
    result = tuple(poly)
    _cyclo_cache[m] = result
    return result


def _reduced_power(level: int, e: int) -> tuple[int, ...]:
    """Coordinates of zeta_level**e on the power basis (integer vector)."""
    phi = euler_phi(level)
    table = _power_cache.get(level)
    if table is None:
        table = []
        for j in range(phi):
            row = [0] * phi
            row[j] = 1
            table.append(tuple(row))
        _power_cache[level] = table
    while len(table) <= e:
        prev = table[-1]
        shifted = [0] + list(prev[: phi - 1])
        top = prev[phi - 1]
        if top:
            cyclo = cyclotomic_polynomial(level)
            # x^phi = -(lower part of Phi) since Phi is monic
            for j in range(phi):
                shifted[j] -= top * cyclo[j]
        table.append(tuple(shifted))
    return table[e]


def _roots(level: int) -> list[complex]:
    roots = _root_cache.get(level)
    if roots is None:
        roots = [cmath.exp(2j * cmath.pi * j / level) for j in range(euler_phi(level))]
        _root_cache[level] = roots
    return roots


# ---------------------------------------------------------------------------
# field elements


class ExactNumber:
    """An element of Q(zeta_M), M = self.level.

    Coordinates are Fractions on the power basis after reduction mod Phi_M.
    Two numbers at different levels compare equal iff they agree after
    lifting to the least common level.
    """

    __slots__ = ("level", "coords")

    def __init__(self, level: int, coords: Iterable[Fraction]):
        coords = tuple(Fraction(c) for c in coords)
        if len(coords) != euler_phi(level):
            raise ValueError(
                f"need {euler_phi(level)} coordinates at level {level}, got {len(coords)}"
            )
        object.__setattr__(self, "level", level)
        object.__setattr__(self, "coords", coords)

    def __setattr__(self, name, value):
        raise AttributeError("ExactNumber is immutable")

    # -- constructors

    @classmethod
    def from_rational(cls, q, level: int = 1) -> "ExactNumber":
        coords = [Fraction(q)] + [_ZERO] * (euler_phi(level) - 1)
        return cls(level, coords)

    @classmethod
    def zeta(cls, level: int, k: int = 1) -> "ExactNumber":
        row = _reduced_power(level, k % level)
        return cls(level, [Fraction(c) for c in row])

    @classmethod
    def zero(cls, level: int = 1) -> "ExactNumber":
        return cls.from_rational(0, level)

    @classmethod
    def one(cls, level: int = 1) -> "ExactNumber":
        return cls.from_rational(1, level)

    # -- structure

    def is_zero(self) -> bool:
        return not any(self.coords)

    def is_rational(self) -> bool:
        return not any(self.coords[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("not a rational number")
        return self.coords[0]

    def lift_to(self, level: int) -> "ExactNumber":
        if level == self.level:
            return self
        if level % self.level != 0:
            raise ValueError(f"cannot lift level {self.level} into level {level}")
        step = level // self.level
        phi = euler_phi(level)
        out = [_ZERO] * phi
        for j, c in enumerate(self.coords):
            if c:
                row = _reduced_power(level, j * step)
                for t, r in enumerate(row):
                    if r:
                        out[t] += c * r
        return ExactNumber(level, out)

    def _common(self, other: "ExactNumber") -> tuple["ExactNumber", "ExactNumber"]:
        if self.level == other.level:
            return self, other
        lv = math.lcm(self.level, other.level)
        return self.lift_to(lv), other.lift_to(lv)

    # -- arithmetic

    @staticmethod
    def _coerce(value) -> "ExactNumber":
        if isinstance(value, ExactNumber):
            return value
        if isinstance(value, (int, Fraction)):
            return ExactNumber.from_rational(value)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._common(other)
        return ExactNumber(a.level, [x + y for x, y in zip(a.coords, b.coords)])

    __radd__ = __add__

    def __neg__(self):
        return ExactNumber(self.level, [-c for c in self.coords])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return ExactNumber(self.level, [c * q for c in self.coords])
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._common(other)
        if a.is_rational():
            return b * a.coords[0]
        if b.is_rational():
            return a * b.coords[0]
        phi = len(a.coords)
        conv = [_ZERO] * (2 * phi - 1)
        for i, ai in enumerate(a.coords):
            if ai:
                for j, bj in enumerate(b.coords):
                    if bj:
                        conv[i + j] += ai * bj
        out = conv[:phi]
        for e in range(phi, 2 * phi - 1):
            ce = conv[e]
            if ce:
                row = _reduced_power(a.level, e)
                for t, r in enumerate(row):
                    if r:
                        out[t] += ce * r
        return ExactNumber(a.level, out)

    __rmul__ = __mul__

    def inverse(self) -> "ExactNumber":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        if self.is_rational():
            return ExactNumber.from_rational(1 / self.coords[0], self.level)
        # extended Euclid against Phi_level in Q[x]
        cyclo = [Fraction(c) for c in cyclotomic_polynomial(self.level)]
        r0, r1 = cyclo, list(self.coords)
        s0, s1 = [_ZERO], [_ONE]
        while True:
            r1 = _strip(r1)
            if len(r1) == 1:
                break
            q, r = _poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        c = r1[0]
        phi = euler_phi(self.level)
        inv = [si / c for si in s1] + [_ZERO] * phi
        return ExactNumber(self.level, inv[:phi])

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = ExactNumber.one(self.level)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._common(other)
        return a.coords == b.coords

    def __ne__(self, other):
        eq = self.__eq__(other)
        return NotImplemented if eq is NotImplemented else not eq

    __hash__ = None  # mutable-free but not canonical across levels

    # -- output

    def numeric(self) -> complex:
        roots = _roots(self.level)
        return sum((float(c) * r for c, r in zip(self.coords, roots) if c), 0j)

    def conjugate(self) -> "ExactNumber":
        """Complex conjugation zeta -> zeta^(-1)."""
        out = [_ZERO] * len(self.coords)
        for j, c in enumerate(self.coords):
            if c:
                row = _reduced_power(self.level, (self.level - j) % self.level)
                for t, r in enumerate(row):
                    if r:
                        out[t] += c * r
        return ExactNumber(self.level, out)

    def to_json(self) -> dict:
        return {"level": self.level, "coords": [_fmt_rational(c) for c in self.coords]}

    @classmethod
    def from_json(cls, data: dict) -> "ExactNumber":
        return cls(data["level"], [Fraction(c) for c in data["coords"]])

    def __repr__(self):
        if self.is_rational():
            return f"ExactNumber({self.coords[0]})"
        return f"ExactNumber(level={self.level}, coords={[str(c) for c in self.coords]})"


def numeric_eval(x: ExactNumber) -> complex:
    return x.numeric()


def cyclotomic_embed(q, level: int) -> ExactNumber:
    """The rational q as an element of Q(zeta_level)."""
    return ExactNumber.from_rational(Fraction(q), level)


def root_of_unity(level: int, k: int) -> ExactNumber:
    """zeta_level**k, reduced mod the cyclotomic polynomial."""
    return ExactNumber.zeta(level, k)


def sqrt_integer(n: int) -> ExactNumber:
    """Exact square root of a squarefree positive integer, living at level 4n.

    Built from quadratic Gauss sums (sqrt2 = zeta8 + zeta8^-1; for odd prime
    p the Legendre-symbol sum gives sqrt(p) or i*sqrt(p) according to
    p mod 4).  The positive branch is fixed by floating evaluation rather
    than by sign theory, then confirmed by squaring.
    """
    if n < 1:
        raise ValueError("need a positive integer")
    if not is_squarefree(n):
        raise ValueError(f"{n} is not squarefree")
    level = 4 * n
    result = ExactNumber.one(level)
    for p in factorize(n):
        if p == 2:
            factor = ExactNumber.zeta(8, 1) + ExactNumber.zeta(8, 7)
        else:
            gauss = ExactNumber.zero(p if p > 1 else 1)
            for a in range(1, p):
                gauss = gauss + ExactNumber.zeta(p, a) * _legendre(a, p)
            if p % 4 == 3:
                # gauss sum is i*sqrt(p); divide out i
                gauss = gauss.lift_to(4 * p) * ExactNumber.zeta(4, 3)
            factor = gauss
        result = result * factor.lift_to(level)
    if result.numeric().real < 0:
        result = -result
    if result * result != ExactNumber.from_rational(n):
        raise ArithmeticError(f"square root construction failed for {n}")
    return result


def sqrt_positive_integer(n: int) -> ExactNumber:
    """sqrt(n) for any positive integer: square part comes out rationally."""
    s, f = square_and_squarefree_part(n)
    if f == 1:
        return ExactNumber.from_rational(s)
    return sqrt_integer(f) * s


def _legendre(a: int, p: int) -> int:
    r = pow(a % p, (p - 1) // 2, p)
    return r - p if r > 1 else r


# ---------------------------------------------------------------------------
# quadratic surd recognition


class QuadSurd:
    """A number a + b*sqrt(d) with rational a, b and squarefree d >= 1."""

    __slots__ = ("a", "b", "d")

    def __init__(self, a, b, d: int):
        a, b = Fraction(a), Fraction(b)
        if d < 1 or not is_squarefree(d):
            raise ValueError("radicand must be a squarefree positive integer")
        if b == 0:
            d = 1
        if d == 1:
            a, b = a + b, _ZERO
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "d", d)

    def __setattr__(self, name, value):
        raise AttributeError("QuadSurd is immutable")

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self.a, self.b, self.d) == (other.a, other.b, other.d)

    def __hash__(self):
        return hash((self.a, self.b, self.d))

    # -- field arithmetic in Q(sqrt d); rationals (d = 1) mix with anything

    @staticmethod
    def _coerce(value):
        if isinstance(value, QuadSurd):
            return value
        if isinstance(value, (int, Fraction)):
            return QuadSurd(value, 0, 1)
        return NotImplemented

    def _join(self, other: "QuadSurd") -> int:
        if self.d == 1:
            return other.d
        if other.d == 1 or other.d == self.d:
            return self.d
        raise ValueError(f"incompatible radicands {self.d} and {other.d}")

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def __bool__(self):
        return not self.is_zero()

    def conjugate(self) -> "QuadSurd":
        return QuadSurd(self.a, -self.b, self.d)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return QuadSurd(self.a + other.a, self.b + other.b, self._join(other))

    __radd__ = __add__

    def __neg__(self):
        return QuadSurd(-self.a, -self.b, self.d)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        d = self._join(other)
        return QuadSurd(
            self.a * other.a + self.b * other.b * d,
            self.a * other.b + self.b * other.a,
            d,
        )

    __rmul__ = __mul__

    def inverse(self) -> "QuadSurd":
        norm = self.a * self.a - self.b * self.b * self.d
        if norm == 0:
            raise ZeroDivisionError("inverse of zero surd")
        return QuadSurd(self.a / norm, -self.b / norm, self.d)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def to_exact(self) -> ExactNumber:
        value = ExactNumber.from_rational(self.a)
        if self.b:
            value = value + sqrt_integer(self.d) * self.b
        return value

    def numeric(self) -> float:
        return float(self.a) + float(self.b) * math.sqrt(self.d)

    def __str__(self):
        if self.b == 0:
            return _fmt_rational(self.a)
        root = f"sqrt({self.d})"
        bpart = root if self.b == 1 else (f"-{root}" if self.b == -1 else f"{_fmt_rational(self.b)}*{root}")
        if self.a == 0:
            return bpart
        sign = "+" if self.b > 0 else "-"
        babs = root if abs(self.b) == 1 else f"{_fmt_rational(abs(self.b))}*{root}"
        return f"{_fmt_rational(self.a)} {sign} {babs}"

    def __repr__(self):
        return f"QuadSurd({self.a}, {self.b}, {self.d})"

    @classmethod
    def parse(cls, text: str) -> "QuadSurd":
        return parse_quad_surd(text)


_SURD_TERM = re.compile(
    r"\s*(?P<sign>[+-])?\s*(?:(?P<coef>\d+(?:/\d+)?)\s*\*\s*)?"
    r"(?:sqrt\(\s*(?P<rad>\d+)\s*\)|(?P<plain>\d+(?:/\d+)?))\s*"
)


def parse_quad_surd(text: str) -> QuadSurd:
    """Parse "a + b*sqrt(d)" (either part optional) into a QuadSurd."""
    a = _ZERO
    b = _ZERO
    d = 1
    pos = 0
    seen = False
    while pos < len(text):
        m = _SURD_TERM.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse surd: {text!r}")
        sign = -1 if m.group("sign") == "-" else 1
        if m.group("rad") is not None:
            rad = int(m.group("rad"))
            coef = Fraction(m.group("coef")) if m.group("coef") else _ONE
            s, f = square_and_squarefree_part(rad)
            if f == 1:
                a += sign * coef * s
            else:
                if d != 1 and d != f:
                    raise ValueError(f"mixed radicands in {text!r}")
                d = f
                b += sign * coef * s
        else:
            a += sign * Fraction(m.group("plain"))
        pos = m.end()
        seen = True
    if not seen:
        raise ValueError(f"empty surd: {text!r}")
    return QuadSurd(a, b, d)


def recognize_surd(x: ExactNumber) -> Optional[QuadSurd]:
    """Write x as a + b*sqrt(d) if possible, searching d over squarefree
    divisors of the level; None when x is not a quadratic surd."""
    if x.is_rational():
        return QuadSurd(x.coords[0], 0, 1)
    for d in squarefree_divisors(x.level):
        if d == 1:
            continue
        root = sqrt_integer(d)
        level = math.lcm(x.level, root.level)
        xs = x.lift_to(level)
        rs = root.lift_to(level)
        pivot = next((j for j in range(1, len(rs.coords)) if rs.coords[j]), None)
        if pivot is None:
            continue
        b = xs.coords[pivot] / rs.coords[pivot]
        a = xs.coords[0] - b * rs.coords[0]
        if b and xs == ExactNumber.from_rational(a, level) + rs * b:
            return QuadSurd(a, b, d)
    return None


# ---------------------------------------------------------------------------
# polynomials over ExactNumber


class ExactPolynomial:
    """Univariate polynomial with ExactNumber coefficients.

    Internally ascending; the public `coefficients` view is degree-descending
    with a nonzero leading coefficient (empty for the zero polynomial).
    """

    __slots__ = ("_asc",)

    def __init__(self, ascending: Iterable):
        coeffs = [c if isinstance(c, ExactNumber) else ExactNumber.from_rational(c) for c in ascending]
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        object.__setattr__(self, "_asc", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("ExactPolynomial is immutable")

    @classmethod
    def zero(cls) -> "ExactPolynomial":
        return cls([])

    @classmethod
    def from_rational_coeffs(cls, ascending: Iterable, level: int = 1) -> "ExactPolynomial":
        return cls([ExactNumber.from_rational(c, level) for c in ascending])

    @classmethod
    def x_power(cls, k: int, coefficient=1) -> "ExactPolynomial":
        coeff = coefficient if isinstance(coefficient, ExactNumber) else ExactNumber.from_rational(coefficient)
        return cls([ExactNumber.zero()] * k + [coeff])

    # -- views

    @property
    def coefficients(self) -> tuple:
        return tuple(reversed(self._asc))

    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self._asc) - 1

    def is_zero(self) -> bool:
        return not self._asc

    def coefficient(self, k: int) -> ExactNumber:
        """Coefficient of x**k."""
        if 0 <= k < len(self._asc):
            return self._asc[k]
        return ExactNumber.zero()

    # -- arithmetic

    def __add__(self, other: "ExactPolynomial") -> "ExactPolynomial":
        if not isinstance(other, ExactPolynomial):
            return NotImplemented
        a, b = self._asc, other._asc
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return ExactPolynomial(out)

    def __neg__(self) -> "ExactPolynomial":
        return ExactPolynomial([-c for c in self._asc])

    def __sub__(self, other: "ExactPolynomial") -> "ExactPolynomial":
        if not isinstance(other, ExactPolynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, ExactNumber)):
            return self.scale(other)
        if not isinstance(other, ExactPolynomial):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return ExactPolynomial.zero()
        out = [ExactNumber.zero() for _ in range(len(self._asc) + len(other._asc) - 1)]
        for i, a in enumerate(self._asc):
            if a.is_zero():
                continue
            for j, b in enumerate(other._asc):
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return ExactPolynomial(out)

    __rmul__ = __mul__

    def scale(self, factor) -> "ExactPolynomial":
        return ExactPolynomial([c * factor for c in self._asc])

    def __eq__(self, other):
        if not isinstance(other, ExactPolynomial):
            return NotImplemented
        if len(self._asc) != len(other._asc):
            return False
        return all(a == b for a, b in zip(self._asc, other._asc))

    __hash__ = None

    def evaluate(self, x) -> ExactNumber:
        x = x if isinstance(x, ExactNumber) else ExactNumber.from_rational(x)
        result = ExactNumber.zero()
        for c in reversed(self._asc):
            result = result * x + c
        return result

    def compose_linear(self, alpha, beta) -> "ExactPolynomial":
        """p(alpha*x + beta), exactly (Horner over the polynomial ring)."""
        arg = ExactPolynomial([beta, alpha])
        result = ExactPolynomial.zero()
        for c in reversed(self._asc):
            result = result * arg + ExactPolynomial([c])
        return result

    def scale_argument(self, alpha) -> "ExactPolynomial":
        """p(alpha * x): coefficient of x**k picks up alpha**k."""
        out = []
        power = ExactNumber.one() if isinstance(alpha, ExactNumber) else Fraction(1)
        for c in self._asc:
            out.append(c * power)
            power = power * alpha
        return ExactPolynomial(out)

    def negate_argument(self) -> "ExactPolynomial":
        return ExactPolynomial([c if i % 2 == 0 else -c for i, c in enumerate(self._asc)])

    def reversed_scaled(self, w: int, c) -> "ExactPolynomial":
        """X**w * p(c/X) as a polynomial; needs deg(p) <= w."""
        if self.degree() > w:
            raise ValueError("degree exceeds the reversal weight")
        cn = c if isinstance(c, ExactNumber) else ExactNumber.from_rational(c)
        out = [ExactNumber.zero() for _ in range(w + 1)]
        power = ExactNumber.one()
        for j, pj in enumerate(self._asc):
            if not pj.is_zero():
                out[w - j] = pj * power
            power = power * cn
        return ExactPolynomial(out)

    def numeric(self, x: complex) -> complex:
        result = 0j
        for c in reversed(self._asc):
            result = result * x + c.numeric()
        return result

    def to_json(self) -> dict:
        return {"degree": self.degree(), "coefficients": [c.to_json() for c in self.coefficients]}

    def __repr__(self):
        if self.is_zero():
            return "ExactPolynomial(0)"
        return f"ExactPolynomial(degree={self.degree()})"


# ---------------------------------------------------------------------------
# rational polynomial helpers (shared by the Bernoulli and period modules)


def _strip(poly: list[Fraction]) -> list[Fraction]:
    while len(poly) > 1 and not poly[-1]:
        poly.pop()
    return poly


def _poly_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [_ZERO] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] -= c
    return out


def _poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [_ZERO] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _poly_divmod(num: list[Fraction], den: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    num = list(num)
    dn = len(den) - 1
    if len(num) - 1 < dn:
        return [_ZERO], num
    out = [_ZERO] * (len(num) - dn)
    for i in range(len(out) - 1, -1, -1):
        q = num[i + dn] / den[dn]
        out[i] = q
        if q:
            for j, dj in enumerate(den):
                num[i + j] -= q * dj
    return out, _strip(num[:dn] if dn else [_ZERO])


def _fmt_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"
