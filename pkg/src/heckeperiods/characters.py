"""Primitive Dirichlet characters with exact cyclotomic values.

A character mod D is stored as a table of root-of-unity exponents: on units
h the value is zeta_R**e(h) where R is the character's order, elsewhere 0.
Construction goes through generators of the unit group (CRT over prime
powers); multiplicativity and the conductor are validated on every
constructor path.
"""

from __future__ import annotations

import math
from typing import Iterator, Optional, Sequence

from .cyclotomic import ExactNumber, euler_phi, factorize


class CharacterError(ValueError):
    pass


class DirichletCharacter:
    """A Dirichlet character mod D > 1 with values as exact roots of unity."""

    __slots__ = ("modulus", "order", "exponents", "conductor")

    def __init__(self, modulus: int, order: int, exponents: Sequence[Optional[int]]):
        """Character with chi(h) = zeta_order**exponents[h] (None off the units).

        The stored order is shrunk to the subgroup actually generated by the
        values, so equal characters always normalize identically.
        """
        if modulus < 2:
            raise CharacterError("modulus must exceed 1")
        if order < 1:
            raise CharacterError("order must be positive")
        if len(exponents) != modulus:
            raise CharacterError("exponent table must have one entry per residue")
        g = order
        for e in exponents:
            if e is not None:
                g = math.gcd(g, e % order)
        if g == 0:
            g = order
        reduced = order // g
        exps = tuple(None if e is None else (e % order) // g for e in exponents)
        object.__setattr__(self, "modulus", modulus)
        object.__setattr__(self, "order", max(reduced, 1))
        object.__setattr__(self, "exponents", exps)
        self._validate()
        object.__setattr__(self, "conductor", self._compute_conductor())

    def __setattr__(self, name, value):
        raise AttributeError("DirichletCharacter is immutable")

    def _validate(self) -> None:
        d = self.modulus
        exps = self.exponents
        if exps[1 % d] != 0:
            raise CharacterError("character must send 1 to 1")
        for h in range(d):
            if (math.gcd(h, d) > 1) != (exps[h] is None):
                raise CharacterError("support must be exactly the units")
        for a in range(1, d):
            if exps[a] is None:
                continue
            for b in range(a, d):
                if exps[b] is None:
                    continue
                if (exps[a] + exps[b]) % self.order != exps[a * b % d]:
                    raise CharacterError(f"multiplicativity fails at ({a},{b})")

    def _compute_conductor(self) -> int:
        d = self.modulus
        for f in divisors(d):
            if all(
                self.exponents[u] == 0
                for u in range(1, d)
                if u % f == 1 % f and math.gcd(u, d) == 1
            ):
                return f
        return d

    # -- values

    @property
    def is_primitive(self) -> bool:
        return self.conductor == self.modulus

    def is_trivial(self) -> bool:
        return self.order == 1

    def value_exponent(self, h: int) -> Optional[int]:
        """Exponent e with chi(h) = zeta_order**e, or None when chi(h) = 0."""
        return self.exponents[h % self.modulus]

    def value(self, h: int) -> ExactNumber:
        e = self.value_exponent(h)
        if e is None:
            return ExactNumber.zero(self.order)
        return ExactNumber.zeta(self.order, e)

    __call__ = value

    @property
    def values(self) -> tuple[ExactNumber, ...]:
        return tuple(self.value(h) for h in range(self.modulus))

    def sign_at_minus_one(self) -> int:
        e = self.exponents[self.modulus - 1]
        return 1 if e == 0 else -1

    def is_odd(self) -> bool:
        return self.sign_at_minus_one() == -1

    def is_even(self) -> bool:
        return not self.is_odd()

    def is_real(self) -> bool:
        return self.order <= 2

    def conjugate(self) -> "DirichletCharacter":
        return DirichletCharacter(
            self.modulus,
            self.order,
            [None if e is None else (-e) % self.order for e in self.exponents],
        )

    def __mul__(self, other: "DirichletCharacter") -> "DirichletCharacter":
        if not isinstance(other, DirichletCharacter):
            return NotImplemented
        if other.modulus != self.modulus:
            raise CharacterError("moduli differ")
        r = math.lcm(self.order, other.order)
        exps = [
            None
            if a is None
            else (a * (r // self.order) + b * (r // other.order)) % r
            for a, b in zip(self.exponents, other.exponents)
        ]
        return DirichletCharacter(self.modulus, r, exps)

    def __eq__(self, other):
        if not isinstance(other, DirichletCharacter):
            return NotImplemented
        return (
            self.modulus == other.modulus
            and self.order == other.order
            and self.exponents == other.exponents
        )

    def __hash__(self):
        return hash((self.modulus, self.order, self.exponents))

    def __repr__(self):
        kind = "primitive" if self.is_primitive else f"conductor {self.conductor}"
        return f"DirichletCharacter(mod {self.modulus}, order {self.order}, {kind})"


def divisors(n: int) -> list[int]:
    out = [1]
    for p, e in factorize(n).items():
        out = [d * p**k for d in out for k in range(e + 1)]
    return sorted(out)


# ---------------------------------------------------------------------------
# unit group structure


def _primitive_root_prime(p: int) -> int:
    order = p - 1
    prime_factors = list(factorize(order))
    for g in range(2, p):
        if all(pow(g, order // q, p) != 1 for q in prime_factors):
            return g
    raise ArithmeticError(f"no primitive root mod {p}")


def _unit_group(modulus: int) -> list[tuple[int, int]]:
    """Generators of (Z/modulus)* as (generator, order) pairs via CRT."""
    gens: list[tuple[int, int]] = []
    for p, e in factorize(modulus).items():
        q = p**e
        rest = modulus // q
        if p == 2:
            if e == 1:
                local = []
            elif e == 2:
                local = [(3, 2)]
            else:
                local = [(q - 1, 2), (5, 2 ** (e - 2))]
        else:
            g = _primitive_root_prime(p)
            if e > 1 and pow(g, p - 1, p * p) == 1:
                g += p
            local = [(g % q, euler_phi(q))]
        for g, s in local:
            if rest == 1:
                gens.append((g % modulus, s))
            else:
                inv = pow(q % rest, -1, rest)
                lifted = (g + q * ((1 - g) * inv % rest)) % modulus
                gens.append((lifted, s))
    return gens


def _unit_logs(modulus: int) -> tuple[list[tuple[int, int]], dict[int, tuple[int, ...]]]:
    """Exponent tuples for every unit with respect to the CRT generators."""
    gens = _unit_group(modulus)
    start = 1 % modulus
    logs: dict[int, tuple[int, ...]] = {start: tuple(0 for _ in gens)}
    frontier = [start]
    while frontier:
        u = frontier.pop()
        vec = logs[u]
        for i, (g, _s) in enumerate(gens):
            v = u * g % modulus
            if v not in logs:
                logs[v] = tuple(x + (1 if j == i else 0) for j, x in enumerate(vec))
                frontier.append(v)
    return gens, logs


def character_from_generator_images(modulus: int, images: Sequence[int]) -> DirichletCharacter:
    """Character sending the i-th CRT generator (order s_i) to zeta_{s_i}**images[i]."""
    gens, logs = _unit_logs(modulus)
    if len(images) != len(gens):
        raise CharacterError("one image per generator required")
    r0 = math.lcm(*(s for _, s in gens)) if gens else 1
    raw: list[Optional[int]] = [None] * modulus
    for u, vec in logs.items():
        e = 0
        for (_g, s), x, t in zip(gens, vec, images):
            e += x * t * (r0 // s)
        raw[u] = e % r0
    return DirichletCharacter(modulus, r0, raw)


def enumerate_characters(modulus: int) -> Iterator[DirichletCharacter]:
    """All Dirichlet characters mod modulus, trivial one included."""
    gens, _logs = _unit_logs(modulus)
    counts = [s for _, s in gens]
    total = math.prod(counts) if counts else 1
    for idx in range(total):
        images = []
        rem = idx
        for s in counts:
            images.append(rem % s)
            rem //= s
        yield character_from_generator_images(modulus, images)


def enumerate_primitive_characters(modulus: int, bound: int = 100) -> list[DirichletCharacter]:
    """Every primitive character mod modulus exactly once (empty when none exist)."""
    if modulus > bound:
        raise CharacterError(f"modulus {modulus} exceeds the enumeration bound {bound}")
    if modulus < 2:
        return []
    found = [chi for chi in enumerate_characters(modulus) if chi.is_primitive]
    found.sort(key=lambda chi: (chi.order, [e if e is not None else -1 for e in chi.exponents]))
    return found


# ---------------------------------------------------------------------------
# Kronecker characters


def _jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a/n) for odd n > 0."""
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def kronecker_symbol(a: int, n: int) -> int:
    """Kronecker symbol (a/n) for n >= 0."""
    if n == 0:
        return 1 if a in (1, -1) else 0
    e = 0
    while n % 2 == 0:
        n //= 2
        e += 1
    if e and a % 2 == 0:
        return 0
    two_part = 1
    if e % 2:
        two_part = 1 if a % 8 in (1, 7) else -1
    return two_part * _jacobi(a, n)


def kronecker_character(d: int) -> DirichletCharacter:
    """The quadratic character (d/.) as a primitive character mod |d|.

    Raises (naming the actual conductor) when the symbol is induced from a
    smaller modulus, i.e. when d is not a fundamental discriminant.
    """
    m = abs(d)
    if m < 2:
        raise CharacterError("need |d| > 1")
    raw: list[Optional[int]] = []
    for h in range(m):
        v = kronecker_symbol(d, h)
        raw.append(None if v == 0 else (0 if v == 1 else 1))
    for h in range(m):
        if (raw[h] is None) != (math.gcd(h, m) > 1):
            raise CharacterError(f"({d}/.) vanishes off the units of {m}; not a character mod {m}")
    chi = DirichletCharacter(m, 2, raw)
    if not chi.is_primitive:
        raise CharacterError(
            f"({d}/.) is induced from modulus {chi.conductor}; not primitive mod {m}"
        )
    return chi


# ---------------------------------------------------------------------------
# Gauss sums and the four-argument character


def gauss_sum(chi: DirichletCharacter) -> ExactNumber:
    """tau(chi) = sum_h chi(h) zeta_D**h, exactly."""
    d = chi.modulus
    level = math.lcm(chi.order, d)
    total = ExactNumber.zero(level)
    for h in range(d):
        e = chi.exponents[h]
        if e is None:
            continue
        total = total + ExactNumber.zeta(level, (e * (level // chi.order) + h * (level // d)) % level)
    return total


def chi_four_tuple(chi: DirichletCharacter, a: int, c: int, k: int, ell: int) -> ExactNumber:
    """chi(a,c,k,ell) = chi(k*b + ell*d) for any b, d with a*d - b*c = 1.

    Requires gcd(a,c) = 1 and k*a + ell*c = modulus; the value does not
    depend on the Bezout pair because shifting (b,d) by t*(a,c) moves the
    argument by t*modulus.
    """
    if min(a, c, k, ell) < 1:
        raise CharacterError("all four arguments must be positive")
    if math.gcd(a, c) != 1:
        raise CharacterError(f"gcd({a},{c}) != 1")
    if k * a + ell * c != chi.modulus:
        raise CharacterError(f"{k}*{a} + {ell}*{c} != {chi.modulus}")
    b, d = bezout_pair(a, c)
    return chi.value((k * b + ell * d) % chi.modulus)


def chi_four_tuple_exponent(chi: DirichletCharacter, a: int, c: int, k: int, ell: int) -> Optional[int]:
    """Exponent form of chi_four_tuple (None when the value is 0)."""
    if math.gcd(a, c) != 1 or k * a + ell * c != chi.modulus:
        raise CharacterError("invalid quadruple")
    b, d = bezout_pair(a, c)
    return chi.value_exponent((k * b + ell * d) % chi.modulus)


def bezout_pair(a: int, c: int) -> tuple[int, int]:
    """Some (b, d) with a*d - b*c = 1, for coprime a, c."""
    g, u, v = _extended_gcd(a, c)
    if g != 1:
        raise CharacterError(f"gcd({a},{c}) != 1")
    # a*u + c*v = 1  ->  d = u, b = -v
    return -v, u


def _extended_gcd(a: int, b: int) -> tuple[int, int, int]:
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    return old_r, old_s, old_t
