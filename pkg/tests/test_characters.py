"""Dirichlet characters: construction, Gauss sums, the four-argument value."""

import math
import random

import pytest

from heckeperiods.characters import (
    CharacterError,
    DirichletCharacter,
    bezout_pair,
    chi_four_tuple,
    enumerate_characters,
    enumerate_primitive_characters,
    gauss_sum,
    kronecker_character,
    kronecker_symbol,
)
from heckeperiods.cyclotomic import ExactNumber


def test_kronecker_minus3(chi3):
    assert chi3.modulus == 3
    assert chi3.value(1) == ExactNumber.one()
    assert chi3.value(2) == ExactNumber.from_rational(-1)
    assert chi3.is_odd()
    assert chi3.is_primitive


def test_kronecker_5(chi5):
    assert chi5.value(2) == ExactNumber.from_rational(-1)
    assert chi5.value(4) == ExactNumber.one()
    assert chi5.is_even()


def test_kronecker_8():
    chi = kronecker_character(8)
    assert chi.is_even()
    values = {h: chi.value(h) for h in (3, 5, 7)}
    assert values[3] == ExactNumber.from_rational(-1)
    assert values[5] == ExactNumber.from_rational(-1)
    assert values[7] == ExactNumber.one()


def test_kronecker_parity_matches_sign():
    for d in (-3, -4, -7, 5, 8, 12, 13, -8, 17):
        chi = kronecker_character(d)
        assert chi.sign_at_minus_one() == (1 if d > 0 else -1)


def test_kronecker_rejects_imprimitive():
    with pytest.raises(CharacterError, match="modulus 1"):
        kronecker_character(9)
    with pytest.raises(CharacterError, match="modulus 5"):
        kronecker_character(45)  # 45 = 9*5, symbol induced from (5/.)


def test_enumerate_counts():
    assert len(enumerate_primitive_characters(3)) == 1
    only_mod4 = enumerate_primitive_characters(4)
    assert len(only_mod4) == 1 and only_mod4[0].is_odd()
    prim5 = enumerate_primitive_characters(5)
    assert sorted(c.order for c in prim5) == [2, 4, 4]
    assert len(enumerate_primitive_characters(2)) == 0
    assert sorted(c.order for c in enumerate_primitive_characters(7)) == [2, 3, 3, 6, 6]
    assert sorted(c.order for c in enumerate_primitive_characters(8)) == [2, 2]
    assert sorted(c.order for c in enumerate_primitive_characters(12)) == [2]


def test_enumerate_each_exactly_once():
    for d in (5, 7, 8, 9, 12, 15, 16, 24):
        chars = list(enumerate_characters(d))
        assert len(chars) == len(set(chars))
        from heckeperiods.cyclotomic import euler_phi

        assert len(chars) == euler_phi(d)


def test_brute_force_character_tables_mod5():
    # the four characters mod 5 are powers of one injective quartic character
    prim = enumerate_primitive_characters(5)
    quartic = next(c for c in prim if c.order == 4)
    z = ExactNumber.zeta(4, 1)
    table = {h: quartic.value(h) for h in range(5)}
    g = next(h for h in (2, 3) if table[h] == z or table[h] == z**3)
    # complete multiplicativity against the explicit cyclic structure
    for a in range(1, 5):
        for b in range(1, 5):
            assert quartic.value(a * b) == quartic.value(a) * quartic.value(b)
    assert g in (2, 3)


def test_multiplicativity_validated():
    # a table breaking chi(ab) = chi(a)chi(b) must be rejected
    with pytest.raises(CharacterError):
        DirichletCharacter(5, 4, [None, 0, 1, 1, 2])


def test_nontrivial_sum_vanishes():
    for d in range(3, 20):
        for chi in enumerate_characters(d):
            if chi.is_trivial():
                continue
            total = ExactNumber.zero(chi.order)
            for h in range(d):
                e = chi.exponents[h]
                if e is not None:
                    total = total + ExactNumber.zeta(chi.order, e)
            assert total.is_zero(), (d, chi)


def test_gauss_sum_mod3(chi3):
    tau = gauss_sum(chi3)
    assert tau == ExactNumber.zeta(3, 1) - ExactNumber.zeta(3, 2)
    assert tau * tau == ExactNumber.from_rational(-3)


def test_gauss_sum_classical_identity_all_d_up_to_40():
    for d in range(2, 41):
        for chi in enumerate_primitive_characters(d):
            lhs = gauss_sum(chi) * gauss_sum(chi.conjugate())
            assert lhs == ExactNumber.from_rational(chi.sign_at_minus_one() * d), d


def test_four_tuple_paper_values(chi3):
    # contributing tuples at modulus 3 carry values -1, 1, 1, -1
    assert chi_four_tuple(chi3, 1, 1, 1, 2) == ExactNumber.from_rational(-1)
    assert chi_four_tuple(chi3, 1, 1, 2, 1) == ExactNumber.one()
    assert chi_four_tuple(chi3, 1, 2, 1, 1) == ExactNumber.one()
    assert chi_four_tuple(chi3, 2, 1, 1, 1) == ExactNumber.from_rational(-1)


def test_four_tuple_validation(chi3):
    with pytest.raises(CharacterError):
        chi_four_tuple(chi3, 2, 2, 1, 1)  # gcd > 1
    with pytest.raises(CharacterError):
        chi_four_tuple(chi3, 1, 1, 1, 1)  # k*a + ell*c != 3


def test_four_tuple_bezout_invariance():
    rng = random.Random(2024)
    characters = []
    for d in (3, 5, 7, 8, 12):
        characters.extend(enumerate_primitive_characters(d))
    checked = 0
    while checked < 1000:
        chi = rng.choice(characters)
        d = chi.modulus
        a = rng.randint(1, d - 1)
        c = rng.randint(1, d - 1)
        if math.gcd(a, c) != 1:
            continue
        # random split of d as k*a + ell*c if one exists
        ks = [k for k in range(1, d) if (d - k * a) > 0 and (d - k * a) % c == 0]
        if not ks:
            continue
        k = rng.choice(ks)
        ell = (d - k * a) // c
        b0, d0 = bezout_pair(a, c)
        reference = chi.value((k * b0 + ell * d0) % d)
        t = rng.randint(-50, 50)
        shifted = chi.value((k * (b0 + t * a) + ell * (d0 + t * c)) % d)
        assert shifted == reference
        assert chi_four_tuple(chi, a, c, k, ell) == reference
        checked += 1


def test_kronecker_symbol_values():
    assert kronecker_symbol(-3, 2) == -1
    assert kronecker_symbol(5, 4) == 1
    assert kronecker_symbol(12, 35) == kronecker_symbol(12, 5) * kronecker_symbol(12, 7)
    assert kronecker_symbol(7, 0) == 0
    assert kronecker_symbol(1, 0) == 1


def test_conjugate_and_product():
    prim = enumerate_primitive_characters(5)
    quartic = next(c for c in prim if c.order == 4)
    assert quartic.conjugate().conjugate() == quartic
    square = quartic * quartic
    assert square.order == 2
    trivialized = square * square
    assert trivialized.is_trivial()
