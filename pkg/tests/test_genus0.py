"""Genus-zero chain spaces and intersection numbers."""

import itertools
import random
from fractions import Fraction
from math import comb

import pytest

from sqtaut.genus0 import (
    Composition,
    compositions,
    intersect_M02d,
    poincare_Q02,
    psi_integral_M0n,
)
from sqtaut.rings import InputError, poly_const, poly_gen
from sqtaut.genus0 import T_GEN


def tpoly(pairs):
    out = poly_const(T_GEN, 0)
    for exp, c in pairs:
        out = out + c * poly_gen(T_GEN, "t", exp)
    return out


# -- oracle: string equation for psi integrals ----------------------------
# removing a psi-free point subtracts 1 from one exponent in all ways.

def psi_by_string_equation(a):
    a = tuple(a)
    n = len(a)
    if sum(a) != n - 3:
        return Fraction(0)
    if n == 3:
        return Fraction(1)
    if all(v > 0 for v in a):  # off-dimension, unreachable when sum = n-3
        return Fraction(0)
    j = next(i for i in range(n) if a[i] == 0)
    rest = a[:j] + a[j + 1:]
    total = Fraction(0)
    for i in range(n - 1):
        if rest[i] > 0:
            total += psi_by_string_equation(rest[:i] + (rest[i] - 1,) + rest[i + 1:])
    return total


def test_composition_enumeration():
    assert [c.parts for c in compositions(3)] == [
        (1, 1, 1), (1, 2), (2, 1), (3,)]
    assert sum(1 for _ in compositions(8)) == 2 ** 7
    with pytest.raises(InputError):
        Composition((1, 0))


def test_poincare_closed_form():
    # (1 + t^2)^(d-1), checked for d <= 12
    for d in range(1, 13):
        expect = tpoly([(2 * j, comb(d - 1, j)) for j in range(d)])
        assert poincare_Q02(d) == expect


def test_poincare_examples():
    assert poincare_Q02(1) == poly_const(T_GEN, 1)
    assert poincare_Q02(4) == tpoly([(0, 1), (2, 3), (4, 3), (6, 1)])


def test_intersect_vanishing_off_dimension():
    assert intersect_M02d(3, 1, 0, (0, 0, 0)) == 0
    assert intersect_M02d(2, 0, 0, (0, 0)) == 0
    assert intersect_M02d(4, 2, 2, (0, 0, 0, 0)) == 0


def test_intersect_multinomial_closed_form():
    # all-zero light exponents: binom(d-1; x1, x2), checked for d <= 10
    for d in range(1, 11):
        for x1 in range(d):
            x2 = d - 1 - x1
            got = intersect_M02d(d, x1, x2, (0,) * d)
            assert got == comb(d - 1, x1)


def test_intersect_vanishes_with_light_psi():
    for d in range(2, 8):
        for j in range(d):
            y = [0] * d
            y[j] = 1
            for x1 in range(d - 1):
                x2 = d - 2 - x1
                assert intersect_M02d(d, x1, x2, y) == 0
    assert intersect_M02d(3, 0, 0, (1, 1, 0)) == 0


def test_intersect_light_point_symmetry():
    rng = random.Random(5)
    for _ in range(100):
        d = rng.randint(2, 7)
        y = [rng.randint(0, 1) for _ in range(d)]
        x1 = rng.randint(0, 2)
        x2 = d - 1 - x1 - sum(y)
        if x2 < 0:
            continue
        base = intersect_M02d(d, x1, x2, y)
        rng.shuffle(y)
        assert intersect_M02d(d, x1, x2, y) == base


def test_psi_integral_examples():
    assert psi_integral_M0n((0, 0, 0)) == 1
    assert psi_integral_M0n((1, 0, 0, 0)) == 1
    assert psi_integral_M0n((1, 1, 0, 0, 0)) == 2
    assert psi_integral_M0n((2, 0, 0, 0, 0)) == 1
    assert psi_integral_M0n((1, 0, 0)) == 0


def test_psi_integral_against_string_equation():
    for n in range(3, 9):
        for a in itertools.combinations_with_replacement(range(4), n):
            if sum(a) != n - 3:
                continue
            assert psi_integral_M0n(a) == psi_by_string_equation(a)


def test_psi_integral_input_checks():
    with pytest.raises(InputError):
        psi_integral_M0n((0, 0))
    with pytest.raises(InputError):
        psi_integral_M0n((-1, 0, 0, 1, 1))
    with pytest.raises(InputError):
        intersect_M02d(2, 0, 0, (0,))
