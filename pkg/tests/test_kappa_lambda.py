"""kappa/lambda polynomial ring and the lambda elimination homomorphism."""

import random
from fractions import Fraction

import pytest

from sqtaut.kappa_lambda import (
    chern_E_dual,
    kappa_class,
    kl_gens,
    kl_is_kappa_only,
    kl_one,
    kl_scalar,
    kl_zero,
    lambda_class,
    lambda_to_kappa,
)
from sqtaut.rings import InputError, bernoulli


# -- oracle: closed-form elementary symmetric functions in power sums -----
# e1 = p1, e2 = (p1^2 - p2)/2, e3 = (p1^3 - 3 p1 p2 + 2 p3)/6,
# e4 = (p1^4 - 6 p1^2 p2 + 3 p2^2 + 8 p1 p3 - 6 p4)/24.

def power_sum(genus, k):
    if k % 2 == 0:
        return kl_zero(genus)
    return (bernoulli(k + 1) / (k + 1)) * kappa_class(genus, k)


def oracle_lambda(genus, i):
    p1 = power_sum(genus, 1)
    p2 = power_sum(genus, 2)
    p3 = power_sum(genus, 3)
    p4 = power_sum(genus, 4)
    if i == 1:
        return p1
    if i == 2:
        return Fraction(1, 2) * (p1 ** 2 - p2)
    if i == 3:
        return Fraction(1, 6) * (p1 ** 3 - 3 * p1 * p2 + 2 * p3)
    if i == 4:
        return Fraction(1, 24) * (
            p1 ** 4 - 6 * p1 ** 2 * p2 + 3 * p2 ** 2 + 8 * p1 * p3 - 6 * p4
        )
    raise AssertionError


def test_lambda_images_match_closed_forms():
    for g in (4, 6, 9):
        for i in (1, 2, 3, 4):
            assert lambda_to_kappa(lambda_class(g, i)) == oracle_lambda(g, i)


def test_lambda_images_frozen_small_cases():
    # frozen from the closed-form oracle
    g = 6
    k1 = kappa_class(g, 1)
    k3 = kappa_class(g, 3)
    assert lambda_to_kappa(lambda_class(g, 1)) == Fraction(1, 12) * k1
    assert lambda_to_kappa(lambda_class(g, 2)) == Fraction(1, 288) * k1 ** 2
    assert lambda_to_kappa(lambda_class(g, 3)) == (
        Fraction(1, 10368) * k1 ** 3 - Fraction(1, 360) * k3
    )


def test_kappa_only_polynomials_unchanged():
    g = 5
    p = 3 * kappa_class(g, 2) ** 2 + kappa_class(g, 1) - kl_scalar(g, 7)
    assert lambda_to_kappa(p) == p
    assert kl_is_kappa_only(p)


def test_kappa_special_indices():
    g = 4
    assert kappa_class(g, -1) == 0
    assert kappa_class(g, -3) == 0
    assert kappa_class(g, 0) == kl_scalar(g, 2 * g - 2)
    assert kappa_class(g, 0, 2) == kl_scalar(g, (2 * g - 2) ** 2)
    assert lambda_class(g, 0) == kl_one(g)


def test_lambda_index_bounds():
    with pytest.raises(InputError):
        lambda_class(3, 4)
    with pytest.raises(InputError):
        kl_gens(1)


def random_kl(rng, g, with_lambda=True):
    p = kl_scalar(g, rng.randint(-3, 3))
    for _ in range(rng.randint(0, 4)):
        t = kl_scalar(g, Fraction(rng.randint(-4, 4), rng.randint(1, 3)))
        for _ in range(rng.randint(1, 3)):
            if with_lambda and rng.random() < 0.5:
                t = t * lambda_class(g, rng.randint(1, min(g, 4)))
            else:
                t = t * kappa_class(g, rng.randint(1, 4))
        p = p + t
    return p


def test_lambda_to_kappa_is_ring_homomorphism_fuzz():
    rng = random.Random(41)
    g = 5
    for _ in range(150):
        a = random_kl(rng, g)
        b = random_kl(rng, g)
        assert lambda_to_kappa(a * b) == lambda_to_kappa(a) * lambda_to_kappa(b)
        assert lambda_to_kappa(a + b) == lambda_to_kappa(a) + lambda_to_kappa(b)


def test_lambda_to_kappa_preserves_homogeneous_degree():
    g = 6
    for i in range(1, g + 1):
        img = lambda_to_kappa(lambda_class(g, i))
        assert img.homogeneous_degrees() in ([i], [])
    p = lambda_class(g, 2) * kappa_class(g, 3)
    assert lambda_to_kappa(p).homogeneous_degrees() == [5]


def test_even_chern_character_components_vanish():
    # Newton's identities the other way: p_n = e1 p_{n-1} - e2 p_{n-2} + ...
    # + (-1)^{n-1} n e_n; substituting the kappa-images of e must kill every
    # even-degree power sum.
    g = 9
    e = [kl_one(g)] + [lambda_to_kappa(lambda_class(g, i)) for i in range(1, g + 1)]
    p = [kl_zero(g)]
    for n in range(1, 9):
        acc = kl_zero(g)
        for i in range(1, n):
            term = e[i] * p[n - i]
            acc = acc + (term if i % 2 else -term)
        lead = Fraction(n) * e[n]
        acc = acc + (lead if n % 2 else -lead)
        p.append(acc)
    for n in (2, 4, 6, 8):
        assert p[n] == 0
    for n in (1, 3, 5, 7):
        assert p[n] == power_sum(g, n)


def test_chern_E_dual_shape():
    g = 4
    c = chern_E_dual(g, 10)
    expect = (
        kl_one(g)
        - lambda_class(g, 1)
        + lambda_class(g, 2)
        - lambda_class(g, 3)
        + lambda_class(g, 4)
    )
    assert c == expect
    assert chern_E_dual(g, 2) == kl_one(g) - lambda_class(g, 1) + lambda_class(g, 2)
    assert chern_E_dual(g, 0) == kl_one(g)


def test_genus_mismatch_rejected():
    with pytest.raises(InputError):
        _ = kappa_class(4, 1) + kappa_class(5, 1)
