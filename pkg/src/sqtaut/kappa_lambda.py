"""Polynomials in kappa and lambda classes at a fixed genus.

Generators: kappa_a (degree a, a >= 1) and lambda_i (degree i, 1 <= i <= g)
for a genus g >= 2 surface.  kappa_0 is the scalar 2g-2 and kappa with a
negative index is zero; both are folded in at construction so polynomial
keys only ever mention positive indices.

`lambda_to_kappa` eliminates every lambda generator using the fact that the
Chern character of the rank-g Hodge-type bundle is supported in odd
degrees, where

    ch_{2l-1} = B_{2l} / (2l)! * kappa_{2l-1}      (l >= 1),

together with Newton's identities converting power sums p_k = k! * ch_k to
elementary symmetric functions e_n = lambda_n:

    e_n = (1/n) * sum_{i=1}^{n} (-1)^{i-1} e_{n-i} p_i.

The conversion table is a per-genus ring homomorphism, computed once and
cached; concurrent first calls may duplicate work but agree on the value,
so the cache is safe without locks.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .rings import (
    GeneratorSet,
    GradedPoly,
    InputError,
    bernoulli,
    poly_const,
    poly_mul,
)

_KAPPA = "kappa_"
_LAMBDA = "lambda_"


@dataclass(frozen=True)
class KLGens(GeneratorSet):
    """Generator set for genus-g kappa/lambda polynomials.

    Names are pattern-based ("kappa_3", "lambda_2"), so no upper bound on
    kappa indices has to be fixed up front; validity and degree are read
    off the name.
    """

    genus: int

    def __post_init__(self) -> None:
        if self.genus < 2:
            raise InputError("genus must be >= 2")

    def _parse(self, name: str):
        if name.startswith(_KAPPA):
            kind, idx = 0, name[len(_KAPPA):]
        elif name.startswith(_LAMBDA):
            kind, idx = 1, name[len(_LAMBDA):]
        else:
            raise InputError(f"unknown generator {name!r}")
        if not idx.isdigit():
            raise InputError(f"unknown generator {name!r}")
        i = int(idx)
        if i < 1:
            raise InputError(f"generator index must be >= 1 in {name!r}")
        if kind == 1 and i > self.genus:
            raise InputError(
                f"lambda index {i} exceeds genus {self.genus}"
            )
        return kind, i

    def degree_of(self, name: str) -> int:
        return self._parse(name)[1]

    def sort_key(self, name: str):
        return self._parse(name)


# A KLPoly is a GradedPoly over KLGens; the genus travels with the
# generator set, so ordinary polynomial arithmetic enforces genus equality.
KLPoly = GradedPoly


def genus_of(p: KLPoly) -> int:
    gens = p.gens
    if not isinstance(gens, KLGens):
        raise InputError("not a kappa/lambda polynomial")
    return gens.genus


def kl_gens(genus: int) -> KLGens:
    return KLGens(genus)


def kl_zero(genus: int) -> KLPoly:
    return poly_const(kl_gens(genus), 0)


def kl_one(genus: int) -> KLPoly:
    return poly_const(kl_gens(genus), 1)


def kl_scalar(genus: int, value) -> KLPoly:
    return poly_const(kl_gens(genus), value)


def kappa_class(genus: int, index: int, exp: int = 1) -> KLPoly:
    """kappa_index^exp; index 0 is the scalar 2g-2, negative index is 0."""
    gens = kl_gens(genus)
    if exp < 0:
        raise InputError("negative exponent")
    if exp == 0:
        return kl_one(genus)
    if index < 0:
        return kl_zero(genus)
    if index == 0:
        return poly_const(gens, Fraction(2 * genus - 2) ** exp)
    return GradedPoly(gens, {((f"{_KAPPA}{index}", exp),): Fraction(1)})


def lambda_class(genus: int, index: int, exp: int = 1) -> KLPoly:
    """lambda_index^exp; lambda_0 is 1.  Index must lie in 0..genus."""
    gens = kl_gens(genus)
    if exp < 0:
        raise InputError("negative exponent")
    if not 0 <= index <= genus:
        raise InputError(f"lambda index {index} out of range for genus {genus}")
    if exp == 0 or index == 0:
        return kl_one(genus)
    return GradedPoly(gens, {((f"{_LAMBDA}{index}", exp),): Fraction(1)})


def _split_name(name: str):
    if name.startswith(_KAPPA):
        return "kappa", int(name[len(_KAPPA):])
    return "lambda", int(name[len(_LAMBDA):])


@lru_cache(maxsize=None)
def _lambda_table(genus: int) -> tuple:
    """(image of lambda_1, ..., image of lambda_g) as kappa-polynomials."""
    # power sums p_k = k! * ch_k; even k >= 2 vanish, odd k give kappa_k
    p = [kl_zero(genus)]  # p[0] unused
    for k in range(1, genus + 1):
        if k % 2:
            coeff = bernoulli(k + 1) / (k + 1)
            p.append(coeff * kappa_class(genus, k))
        else:
            p.append(kl_zero(genus))
    e = [kl_one(genus)]
    for n in range(1, genus + 1):
        acc = kl_zero(genus)
        for i in range(1, n + 1):
            term = e[n - i] * p[i]
            acc = acc + (term if i % 2 else -term)
        e.append(Fraction(1, n) * acc)
    return tuple(e[1:])


def lambda_to_kappa(p: KLPoly) -> KLPoly:
    """Rewrite p with every lambda generator eliminated in favor of kappas.

    A ring homomorphism: kappa generators are fixed, lambda_i maps to its
    kappa-polynomial image.
    """
    genus = genus_of(p)
    table = _lambda_table(genus)
    out = kl_zero(genus)
    for mono, coeff in p.coeffs.items():
        term = kl_scalar(genus, coeff)
        for name, exp in mono:
            kind, idx = _split_name(name)
            if kind == "kappa":
                term = term * kappa_class(genus, idx, exp)
            else:
                term = term * table[idx - 1] ** exp
        out = out + term
    return out


def chern_E_dual(genus: int, maxdeg: int) -> KLPoly:
    """Total Chern class of the dual Hodge-type bundle, truncated.

    Equals sum_i (-1)^i lambda_i up to degree min(genus, maxdeg).
    """
    if maxdeg < 0:
        raise InputError("negative truncation degree")
    out = kl_one(genus)
    for i in range(1, min(genus, maxdeg) + 1):
        term = lambda_class(genus, i)
        out = out + (term if i % 2 == 0 else -term)
    return out.truncate(maxdeg)


def kl_is_kappa_only(p: KLPoly) -> bool:
    return all(
        not name.startswith(_LAMBDA) for mono in p.coeffs for name, _ in mono
    )
