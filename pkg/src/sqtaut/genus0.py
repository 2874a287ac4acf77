"""Genus-zero combinatorics: chain-space Betti polynomials, two-heavy-point
intersection numbers with colliding light points, and psi intersection
numbers on the n-pointed space.

The space of a rational curve with two distinguished points and d light
points that may collide deformation-retracts onto a chain of components;
its Poincare polynomial is assembled from ordered compositions of d, one
factor t^{2(part-1)} per chain component.  Closed form: (1+t^2)^{d-1}.

Intersection numbers against psi classes at the two heavy points and the
light points satisfy a point-forgetting recursion

    I(d; x1, x2 | y_1..y_d) = I(d-1; x1-1, x2 | ...) + I(d-1; x1, x2-1 | ...)

valid when y_d = 0 (the dropped light point carries no psi), with base
I(1; 0, 0 | 0) = 1.  The value vanishes unless every y_j = 0, where it is
the binomial coefficient binom(d-1; x1, x2).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterator, Sequence

from .rings import GradedPoly, InputError, poly_const, poly_gen, single_gen

T_GEN = single_gen("t")


@dataclass(frozen=True)
class Composition:
    """An ordered tuple of positive integers."""

    parts: tuple

    def __post_init__(self) -> None:
        if not all(isinstance(p, int) and p >= 1 for p in self.parts):
            raise InputError("composition parts must be positive integers")

    @property
    def total(self) -> int:
        return sum(self.parts)


def compositions(d: int) -> Iterator[Composition]:
    """All ordered compositions of d >= 1, in lexicographic order."""
    if d < 1:
        raise InputError("d must be >= 1")

    def rec(rest):
        if rest == 0:
            yield ()
            return
        for head in range(1, rest + 1):
            for tail in rec(rest - head):
                yield (head,) + tail

    for parts in rec(d):
        yield Composition(parts)


def poincare_Q02(d: int) -> GradedPoly:
    """Poincare polynomial of the two-pointed degree-d chain space.

    Sum over compositions (d_1,...,d_n) of d of prod_i t^{2 d_i - 2};
    equals (1 + t^2)^(d-1).
    """
    if d < 1:
        raise InputError("d must be >= 1")
    out = poly_const(T_GEN, 0)
    for comp in compositions(d):
        e = sum(2 * p - 2 for p in comp.parts)
        out = out + poly_gen(T_GEN, "t", e) if e else out + poly_const(T_GEN, 1)
    return out


def intersect_M02d(d: int, x1: int, x2: int, y: Sequence[int]) -> Fraction:
    """Integral of psi1^x1 psi2^x2 prod_j psihat_j^y_j over the
    two-heavy-point space with d light points.

    Computed by the point-forgetting recursion; vanishes off dimension
    x1 + x2 + sum(y) = d - 1.
    """
    if d < 1:
        raise InputError("d must be >= 1")
    y = tuple(y)
    if len(y) != d:
        raise InputError(f"need {d} light exponents, got {len(y)}")
    if any(v < 0 for v in y) or x1 < 0 or x2 < 0:
        raise InputError("exponents must be nonnegative")
    return _intersect_rec(d, x1, x2, y)


def _intersect_rec(d: int, x1: int, x2: int, y: tuple) -> Fraction:
    if x1 < 0 or x2 < 0:
        return Fraction(0)
    if x1 + x2 + sum(y) != d - 1:
        return Fraction(0)
    if d == 1:
        return Fraction(1)  # dimension 0 forces x1 = x2 = y_1 = 0
    # some light point is psi-free (sum(y) <= d-1 < d); forget it
    j = next(i for i in range(d) if y[i] == 0)
    rest = y[:j] + y[j + 1:]
    return _intersect_rec(d - 1, x1 - 1, x2, rest) + _intersect_rec(
        d - 1, x1, x2 - 1, rest
    )


def psi_integral_M0n(exponents: Sequence[int]) -> Fraction:
    """Integral of prod_i psi_i^{a_i} over the n-pointed genus-zero space.

    Equals the multinomial (n-3)! / prod(a_i!) when sum(a_i) = n - 3, and
    zero otherwise.  Requires n >= 3.
    """
    a = tuple(exponents)
    n = len(a)
    if n < 3:
        raise InputError("need at least three marked points")
    if any(v < 0 for v in a):
        raise InputError("exponents must be nonnegative")
    if sum(a) != n - 3:
        return Fraction(0)
    denom = 1
    for v in a:
        denom *= factorial(v)
    return Fraction(factorial(n - 3), denom)
