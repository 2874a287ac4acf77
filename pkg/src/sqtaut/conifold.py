"""Local invariants of the resolved conifold: degree-1 invariants from the
squared sine expansion and the degree-scaling law.

The genus generating series is

    F(t) = sum_{g >= 1} N_{g,1} t^{2g} = ((t/2) / sin(t/2))^2 - 1,

computed exactly by inverting the squared sine series in the variable
v = (t/2)^2: with  S(v) = (sum_{j >= 0} (-1)^j v^j / (2j+1)!)^2  one has
((t/2)/sin(t/2))^2 = 1/S(v), and N_{g,1} is the v^g coefficient divided
by 4^g.  The closed form's constant term is 1 and is recorded separately
from the positive-genus coefficients.

Higher degrees scale as N_{g,d} = d^(2g-3) * N_{g,1}; for g = 1 the
exponent is negative and the value is the exact rational N_{1,1}/d.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .rings import (
    GradedPoly,
    InputError,
    poly_const,
    poly_gen,
    poly_mul,
    single_gen,
    truncated_inverse,
)

_V = single_gen("v")


@dataclass(frozen=True)
class LocalSeries:
    """Exact coefficients N_{g,1} for 1 <= g <= max_genus.

    `constant_term` records the degree-zero value of the closed form
    ((t/2)/sin(t/2))^2, which is 1 and is not a curve count.
    """

    max_genus: int
    coeffs: tuple
    constant_term: Fraction

    def __post_init__(self) -> None:
        if self.max_genus < 1:
            raise InputError("max_genus must be >= 1")
        if len(self.coeffs) != self.max_genus:
            raise InputError("need one coefficient per genus")

    def N1(self, g: int) -> Fraction:
        """N_{g,1}."""
        if not 1 <= g <= self.max_genus:
            raise InputError(f"genus {g} outside 1..{self.max_genus}")
        return self.coeffs[g - 1]


def _sine_square_series(max_genus: int) -> GradedPoly:
    """(sin(u)/u)^2 as a series in v = u^2, truncated at v^max_genus."""
    half = poly_const(_V, 0)
    for j in range(max_genus + 1):
        c = Fraction((-1) ** j, factorial(2 * j + 1))
        half = half + c * poly_gen(_V, "v", j)
    return poly_mul(half, half, max_genus)


def conifold_F(max_genus: int) -> LocalSeries:
    """Exact N_{g,1} for g up to max_genus by series inversion."""
    if max_genus < 1:
        raise InputError("max_genus must be >= 1")
    inv = truncated_inverse(_sine_square_series(max_genus), max_genus)
    coeffs = []
    for g in range(1, max_genus + 1):
        v_coeff = inv.coefficient((("v", g),))
        coeffs.append(v_coeff / Fraction(4) ** g)
    return LocalSeries(max_genus, tuple(coeffs), inv.constant_term)


def conifold_N(g: int, d: int, series: LocalSeries) -> Fraction:
    """N_{g,d} = d^(2g-3) * N_{g,1}, exact for every g >= 1, d >= 1."""
    if g < 1:
        raise InputError("g must be >= 1")
    if d < 1:
        raise InputError("d must be >= 1")
    base = series.N1(g)
    exponent = 2 * g - 3
    if exponent >= 0:
        return base * Fraction(d) ** exponent
    return base / Fraction(d) ** (-exponent)
