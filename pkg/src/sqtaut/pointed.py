"""Tautological classes on the d-fold fiber product of the universal curve
over the genus-g base, where the d light points may collide.

Additive basis after rewriting: block monomials.  A block monomial is a
set partition of the light labels {1..d} into blocks, each block B carrying
a cotangent-weight exponent t_B >= 0.  A block of size >= 2 stands for the
small diagonal where its points collide, and the exponent is the power of
the common cotangent-line class on that diagonal; a singleton block {j}
with exponent t stands for psihat_j^t.  The codimension of a monomial is

    sum_B t_B  +  sum_{|B| >= 2} (|B| - 1).

Two rewriting facts make this a basis and drive multiplication:

  * restricted to the diagonal of a block J, every psihat_j with j in J
    becomes the common class psihat_J;
  * a product of diagonals with overlapping supports collapses:
    D_J * D_J' = (-psihat_{J u J'})^{|J n J'| - 1} * D_{J u J'}.

Merging the blocks of two monomials therefore proceeds by connected
components: a component F assembled from r constituent blocks (counted
from both factors) picks up the exponent |F| + 1 - r on -psihat_F, since
every light label lies in exactly one block of each factor.

Coefficients are kappa/lambda polynomials pulled back from the base.  The
pushforward to the base sends a block monomial to prod_B kappa_{t_B - 1}
(kappa_{-1} = 0, kappa_0 = 2g - 2), lowering degree by exactly d.

The total Chern class of the index-type obstruction bundle F_d (rank
g - d - 1) is

    chern_F = chern_E_dual * (prod_{i=1}^{d} (1 + Delta_i - psihat_i))^{-1}

with Delta_i = D_{1,i} + ... + D_{i-1,i}, and chern_B is the product being
inverted.  Pushing the single Chern class of degree (g - d - 1) + 2k to
the base yields a kappa/lambda class that vanishes on the base for every
k >= 1; `theorem5_class` returns that expression so callers can emit it as
a relation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .kappa_lambda import (
    KLPoly,
    chern_E_dual,
    genus_of,
    kappa_class,
    kl_one,
    kl_scalar,
    kl_zero,
)
from .rings import DomainError, GradedPoly, InputError, poly_mul


@dataclass(frozen=True)
class BlockMonomial:
    """Canonical block monomial: partition of {1..d} + exponent per block.

    Blocks are tuples of strictly increasing labels, ordered by least
    element; together they cover {1..d} exactly.
    """

    d: int
    blocks: tuple
    exps: tuple

    def __post_init__(self) -> None:
        if self.d < 0:
            raise InputError("d must be >= 0")
        if len(self.blocks) != len(self.exps):
            raise InputError("one exponent per block required")
        seen = []
        last_min = 0
        for block, exp in zip(self.blocks, self.exps):
            if not block or list(block) != sorted(set(block)):
                raise InputError(f"bad block {block!r}")
            if block[0] <= last_min:
                raise InputError("blocks must be ordered by least element")
            last_min = block[0]
            if not isinstance(exp, int) or exp < 0:
                raise InputError(f"bad exponent {exp!r}")
            seen.extend(block)
        if sorted(seen) != list(range(1, self.d + 1)):
            raise InputError("blocks must partition {1..d}")

    @property
    def degree(self) -> int:
        return sum(self.exps) + sum(len(b) - 1 for b in self.blocks)

    def canonicalized(self) -> "BlockMonomial":
        """Re-sort block contents and block order; identity on canonical input."""
        pairs = sorted(
            ((tuple(sorted(b)), e) for b, e in zip(self.blocks, self.exps)),
            key=lambda pe: pe[0][0],
        )
        return BlockMonomial(
            self.d,
            tuple(b for b, _ in pairs),
            tuple(e for _, e in pairs),
        )

    def relabel(self, perm: Mapping[int, int]) -> "BlockMonomial":
        pairs = sorted(
            ((tuple(sorted(perm[x] for x in b)), e)
             for b, e in zip(self.blocks, self.exps)),
            key=lambda pe: pe[0][0],
        )
        return BlockMonomial(
            self.d,
            tuple(b for b, _ in pairs),
            tuple(e for _, e in pairs),
        )

    def __str__(self) -> str:
        if not self.blocks:
            return "1"
        parts = []
        for block, exp in zip(self.blocks, self.exps):
            label = ",".join(str(x) for x in block)
            if len(block) >= 2:
                parts.append(f"D_{{{label}}}")
            if exp:
                suffix = f"^{exp}" if exp > 1 else ""
                parts.append(f"psih_{{{label}}}{suffix}")
        return "*".join(parts) if parts else "1"


def unit_monomial(d: int) -> BlockMonomial:
    return BlockMonomial(d, tuple((j,) for j in range(1, d + 1)), (0,) * d)


def psihat_monomial(d: int, j: int, exp: int = 1) -> BlockMonomial:
    if not 1 <= j <= d:
        raise InputError(f"light label {j} out of range 1..{d}")
    base = unit_monomial(d)
    exps = list(base.exps)
    exps[j - 1] = exp
    return BlockMonomial(d, base.blocks, tuple(exps))


def diagonal_monomial(d: int, labels: Iterable[int]) -> BlockMonomial:
    J = tuple(sorted(set(labels)))
    if len(J) < 2:
        raise InputError("a diagonal needs at least two labels")
    if not all(1 <= x <= d for x in J):
        raise InputError(f"labels {J} out of range 1..{d}")
    blocks = [J] + [(j,) for j in range(1, d + 1) if j not in J]
    blocks.sort(key=lambda b: b[0])
    return BlockMonomial(d, tuple(blocks), (0,) * len(blocks))


@dataclass(eq=False)
class PointedClass:
    """A finite sum of block monomials with kappa/lambda coefficients.

    `trunc`, when set, caps the trusted total degree (monomial codimension
    plus coefficient degree); higher terms are dropped on construction and
    in every product.  Values are treated as immutable.
    """

    genus: int
    d: int
    terms: dict
    trunc: int | None = None

    def __post_init__(self) -> None:
        if self.genus < 2:
            raise InputError("genus must be >= 2")
        if self.d < 0:
            raise InputError("d must be >= 0")
        clean: dict = {}
        for mono, coeff in self.terms.items():
            if mono.d != self.d:
                raise InputError("monomial has wrong number of light points")
            if genus_of(coeff) != self.genus:
                raise InputError("coefficient has wrong genus")
            if self.trunc is not None:
                coeff = coeff.truncate(self.trunc - mono.degree)
            if coeff.is_zero:
                continue
            clean[mono] = coeff
        self.terms = clean

    # -- queries ---------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, mono: BlockMonomial) -> KLPoly:
        return self.terms.get(mono, kl_zero(self.genus))

    def total_degrees(self) -> list:
        out = set()
        for mono, coeff in self.terms.items():
            for k in coeff.homogeneous_degrees():
                out.add(mono.degree + k)
        return sorted(out)

    def degree_part(self, k: int) -> "PointedClass":
        parts = {}
        for mono, coeff in self.terms.items():
            piece = coeff.degree_part(k - mono.degree)
            if not piece.is_zero:
                parts[mono] = piece
        return PointedClass(self.genus, self.d, parts, None)

    def truncate(self, trunc: int | None) -> "PointedClass":
        return PointedClass(self.genus, self.d, dict(self.terms), trunc)

    def canonicalized(self) -> "PointedClass":
        out = {}
        for mono, coeff in self.terms.items():
            canon = mono.canonicalized()
            out[canon] = out.get(canon, kl_zero(self.genus)) + coeff
        return PointedClass(self.genus, self.d, out, self.trunc)

    def relabel(self, perm: Mapping[int, int]) -> "PointedClass":
        """Apply a permutation of the light labels (a ring automorphism)."""
        if sorted(perm) != list(range(1, self.d + 1)) or sorted(
            perm.values()
        ) != list(range(1, self.d + 1)):
            raise InputError("perm must permute 1..d")
        out = {}
        for mono, coeff in self.terms.items():
            out[mono.relabel(perm)] = coeff
        return PointedClass(self.genus, self.d, out, self.trunc)

    # -- arithmetic ------------------------------------------------------

    def _require_compatible(self, other: "PointedClass") -> None:
        if (self.genus, self.d) != (other.genus, other.d):
            raise InputError("mismatched genus or light-point count")

    @staticmethod
    def _combine_caps(a, b):
        if a is None:
            return b
        if b is None:
            return a
        return min(a, b)

    def __add__(self, other):
        if not isinstance(other, PointedClass):
            return NotImplemented
        self._require_compatible(other)
        acc = dict(self.terms)
        for mono, coeff in other.terms.items():
            s = acc.get(mono)
            s = coeff if s is None else s + coeff
            if s.is_zero:
                acc.pop(mono, None)
            else:
                acc[mono] = s
        return PointedClass(
            self.genus, self.d, acc, self._combine_caps(self.trunc, other.trunc)
        )

    def __neg__(self):
        return PointedClass(
            self.genus, self.d, {m: -c for m, c in self.terms.items()}, self.trunc
        )

    def __sub__(self, other):
        if not isinstance(other, PointedClass):
            return NotImplemented
        return self + (-other)

    def scale(self, factor) -> "PointedClass":
        """Multiply by a scalar or by a pulled-back kappa/lambda class."""
        if isinstance(factor, (int, Fraction)):
            factor = kl_scalar(self.genus, factor)
        if genus_of(factor) != self.genus:
            raise InputError("coefficient has wrong genus")
        out = {}
        for mono, coeff in self.terms.items():
            cap = None if self.trunc is None else self.trunc - mono.degree
            prod = poly_mul(coeff, factor, cap)
            if not prod.is_zero:
                out[mono] = prod
        return PointedClass(self.genus, self.d, out, self.trunc)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GradedPoly)):
            return self.scale(other)
        if not isinstance(other, PointedClass):
            return NotImplemented
        return pc_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, GradedPoly)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise InputError("negative power")
        result = pc_one(self.genus, self.d, self.trunc)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            if q == 0:
                return self.is_zero
            return self.terms == {unit_monomial(self.d): kl_scalar(self.genus, q)}
        if not isinstance(other, PointedClass):
            return NotImplemented
        # truncation metadata is not part of the value
        return (self.genus, self.d) == (other.genus, other.d) and (
            self.terms == other.terms
        )

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for mono in sorted(self.terms, key=lambda m: (m.degree, m.blocks, m.exps)):
            coeff = self.terms[mono]
            cs = str(coeff)
            mixed = "+" in cs or " - " in cs
            if str(mono) == "1":
                pieces.append(f"({cs})" if mixed else cs)
            elif mixed:
                pieces.append(f"({cs})*{mono}")
            elif cs == "1":
                pieces.append(str(mono))
            elif cs == "-1":
                pieces.append(f"-{mono}")
            else:
                pieces.append(f"{cs}*{mono}")
        out = pieces[0]
        for piece in pieces[1:]:
            if piece.startswith("-"):
                out += " - " + piece[1:]
            else:
                out += " + " + piece
        return out


# -- constructors --------------------------------------------------------

def pc_zero(genus: int, d: int, trunc: int | None = None) -> PointedClass:
    return PointedClass(genus, d, {}, trunc)


def pc_one(genus: int, d: int, trunc: int | None = None) -> PointedClass:
    return PointedClass(genus, d, {unit_monomial(d): kl_one(genus)}, trunc)


def pc_from_kl(genus: int, d: int, coeff: KLPoly,
               trunc: int | None = None) -> PointedClass:
    if genus_of(coeff) != genus:
        raise InputError("coefficient has wrong genus")
    return PointedClass(genus, d, {unit_monomial(d): coeff}, trunc)


def pc_monomial(genus: int, d: int, mono: BlockMonomial,
                coeff=None, trunc: int | None = None) -> PointedClass:
    if coeff is None:
        coeff = kl_one(genus)
    return PointedClass(genus, d, {mono: coeff}, trunc)


def pc_psihat(genus: int, d: int, j: int, exp: int = 1,
              trunc: int | None = None) -> PointedClass:
    return pc_monomial(genus, d, psihat_monomial(d, j, exp), trunc=trunc)


def pc_diagonal(genus: int, d: int, labels: Iterable[int],
                trunc: int | None = None) -> PointedClass:
    return pc_monomial(genus, d, diagonal_monomial(d, labels), trunc=trunc)


def pc_delta(genus: int, d: int, i: int, trunc: int | None = None) -> PointedClass:
    """Delta_i = D_{1,i} + ... + D_{i-1,i}; Delta_1 = 0."""
    if not 1 <= i <= d:
        raise InputError(f"light label {i} out of range 1..{d}")
    out = pc_zero(genus, d, trunc)
    for j in range(1, i):
        out = out + pc_diagonal(genus, d, (j, i), trunc=trunc)
    return out


def pc_delta_sym(genus: int, d: int, trunc: int | None = None) -> PointedClass:
    """The symmetric diagonal divisor: sum of all D_{i,j}, i < j."""
    out = pc_zero(genus, d, trunc)
    for i in range(1, d + 1):
        for j in range(i + 1, d + 1):
            out = out + pc_diagonal(genus, d, (i, j), trunc=trunc)
    return out


# -- multiplication ------------------------------------------------------

def _merge_monomials(m1: BlockMonomial, m2: BlockMonomial):
    """Merge block structures; return (monomial, sign, psihat shift baked in).

    Components of the union of both partitions collapse to single blocks.
    A component F built from r constituent blocks gains |F| + 1 - r extra
    exponent units, each carrying a factor -1.
    """
    d = m1.d
    owner = {}
    comps = []
    for block, exp in zip(m1.blocks, m1.exps):
        idx = len(comps)
        comps.append({"elems": set(block), "exp": exp, "count": 1})
        for x in block:
            owner[x] = idx
    for block, exp in zip(m2.blocks, m2.exps):
        ids = sorted({owner[x] for x in block})
        keep = ids[0]
        target = comps[keep]
        for other in ids[1:]:
            merged = comps[other]
            target["elems"] |= merged["elems"]
            target["exp"] += merged["exp"]
            target["count"] += merged["count"]
            for x in merged["elems"]:
                owner[x] = keep
            merged["elems"] = None
        target["exp"] += exp
        target["count"] += 1
    blocks = []
    sign = 1
    for comp in comps:
        if comp["elems"] is None:
            continue
        extra = len(comp["elems"]) + 1 - comp["count"]
        if extra % 2:
            sign = -sign
        blocks.append((tuple(sorted(comp["elems"])), comp["exp"] + extra))
    blocks.sort(key=lambda be: be[0][0])
    mono = BlockMonomial(
        d, tuple(b for b, _ in blocks), tuple(e for _, e in blocks)
    )
    return mono, sign


def pc_mul(a: PointedClass, b: PointedClass) -> PointedClass:
    """Product in canonical form; bilinear over kappa/lambda coefficients."""
    if not isinstance(a, PointedClass) or not isinstance(b, PointedClass):
        raise InputError("pc_mul expects two PointedClass operands")
    a._require_compatible(b)
    trunc = PointedClass._combine_caps(a.trunc, b.trunc)
    genus = a.genus
    acc: dict = {}
    for m1, c1 in a.terms.items():
        for m2, c2 in b.terms.items():
            mono, sign = _merge_monomials(m1, m2)
            if trunc is not None and mono.degree > trunc:
                continue
            cap = None if trunc is None else trunc - mono.degree
            coeff = poly_mul(c1, c2, cap)
            if sign < 0:
                coeff = -coeff
            if coeff.is_zero:
                continue
            prev = acc.get(mono)
            s = coeff if prev is None else prev + coeff
            if s.is_zero:
                acc.pop(mono, None)
            else:
                acc[mono] = s
    return PointedClass(genus, a.d, acc, trunc)


# -- Chern classes of the obstruction theory -----------------------------

def chern_B(genus: int, d: int, maxdeg: int) -> PointedClass:
    """Total Chern class of the light-point subsheaf:
    prod_{i=1}^{d} (1 + Delta_i - psihat_i), truncated."""
    if d < 1:
        raise InputError("d must be >= 1")
    if maxdeg < 0:
        raise InputError("negative truncation degree")
    out = pc_one(genus, d, maxdeg)
    for i in range(1, d + 1):
        factor = (
            pc_one(genus, d, maxdeg)
            + pc_delta(genus, d, i, maxdeg)
            - pc_psihat(genus, d, i, trunc=maxdeg)
        )
        out = out * factor
    return out


def pc_inverse(p: PointedClass, maxdeg: int) -> PointedClass:
    """Inverse modulo degree > maxdeg; requires unit constant part."""
    if maxdeg < 0:
        raise InputError("negative truncation degree")
    one = pc_one(p.genus, p.d, maxdeg)
    if p.degree_part(0) != pc_one(p.genus, p.d):
        raise DomainError("pc_inverse requires constant part 1")
    n = (p.truncate(maxdeg) - one)
    result = one
    power = one
    for _ in range(maxdeg):
        power = power * (-n)
        if power.is_zero:
            break
        result = result + power
    return result


@lru_cache(maxsize=64)
def _chern_F_cached(genus: int, d: int, maxdeg: int) -> PointedClass:
    if d == 0:
        return pc_from_kl(genus, 0, chern_E_dual(genus, maxdeg), maxdeg)
    prev = _chern_F_cached(genus, d - 1, maxdeg)
    lifted = PointedClass(
        genus,
        d,
        {_extend_monomial(m, d): c for m, c in prev.terms.items()},
        maxdeg,
    )
    factor = (
        pc_one(genus, d, maxdeg)
        + pc_delta(genus, d, d, maxdeg)
        - pc_psihat(genus, d, d, trunc=maxdeg)
    )
    return lifted * pc_inverse(factor, maxdeg)


def _extend_monomial(m: BlockMonomial, d: int) -> BlockMonomial:
    return BlockMonomial(d, m.blocks + ((d,),), m.exps + (0,))


def chern_F(genus: int, d: int, maxdeg: int) -> PointedClass:
    """Total Chern class of the rank g-d-1 obstruction bundle, truncated.

    Equals chern_E_dual times the truncated inverse of chern_B; computed
    one light point at a time and cached per (genus, d, maxdeg).
    """
    if genus < 2:
        raise InputError("genus must be >= 2")
    if d < 0:
        raise InputError("d must be >= 0")
    if maxdeg < 0:
        raise InputError("negative truncation degree")
    return _chern_F_cached(genus, d, maxdeg)


# -- pushforward to the base ---------------------------------------------

def epsilon_push(c: PointedClass) -> KLPoly:
    """Pushforward along the map forgetting all light points.

    Block rule: a monomial with blocks B and exponents t_B pushes to
    prod_B kappa_{t_B - 1}; any exponent-0 block kills the term.  Lowers
    degree by exactly d.
    """
    genus = c.genus
    out = kl_zero(genus)
    for mono, coeff in c.terms.items():
        factor = kl_one(genus)
        dead = False
        for exp in mono.exps:
            if exp == 0:
                dead = True
                break
            factor = factor * kappa_class(genus, exp - 1)
        if dead:
            continue
        out = out + coeff * factor
    return out


def rank_F(genus: int, d: int) -> int:
    return genus - d - 1


def pushed_chern(genus: int, d: int, chern_degree: int) -> KLPoly:
    """epsilon_*(c_m(F_d)) for m = chern_degree."""
    if chern_degree < 0:
        raise InputError("negative Chern degree")
    total = chern_F(genus, d, chern_degree)
    return epsilon_push(total.degree_part(chern_degree))


def theorem5_class(genus: int, d: int, k: int) -> KLPoly:
    """The degree g-2d-1+2k relation epsilon_*(c_{r+2k}(F_d)), r = g-d-1.

    Vanishes in the tautological ring of the base for every k >= 1; the
    returned expression is the relation's left-hand side.
    """
    if genus < 2:
        raise InputError("genus must be >= 2")
    if d < 1:
        raise InputError("d must be >= 1")
    if k < 1:
        raise InputError("k must be >= 1")
    target = rank_F(genus, d) + 2 * k
    if target < 0:
        raise InputError("negative Chern degree")
    return pushed_chern(genus, d, target)
