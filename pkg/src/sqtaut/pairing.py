"""Pairing of diagonal/psihat monomial classes against boundary chain
strata in genus zero, with the block-triangular rank certificate.

For d light points and degree k, the candidate basis X[P, tau] is indexed
by pairs of a set partition P of {1..d} into l parts (l >= d-k, parts
ordered by least element) and an exponent tuple tau of length l with
sum(tau) = k - d + l.  The monomial is prod_i psihat_{P_i}^{tau_i} D_{P_i}
on the space with two heavy points, extended here to m = 4 + k - d + 2l
heavy points.

The paired functional Y[P', tau'] integrates against a chain stratum: a
curve with components R_0 - R_1 - ... - R_{l'} - R_{l'+1} in a chain,
where R_0 and R_{l'+1} carry two heavy markings each and no light points,
and R_i (1 <= i <= l') carries tau'_i + 1 heavy markings and the light
block P'_i; heavy labels 1..m' are distributed left to right.  The
functional also multiplies by psi at the least heavy label r'_i on each
interior component.  The stratum has dimension l' + k.

Pairing evaluation:

  * l < l': zero, proven structurally - the row monomial cannot place a
    diagonal block on every interior component;
  * l = l', P != P': zero - the supports of the diagonals miss the
    stratum's light-point distribution;
  * l = l', P = P': the integral factors over components, each factor a
    genus-zero psi integral on tau'_i + 4 points, giving
    prod_i (tau_i + 1) when tau = tau' and 0 otherwise;
  * l > l': left unevaluated - these entries are never needed for the
    rank argument and no closed evaluation is claimed for them.

Ordering rows and columns by l descending makes the matrix block
lower-triangular with diagonal blocks that are themselves diagonal with
positive entries, which certifies that the X[P, tau] pair independently
against the functionals: full rank.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .genus0 import psi_integral_M0n
from .rings import InputError, iter_weak_compositions

PROVEN_ZERO = "proven-zero"
COMPUTED = "computed"
UNEVALUATED = "unevaluated"

REASON_TOO_FEW_BLOCKS = "fewer diagonal blocks than interior components"
REASON_SUPPORT_MISMATCH = "diagonal supports miss the stratum's light blocks"


class CertificateError(Exception):
    """A pairing matrix failed its structural rank certificate."""


@dataclass(frozen=True)
class PairSpec:
    """Index [P, tau]: a set partition with per-part exponents."""

    d: int
    k: int
    partition: tuple
    tau: tuple

    def __post_init__(self) -> None:
        if self.d < 1 or self.k < 0:
            raise InputError("need d >= 1 and k >= 0")
        seen = []
        last_min = 0
        for part in self.partition:
            if not part or list(part) != sorted(set(part)):
                raise InputError(f"bad part {part!r}")
            if part[0] <= last_min:
                raise InputError("parts must be ordered by least element")
            last_min = part[0]
            seen.extend(part)
        if sorted(seen) != list(range(1, self.d + 1)):
            raise InputError("parts must partition {1..d}")
        l = len(self.partition)
        if l < self.d - self.k:
            raise InputError("too few parts for this degree")
        if len(self.tau) != l:
            raise InputError("one exponent per part required")
        if any(not isinstance(t, int) or t < 0 for t in self.tau):
            raise InputError("exponents must be nonnegative integers")
        if sum(self.tau) != self.k - self.d + l:
            raise InputError("exponents must sum to k - d + #parts")

    @property
    def length(self) -> int:
        return len(self.partition)

    def __str__(self) -> str:
        parts = ",".join("{" + ",".join(map(str, p)) + "}" for p in self.partition)
        return f"[({parts}); tau={self.tau}]"


@dataclass(frozen=True)
class ChainStratum:
    """The chain-of-components stratum paired against a PairSpec."""

    d: int
    k: int
    partition: tuple
    tau: tuple
    heavy_labels: tuple  # per component, components 0..length+1
    light_blocks: tuple  # per component
    psi_labels: tuple    # least heavy label of each interior component

    @classmethod
    def from_spec(cls, spec: PairSpec) -> "ChainStratum":
        l = spec.length
        heavy = [(1, 2)]
        light = [()]
        psi = []
        next_label = 3
        for i in range(l):
            count = spec.tau[i] + 1
            labels = tuple(range(next_label, next_label + count))
            next_label += count
            heavy.append(labels)
            light.append(spec.partition[i])
            psi.append(labels[0])
        heavy.append((next_label, next_label + 1))
        light.append(())
        return cls(
            spec.d,
            spec.k,
            spec.partition,
            spec.tau,
            tuple(heavy),
            tuple(light),
            tuple(psi),
        )

    @property
    def length(self) -> int:
        return len(self.partition)

    @property
    def heavy_count(self) -> int:
        """m = 4 + k - d + 2l heavy markings in total."""
        return sum(len(h) for h in self.heavy_labels)

    @property
    def dimension(self) -> int:
        """dim of the ambient space minus one node per component join."""
        return (self.heavy_count + self.d - 3) - (self.length + 1)

    def spec(self) -> PairSpec:
        return PairSpec(self.d, self.k, self.partition, self.tau)


@dataclass(frozen=True)
class PairingEntry:
    status: str
    value: Fraction | None = None
    reason: str | None = None


def set_partitions(d: int) -> Iterator[tuple]:
    """All set partitions of {1..d}, parts ordered by least element."""
    if d < 1:
        raise InputError("d must be >= 1")

    def rec(x, parts):
        if x > d:
            yield tuple(tuple(p) for p in parts)
            return
        for i in range(len(parts)):
            parts[i].append(x)
            yield from rec(x + 1, parts)
            parts[i].pop()
        parts.append([x])
        yield from rec(x + 1, parts)
        parts.pop()

    yield from rec(1, [])


def enumerate_P(d: int, k: int) -> list:
    """All PairSpec indices for (d, k), partition length descending, then
    lexicographic in (partition, tau)."""
    if d < 1 or k < 0:
        raise InputError("need d >= 1 and k >= 0")
    by_length: dict = {}
    for partition in set_partitions(d):
        by_length.setdefault(len(partition), []).append(partition)
    out = []
    for l in range(d, max(0, d - k - 1), -1):
        if l < 1 or l < d - k:
            continue
        total = k - d + l
        if total < 0:
            continue
        for partition in sorted(by_length.get(l, [])):
            for tau in iter_weak_compositions(total, l):
                out.append(PairSpec(d, k, partition, tau))
    return out


def pairing_entry(row: PairSpec, col: ChainStratum) -> PairingEntry:
    """Evaluate the pairing of a monomial row against a stratum column."""
    if (row.d, row.k) != (col.d, col.k):
        raise InputError("row and column have mismatched (d, k)")
    l, lp = row.length, col.length
    if l < lp:
        return PairingEntry(PROVEN_ZERO, reason=REASON_TOO_FEW_BLOCKS)
    if l > lp:
        return PairingEntry(UNEVALUATED)
    if row.partition != col.partition:
        return PairingEntry(PROVEN_ZERO, reason=REASON_SUPPORT_MISMATCH)
    value = Fraction(1)
    for i in range(l):
        tp = col.tau[i]
        t = row.tau[i]
        # component integral on tau'_i + 4 points: psi at the least heavy
        # label, psi^t at the collapsed light point
        exponents = [1, t] + [0] * (tp + 2)
        value *= psi_integral_M0n(exponents)
        if value == 0:
            break
    return PairingEntry(COMPUTED, value=value)


@dataclass(frozen=True)
class DiagonalBlock:
    """Evidence for one l = l' block: diagonal values and zero off-diagonal."""

    length: int
    size: int
    diagonal: tuple  # Fractions in row order
    off_diagonal_checked: int


@dataclass(frozen=True)
class Certificate:
    """Structural full-rank certificate for the pairing matrix."""

    d: int
    k: int
    size: int
    blocks: tuple  # DiagonalBlock per length, descending
    zero_pairs: int        # row length < column length, proven zero
    unevaluated_pairs: int  # row length > column length, never needed
    full_rank: bool


class PairingMatrix:
    """Rows: PairSpec monomials; columns: chain strata of the same indices.

    Entries are computed on demand (the full matrix for d = k = 5 has
    ~600k cells); `entry(i, j)` and `entries()` expose them.  Invariants:
    every row-shorter-than-column entry is proven zero, every equal-length
    entry is computed exactly.
    """

    def __init__(self, d: int, k: int):
        self.d = d
        self.k = k
        self.specs = enumerate_P(d, k)
        self.strata = [ChainStratum.from_spec(s) for s in self.specs]

    @property
    def size(self) -> int:
        return len(self.specs)

    def entry(self, i: int, j: int) -> PairingEntry:
        return pairing_entry(self.specs[i], self.strata[j])

    def entries(self) -> Iterator[tuple]:
        for i in range(self.size):
            for j in range(self.size):
                yield i, j, self.entry(i, j)


def rank_certificate(d: int, k: int, bound: int = 5) -> Certificate:
    """Verify block triangularity and positive diagonal; certify full rank.

    Raises CertificateError if any diagonal entry vanishes or an
    equal-length off-diagonal entry is nonzero.
    """
    if d > bound or k > bound:
        raise InputError(f"d and k must be <= {bound}")
    matrix = PairingMatrix(d, k)
    specs = matrix.specs
    strata = matrix.strata
    by_length: dict = {}
    for idx, s in enumerate(specs):
        by_length.setdefault(s.length, []).append(idx)
    blocks = []
    zero_pairs = 0
    uneval_pairs = 0
    lengths = sorted(by_length, reverse=True)
    for li, l in enumerate(lengths):
        rows = by_length[l]
        diag = []
        off_checked = 0
        for i in rows:
            for j in rows:
                e = pairing_entry(specs[i], strata[j])
                if i == j:
                    if e.status != COMPUTED:
                        raise CertificateError(
                            f"diagonal entry {i} not computed"
                        )
                    if e.value <= 0:
                        raise CertificateError(
                            f"diagonal entry {i} is {e.value}, expected positive"
                        )
                    expected = 1
                    for t in specs[i].tau:
                        expected *= t + 1
                    if e.value != expected:
                        raise CertificateError(
                            f"diagonal entry {i} is {e.value}, expected {expected}"
                        )
                    diag.append(e.value)
                else:
                    # off-diagonal within the block: computed zero when the
                    # partitions agree, proven zero when they differ
                    zero = (e.status == COMPUTED and e.value == 0) or (
                        e.status == PROVEN_ZERO
                    )
                    if not zero:
                        raise CertificateError(
                            f"off-diagonal entry ({i},{j}) is nonzero"
                        )
                    off_checked += 1
        blocks.append(
            DiagonalBlock(l, len(rows), tuple(diag), off_checked)
        )
        # strictly-shorter rows against this block's columns: proven zero
        for shorter in lengths[li + 1:]:
            for i in by_length[shorter]:
                for j in rows:
                    e = pairing_entry(specs[i], strata[j])
                    if e.status != PROVEN_ZERO:
                        raise CertificateError(
                            f"entry ({i},{j}) should be proven zero"
                        )
                    zero_pairs += 1
        for longer in lengths[:li]:
            uneval_pairs += len(by_length[longer]) * len(rows)
    return Certificate(
        d,
        k,
        matrix.size,
        tuple(blocks),
        zero_pairs,
        uneval_pairs,
        True,
    )


def count_P(d: int, k: int) -> int:
    """|P[d,k]| by direct enumeration."""
    return len(enumerate_P(d, k))
