"""JSON payloads (schema "sq-taut/1") and text round-trips.

Every emitted payload is a dict with "schema" and "kind" keys.  Class-like
kinds:

  pointed-class   {genus, d, terms: [TERM]}
  kl-class        {genus, terms: [KLTERM], provenance?}

TERM  = {partition: [[int]], exponents: [int], coeff: COEFF}
KLTERM = {coeff: COEFF}
COEFF = {kappa: {index: exp}, lambda: {index: exp}, rational: "p/q"}

Each TERM carries exactly one kappa/lambda monomial (classes are emitted
fully expanded), the partition lists every block including exponent-zero
singletons, and term order is canonical, so emission is deterministic and
`parse(emit(x)) == x`.  Relations carry a provenance object naming the
generating operation and its parameters.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping

from .kappa_lambda import (
    KLPoly,
    genus_of,
    kappa_class,
    kl_scalar,
    kl_zero,
    lambda_class,
)
from .pointed import BlockMonomial, PointedClass
from .rings import GradedPoly, InputError

SCHEMA = "sq-taut/1"


def _coeff_payload(kl_mono, q: Fraction) -> dict:
    kappa: dict = {}
    lam: dict = {}
    for name, exp in kl_mono:
        kind, idx = name.split("_")
        if kind == "kappa":
            kappa[idx] = exp
        else:
            lam[idx] = exp
    return {"kappa": kappa, "lambda": lam, "rational": str(q)}


def _coeff_from_payload(genus: int, payload: Mapping) -> KLPoly:
    try:
        q = Fraction(payload["rational"])
    except (KeyError, ValueError) as exc:
        raise InputError(f"bad coefficient payload: {exc}") from None
    out = kl_scalar(genus, q)
    for idx, exp in payload.get("kappa", {}).items():
        out = out * kappa_class(genus, int(idx), int(exp))
    for idx, exp in payload.get("lambda", {}).items():
        out = out * lambda_class(genus, int(idx), int(exp))
    return out


def _check_header(payload: Mapping, kind: str) -> None:
    if payload.get("schema") != SCHEMA:
        raise InputError(f"expected schema {SCHEMA!r}")
    if payload.get("kind") != kind:
        raise InputError(f"expected kind {kind!r}, got {payload.get('kind')!r}")


# -- kappa/lambda classes -------------------------------------------------

def emit_kl(p: KLPoly, provenance: Mapping | None = None) -> dict:
    genus = genus_of(p)
    terms = []
    for mono, q in p.terms():
        terms.append({"coeff": _coeff_payload(mono, q)})
    out = {"schema": SCHEMA, "kind": "kl-class", "genus": genus, "terms": terms}
    if provenance is not None:
        out["provenance"] = dict(provenance)
    return out


def parse_kl(payload: Mapping) -> KLPoly:
    _check_header(payload, "kl-class")
    genus = int(payload["genus"])
    out = kl_zero(genus)
    for term in payload["terms"]:
        out = out + _coeff_from_payload(genus, term["coeff"])
    return out


# -- pointed classes ------------------------------------------------------

def emit_pointed(p: PointedClass) -> dict:
    terms = []
    for mono in sorted(p.terms, key=lambda m: (m.degree, m.blocks, m.exps)):
        coeff = p.terms[mono]
        for kl_mono, q in coeff.terms():
            terms.append(
                {
                    "partition": [list(b) for b in mono.blocks],
                    "exponents": list(mono.exps),
                    "coeff": _coeff_payload(kl_mono, q),
                }
            )
    return {
        "schema": SCHEMA,
        "kind": "pointed-class",
        "genus": p.genus,
        "d": p.d,
        "terms": terms,
    }


def parse_pointed(payload: Mapping) -> PointedClass:
    _check_header(payload, "pointed-class")
    genus = int(payload["genus"])
    d = int(payload["d"])
    acc: dict = {}
    for term in payload["terms"]:
        mono = BlockMonomial(
            d,
            tuple(tuple(int(x) for x in b) for b in term["partition"]),
            tuple(int(e) for e in term["exponents"]),
        )
        coeff = _coeff_from_payload(genus, term["coeff"])
        prev = acc.get(mono)
        acc[mono] = coeff if prev is None else prev + coeff
    return PointedClass(genus, d, acc)


# -- single-variable polynomials and rationals ---------------------------

def emit_poly(p: GradedPoly, variable: str) -> dict:
    coeffs = {}
    for mono, q in p.terms():
        degree = mono[0][1] if mono else 0
        coeffs[str(degree)] = str(q)
    return {
        "schema": SCHEMA,
        "kind": "poly",
        "variable": variable,
        "coefficients": coeffs,
    }


def parse_poly(payload: Mapping) -> GradedPoly:
    from .rings import poly_const, poly_gen, single_gen

    _check_header(payload, "poly")
    variable = payload["variable"]
    gens = single_gen(variable)
    out = poly_const(gens, 0)
    for degree, q in payload["coefficients"].items():
        out = out + Fraction(q) * poly_gen(gens, variable, int(degree))
    return out


def emit_rational(q: Fraction, **extra) -> dict:
    out = {"schema": SCHEMA, "kind": "rational", "value": str(q)}
    out.update(extra)
    return out


def parse_rational(payload: Mapping) -> Fraction:
    _check_header(payload, "rational")
    return Fraction(payload["value"])


# -- pretty text for kappa/lambda classes --------------------------------

def format_kl(p: KLPoly) -> str:
    return str(p)


def parse_kl_pretty(text: str, genus: int) -> KLPoly:
    """Parse the pretty printer's output back into a class.

    Grammar: terms joined by ' + ' / ' - ', each term an optional rational
    followed by '*'-separated generator factors 'kappa_i^e' / 'lambda_i^e'.
    """
    text = text.strip()
    if not text:
        raise InputError("empty class text")
    if text == "0":
        return kl_zero(genus)
    normalized = text.replace(" - ", " + -").replace(" + ", "\x00")
    out = kl_zero(genus)
    for piece in normalized.split("\x00"):
        piece = piece.strip()
        sign = 1
        while piece.startswith("-"):
            sign = -sign
            piece = piece[1:].strip()
        coeff = Fraction(sign)
        factors = kl_scalar(genus, 1)
        for chunk in piece.split("*"):
            chunk = chunk.strip()
            if not chunk:
                raise InputError(f"empty factor in {piece!r}")
            head = chunk.split("^")[0]
            if head.replace("/", "").isdigit():
                coeff *= Fraction(chunk)
                continue
            if "^" in chunk:
                name, exp_text = chunk.split("^", 1)
                exp = int(exp_text)
            else:
                name, exp = chunk, 1
            kind, _, idx_text = name.partition("_")
            if not idx_text.isdigit():
                raise InputError(f"bad generator {name!r}")
            idx = int(idx_text)
            if kind == "kappa":
                factors = factors * kappa_class(genus, idx, exp)
            elif kind == "lambda":
                factors = factors * lambda_class(genus, idx, exp)
            else:
                raise InputError(f"bad generator {name!r}")
        out = out + coeff * factors
    return out
