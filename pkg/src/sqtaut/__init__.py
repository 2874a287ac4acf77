"""Exact tautological-class calculus on moduli of curves with
collision-allowed marked points: graded polynomial cores, pushforward
calculi, relation generators, pairing matrices, genus-zero intersection
combinatorics, and local Calabi-Yau invariants.
"""

from .conifold import LocalSeries, conifold_F, conifold_N
from .curve import (
    CurveClass,
    cc_omega,
    cc_pullback,
    cc_sections_sum,
    cc_sigma,
    pi_push,
    prop8_relation,
)
from .genus0 import (
    compositions,
    intersect_M02d,
    poincare_Q02,
    psi_integral_M0n,
)
from .jsonio import (
    SCHEMA,
    emit_kl,
    emit_pointed,
    emit_poly,
    emit_rational,
    format_kl,
    parse_kl,
    parse_kl_pretty,
    parse_pointed,
    parse_poly,
    parse_rational,
)
from .kappa_lambda import (
    KLGens,
    KLPoly,
    chern_E_dual,
    genus_of,
    kappa_class,
    kl_gens,
    kl_is_kappa_only,
    kl_one,
    kl_scalar,
    kl_zero,
    lambda_class,
    lambda_to_kappa,
)
from .pairing import (
    Certificate,
    CertificateError,
    ChainStratum,
    PairSpec,
    PairingMatrix,
    count_P,
    enumerate_P,
    pairing_entry,
    rank_certificate,
    set_partitions,
)
from .pointed import (
    BlockMonomial,
    PointedClass,
    chern_B,
    chern_F,
    diagonal_monomial,
    epsilon_push,
    pc_delta,
    pc_delta_sym,
    pc_diagonal,
    pc_from_kl,
    pc_monomial,
    pc_mul,
    pc_one,
    pc_psihat,
    pc_zero,
    psihat_monomial,
    pushed_chern,
    rank_F,
    theorem5_class,
    unit_monomial,
)
from .rings import (
    DomainError,
    FixedGens,
    GradedPoly,
    InputError,
    Rational,
    bernoulli,
    poly_mul,
    truncated_inverse,
)
from .verify import CHECKS, CheckResult, run_all, run_check

__all__ = [
    "BlockMonomial",
    "CHECKS",
    "Certificate",
    "CertificateError",
    "ChainStratum",
    "CheckResult",
    "CurveClass",
    "DomainError",
    "FixedGens",
    "GradedPoly",
    "InputError",
    "KLGens",
    "KLPoly",
    "LocalSeries",
    "PairSpec",
    "PairingMatrix",
    "PointedClass",
    "Rational",
    "SCHEMA",
    "bernoulli",
    "cc_omega",
    "cc_pullback",
    "cc_sections_sum",
    "cc_sigma",
    "chern_B",
    "chern_E_dual",
    "chern_F",
    "compositions",
    "conifold_F",
    "conifold_N",
    "count_P",
    "diagonal_monomial",
    "emit_kl",
    "emit_pointed",
    "emit_poly",
    "emit_rational",
    "enumerate_P",
    "epsilon_push",
    "format_kl",
    "genus_of",
    "intersect_M02d",
    "kappa_class",
    "kl_gens",
    "kl_is_kappa_only",
    "kl_one",
    "kl_scalar",
    "kl_zero",
    "lambda_class",
    "lambda_to_kappa",
    "pairing_entry",
    "parse_kl",
    "parse_kl_pretty",
    "parse_pointed",
    "parse_poly",
    "parse_rational",
    "pc_delta",
    "pc_delta_sym",
    "pc_diagonal",
    "pc_from_kl",
    "pc_monomial",
    "pc_mul",
    "pc_one",
    "pc_psihat",
    "pc_zero",
    "pi_push",
    "poincare_Q02",
    "poly_mul",
    "prop8_relation",
    "psi_integral_M0n",
    "psihat_monomial",
    "pushed_chern",
    "rank_F",
    "rank_certificate",
    "run_all",
    "run_check",
    "set_partitions",
    "theorem5_class",
    "truncated_inverse",
    "unit_monomial",
]

__version__ = "0.1.0"
