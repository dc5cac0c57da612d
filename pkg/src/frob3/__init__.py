"""Frobenius numbers of three-generator numerical semigroups.

Closed forms built from remainder arithmetic, plus the brute-force oracle
they are verified against.  See the module docstrings of `frob3.engine`,
`frob3.quotients` and `frob3.semigroup` for the formulas.
"""

from .engine import (
    AgreementFailureError,
    CoeffPair,
    FrobeniusResult,
    HypothesisNotMetError,
    IdentityViolationError,
    InvalidGeneratorsError,
    coeff_pair,
    frobenius,
    frobenius_fg,
    frobenius_johnson_crosscheck,
    frobenius_main,
    product_reduction_audit,
    sylvester,
)
from .modular import NotInvertibleError, mod_inverse, rem, rem_product
from .oracle import L_oracle, frobenius_oracle, representable, tau_oracle
from .quotients import (
    CoprimeTriple,
    IndexContractError,
    LValues,
    TauSet,
    iter_coprime_triples,
    l_values,
    phi_set,
    tau_direct,
    tau_from_correspondence,
)
from .semigroup import (
    NotCoprimeError,
    QuotientDescriptor,
    TwoGenSemigroup,
    fundamental_gaps,
    gaps_two_gen,
    is_fundamental_gap,
    member_quotient,
    member_two_gen,
)

__version__ = "0.1.0"

__all__ = [
    "frobenius",
    "frobenius_main",
    "frobenius_johnson_crosscheck",
    "frobenius_fg",
    "sylvester",
    "coeff_pair",
    "product_reduction_audit",
    "FrobeniusResult",
    "CoeffPair",
    "l_values",
    "tau_direct",
    "tau_from_correspondence",
    "phi_set",
    "iter_coprime_triples",
    "CoprimeTriple",
    "TauSet",
    "LValues",
    "TwoGenSemigroup",
    "QuotientDescriptor",
    "member_two_gen",
    "member_quotient",
    "gaps_two_gen",
    "fundamental_gaps",
    "is_fundamental_gap",
    "rem",
    "mod_inverse",
    "rem_product",
    "representable",
    "frobenius_oracle",
    "L_oracle",
    "tau_oracle",
    "NotInvertibleError",
    "NotCoprimeError",
    "InvalidGeneratorsError",
    "IndexContractError",
    "HypothesisNotMetError",
    "IdentityViolationError",
    "AgreementFailureError",
]
