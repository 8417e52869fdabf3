"""Exact Darboux-polynomial certificates for commuting derivations of Q[x,y].

Every operation is exact over the rationals; coefficients cross the language
boundary as `fractions.Fraction`.
"""

from ._core import (
    CertificateBranch,
    CertificateError,
    CommonDarboux,
    ConstantInputError,
    DarbouxError,
    DarbouxWitness,
    DependentDecomposition,
    Derivation,
    InvalidWitnessError,
    JacobianPair,
    LinearlyDependentError,
    NotCommutingError,
    NotDependentError,
    NotDivergenceFreeError,
    ParseError,
    Poly,
    ReducedForm,
    VerificationFailureError,
    ZeroDerivationError,
    ZeroInputError,
    analyze,
    apply,
    bracket,
    certificate_json,
    cofactor_of,
    decompose_dependent,
    delta,
    divergence,
    divide_exact,
    first_integrals,
    format_poly,
    gcd,
    is_common_darboux,
    jacobian_derivation,
    jacobian_det,
    k_linearly_independent,
    normalized,
    parse_poly,
    potential,
    propagate,
    reduce,
    solve_fixed_cofactor,
    squarefree_part,
    verify_certificate_json,
    verify_outcome,
)

__all__ = [
    "CertificateBranch",
    "CertificateError",
    "CommonDarboux",
    "ConstantInputError",
    "DarbouxError",
    "DarbouxWitness",
    "DependentDecomposition",
    "Derivation",
    "InvalidWitnessError",
    "JacobianPair",
    "LinearlyDependentError",
    "NotCommutingError",
    "NotDependentError",
    "NotDivergenceFreeError",
    "ParseError",
    "Poly",
    "ReducedForm",
    "VerificationFailureError",
    "ZeroDerivationError",
    "ZeroInputError",
    "analyze",
    "apply",
    "bracket",
    "certificate_json",
    "cofactor_of",
    "decompose_dependent",
    "delta",
    "divergence",
    "divide_exact",
    "first_integrals",
    "format_poly",
    "gcd",
    "is_common_darboux",
    "jacobian_derivation",
    "jacobian_det",
    "k_linearly_independent",
    "normalized",
    "parse_poly",
    "potential",
    "propagate",
    "reduce",
    "solve_fixed_cofactor",
    "squarefree_part",
    "verify_certificate_json",
    "verify_outcome",
]
