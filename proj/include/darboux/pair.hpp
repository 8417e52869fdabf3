#pragma once

#include <variant>

#include "darboux/witness.hpp"

namespace darboux {

// How a common Darboux polynomial was obtained.
enum class CertificateBranch {
    DeltaNonconstant,  // f is the nonconstant determinant of the pair
    DegenerateKernel,  // determinant zero: f extracted from the kernel of the reduced derivation
};

// Certificate that f is a common Darboux polynomial:
// apply(d_i, f) == lambda_i * f exactly, f nonconstant.
struct CommonDarboux {
    Poly f;
    Poly lambda1;
    Poly lambda2;
    CertificateBranch branch;
};

// Certificate that the pair is a Jacobian pair: d_i == jacobian_derivation(u_i)
// and jacobian_det(u1, u2) == c != 0, which rules out any common Darboux
// polynomial. Potentials are normalized to u_i(0, 0) = 0.
struct JacobianPair {
    Poly u1;
    Poly u2;
    Rat c;
};

using PairOutcome = std::variant<CommonDarboux, JacobianPair>;

// Witnesses linear dependence over the polynomial ring:
// d1 == f * d0 and d2 == g * d0 with d0 reduced and normalized.
struct DependentDecomposition {
    Derivation d0;
    Poly f;
    Poly g;
};

// Requires delta(d1, d2) == 0 and both derivations nonzero; throws
// not_dependent / zero_derivation otherwise.
DependentDecomposition decompose_dependent(const Derivation& d1, const Derivation& d2);

// The dichotomy for a commuting, constant-independent, nonzero pair:
//   - delta nonzero and nonconstant -> CommonDarboux(delta, div d1, div d2);
//   - delta a nonzero constant      -> JacobianPair(potential(d1), potential(d2), delta);
//   - delta zero                    -> CommonDarboux from the reduced numerator or
//                                      denominator of f/g in decompose_dependent.
// Throws not_commuting, linearly_dependent, zero_derivation.
PairOutcome analyze(const Derivation& d1, const Derivation& d2);

// Exact re-check of a certificate against the pair it claims to describe.
// Trusts only poly/derivation primitives; returns false on any failed check.
bool verify_outcome(const Derivation& d1, const Derivation& d2, const PairOutcome& outcome);

// Given a witness for d and a nonzero d1 commuting with d, produces a witness
// for d1: rescaled cofactor when the pair is constant-dependent, the common
// polynomial when analysis finds one, and the potential of d1 (a first
// integral, cofactor 0) when the pair is a Jacobian pair.
// Throws invalid_witness, not_commuting, zero_derivation; verification_failure
// signals an internal inconsistency.
DarbouxWitness propagate(const Derivation& d, const DarbouxWitness& w, const Derivation& d1);

}  // namespace darboux
