#pragma once

#include "darboux/poly.hpp"
#include "darboux/ratfunc.hpp"

namespace darboux {

// A derivation p * d/dx + q * d/dy of the polynomial ring Q[x, y]. The zero
// derivation is representable (it arises as a bracket) but rejected by the
// analyzer entry points.
struct Derivation {
    Poly p;
    Poly q;

    bool is_zero() const { return p.is_zero() && q.is_zero(); }

    friend bool operator==(const Derivation&, const Derivation&) = default;
};

inline Derivation operator*(const Poly& f, const Derivation& d) { return {f * d.p, f * d.q}; }

// D(f) = p * df/dx + q * df/dy. Satisfies the Leibniz rule exactly.
Poly apply(const Derivation& d, const Poly& f);

// Quotient-rule extension to rational functions, returned in lowest terms.
RatFunc apply(const Derivation& d, const RatFunc& r);

// Commutator [a, b]; zero exactly when the pair commutes.
Derivation bracket(const Derivation& a, const Derivation& b);

Poly divergence(const Derivation& d);

// Determinant p_a*q_b - q_a*p_b of the coefficient matrix of the pair.
Poly delta(const Derivation& a, const Derivation& b);

struct ReducedForm {
    Derivation d0;  // coprime components, jointly normalized
    Poly mu;        // d == mu * d0
};

// Splits off the gcd of the components. d0 is canonical: the concatenated
// coefficient vector of (p, q) is integer-primitive with positive leading
// entry (p before q, graded-lex within each). Throws zero_derivation.
ReducedForm reduce(const Derivation& d);

// True when no nontrivial constant combination of the two vanishes
// (rank-2 test on the stacked coefficient vectors).
bool k_linearly_independent(const Derivation& a, const Derivation& b);

// The derivation f -> u_x*f_y - u_y*f_x, i.e. -u_y * d/dx + u_x * d/dy.
// Always divergence-free, with first integral u.
Derivation jacobian_derivation(const Poly& u);

// u_x*v_y - u_y*v_x; antisymmetric.
Poly jacobian_det(const Poly& u, const Poly& v);

// For divergence-free d, the unique u with du/dx = d.q, du/dy = -d.p and
// u(0,0) = 0, so jacobian_derivation(potential(d)) == d.
// Throws not_divergence_free otherwise.
Poly potential(const Derivation& d);

}  // namespace darboux
