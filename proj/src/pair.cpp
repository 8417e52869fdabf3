#include "darboux/pair.hpp"

#include <utility>

#include "darboux/ratfunc.hpp"

namespace darboux {

DependentDecomposition decompose_dependent(const Derivation& d1, const Derivation& d2) {
    if (d1.is_zero() || d2.is_zero())
        throw zero_derivation("decompose_dependent requires nonzero derivations");
    if (!delta(d1, d2).is_zero())
        throw not_dependent("derivations are independent over the polynomial ring");

    ReducedForm r = reduce(d1);
    // delta == 0 with d0 reduced forces d2 = g * d0 for a polynomial g, so a
    // failed division or component mismatch means a bug, not bad input.
    const bool use_p = !r.d0.p.is_zero();
    std::optional<Poly> g = divide_exact(use_p ? d2.p : d2.q, use_p ? r.d0.p : r.d0.q);
    if (!g || (use_p ? d2.q : d2.p) != *g * (use_p ? r.d0.q : r.d0.p))
        throw verification_failure("dependent decomposition did not reconstruct the second input");
    return {std::move(r.d0), std::move(r.mu), std::move(*g)};
}

PairOutcome analyze(const Derivation& d1, const Derivation& d2) {
    if (d1.is_zero() || d2.is_zero()) throw zero_derivation("analyze requires nonzero derivations");
    if (!bracket(d1, d2).is_zero()) throw not_commuting("derivations do not commute");
    if (!k_linearly_independent(d1, d2))
        throw linearly_dependent("derivations are proportional over the constants");

    PairOutcome outcome = [&]() -> PairOutcome {
        const Poly det = delta(d1, d2);
        if (det.is_zero()) {
            // Degenerate module rank: d1 = f*d0, d2 = g*d0 and f/g is a rational
            // first integral of d0; its reduced numerator and denominator are
            // Darboux for both inputs, and independence over the constants
            // guarantees at least one of them is nonconstant.
            DependentDecomposition dec = decompose_dependent(d1, d2);
            RatFunc kernel_element(dec.f, dec.g);
            Poly f = kernel_element.num().is_constant() ? kernel_element.den()
                                                        : kernel_element.num();
            std::optional<std::pair<Poly, Poly>> cofactors = is_common_darboux(d1, d2, f);
            if (!cofactors)
                throw verification_failure("kernel element is not a common Darboux polynomial");
            return CommonDarboux{std::move(f), std::move(cofactors->first),
                                 std::move(cofactors->second), CertificateBranch::DegenerateKernel};
        }
        if (det.is_constant()) {
            // d_i(det) = det * div(d_i) for a commuting pair, so a constant
            // nonzero determinant forces both divergences to vanish and the
            // potentials exist.
            try {
                return JacobianPair{potential(d1), potential(d2), det.constant_value()};
            } catch (const not_divergence_free&) {
                throw verification_failure(
                    "constant determinant but nonzero divergence on a commuting pair");
            }
        }
        return CommonDarboux{det, divergence(d1), divergence(d2),
                             CertificateBranch::DeltaNonconstant};
    }();

    if (!verify_outcome(d1, d2, outcome))
        throw verification_failure("analyze produced a certificate that fails verification");
    return outcome;
}

bool verify_outcome(const Derivation& d1, const Derivation& d2, const PairOutcome& outcome) {
    if (const auto* cd = std::get_if<CommonDarboux>(&outcome)) {
        if (cd->f.is_constant()) return false;
        return apply(d1, cd->f) == cd->lambda1 * cd->f && apply(d2, cd->f) == cd->lambda2 * cd->f;
    }
    const auto& jp = std::get<JacobianPair>(outcome);
    if (jp.c == 0) return false;
    return d1 == jacobian_derivation(jp.u1) && d2 == jacobian_derivation(jp.u2) &&
           jacobian_det(jp.u1, jp.u2) == Poly(jp.c);
}

DarbouxWitness propagate(const Derivation& d, const DarbouxWitness& w, const Derivation& d1) {
    if (d.is_zero() || d1.is_zero())
        throw zero_derivation("propagate requires nonzero derivations");
    if (w.f.is_constant() || apply(d, w.f) != w.cofactor * w.f)
        throw invalid_witness("witness does not certify the first derivation");
    if (!bracket(d, d1).is_zero()) throw not_commuting("derivations do not commute");

    if (!k_linearly_independent(d, d1)) {
        // d1 is a nonzero constant multiple of d, so w.f stays Darboux and only
        // the cofactor rescales.
        std::optional<Poly> cof = cofactor_of(d1, w.f);
        if (!cof) throw verification_failure("witness failed to transfer to a proportional pair");
        return {w.f, std::move(*cof)};
    }

    PairOutcome outcome = analyze(d, d1);
    if (const auto* cd = std::get_if<CommonDarboux>(&outcome)) return {cd->f, cd->lambda2};

    // Jacobian pair: d1 is the Jacobian derivation of its own potential u2, so
    // u2 is a first integral of d1 (det J(u2, u2) = 0) and nonconstant because
    // det J(u1, u2) is a nonzero constant.
    const auto& jp = std::get<JacobianPair>(outcome);
    if (!apply(d1, jp.u2).is_zero())
        throw verification_failure("potential of a Jacobian derivation is not its first integral");
    return {jp.u2, Poly(0L)};
}

}  // namespace darboux
