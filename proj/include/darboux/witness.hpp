#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "darboux/derivation.hpp"

namespace darboux {

// Certifies that f is a Darboux polynomial of some derivation d:
// f is nonconstant and apply(d, f) == cofactor * f exactly.
struct DarbouxWitness {
    Poly f;
    Poly cofactor;

    friend bool operator==(const DarbouxWitness&, const DarbouxWitness&) = default;
};

// The cofactor of f when f divides apply(d, f), std::nullopt otherwise.
// Throws constant_input when f is constant.
std::optional<Poly> cofactor_of(const Derivation& d, const Poly& f);

// Basis of { F : total_degree(F) <= max_degree, apply(d, F) == lambda * F },
// presented in reduced echelon form over the graded-lex monomial basis
// (largest monomial first). When lambda == 0 the trivial constant solution is
// projected out, so every reported element is nonconstant. An empty result
// means no nonconstant solution exists at this bound.
std::vector<Poly> solve_fixed_cofactor(const Derivation& d, const Poly& lambda, unsigned max_degree);

// solve_fixed_cofactor with lambda = 0: polynomial kernel elements of d.
std::vector<Poly> first_integrals(const Derivation& d, unsigned max_degree);

// The cofactor pair (for d1, for d2) when f is Darboux for both derivations,
// std::nullopt otherwise. Throws constant_input when f is constant.
std::optional<std::pair<Poly, Poly>> is_common_darboux(const Derivation& d1, const Derivation& d2,
                                                       const Poly& f);

}  // namespace darboux
