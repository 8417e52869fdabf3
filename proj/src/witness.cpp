#include "darboux/witness.hpp"

#include <map>
#include <stdexcept>

#include "darboux/linalg.hpp"

namespace darboux {

std::optional<Poly> cofactor_of(const Derivation& d, const Poly& f) {
    if (f.is_constant()) throw constant_input("Darboux polynomials must be nonconstant");
    return divide_exact(apply(d, f), f);
}

namespace {

// All monomials of total degree <= bound, largest first under graded lex.
std::vector<Monomial> monomial_basis_desc(unsigned bound) {
    std::vector<Monomial> basis;
    for (unsigned total = bound + 1; total-- > 0;)
        for (unsigned dx = total + 1; dx-- > 0;) basis.push_back({dx, total - dx});
    return basis;
}

}  // namespace

std::vector<Poly> solve_fixed_cofactor(const Derivation& d, const Poly& lambda,
                                       unsigned max_degree) {
    if (max_degree < 1) throw std::invalid_argument("max_degree must be at least 1");

    const std::vector<Monomial> basis = monomial_basis_desc(max_degree);

    // apply(d, F) - lambda*F is linear in F's coefficients; one matrix column
    // per basis monomial, rows indexed by the union of the image supports.
    std::vector<Poly> images;
    images.reserve(basis.size());
    std::map<Monomial, std::size_t, MonomialLess> row_of;
    for (const Monomial& m : basis) {
        const Poly f = Poly::term(m, Rat(1));
        Poly image = apply(d, f) - lambda * f;
        for (const auto& [mono, c] : image.terms()) row_of.emplace(mono, 0);
        images.push_back(std::move(image));
    }
    std::size_t next_row = 0;
    for (auto& [mono, row] : row_of) row = next_row++;

    RatMatrix system(row_of.size(), basis.size());
    for (std::size_t col = 0; col < images.size(); ++col)
        for (const auto& [mono, c] : images[col].terms()) system.at(row_of.at(mono), col) = c;

    std::vector<Poly> solutions;
    for (const RatVector& v : nullspace(system)) {
        Poly f;
        for (std::size_t col = 0; col < basis.size(); ++col)
            if (v[col] != 0) f += Poly::term(basis[col], v[col]);
        if (lambda.is_zero()) f -= Poly(f.coeff({0, 0}));  // drop the trivial constant solution
        if (!f.is_zero()) solutions.push_back(std::move(f));
    }
    return solutions;
}

std::vector<Poly> first_integrals(const Derivation& d, unsigned max_degree) {
    return solve_fixed_cofactor(d, Poly(0L), max_degree);
}

std::optional<std::pair<Poly, Poly>> is_common_darboux(const Derivation& d1, const Derivation& d2,
                                                       const Poly& f) {
    std::optional<Poly> l1 = cofactor_of(d1, f);
    if (!l1) return std::nullopt;
    std::optional<Poly> l2 = cofactor_of(d2, f);
    if (!l2) return std::nullopt;
    return std::make_pair(std::move(*l1), std::move(*l2));
}

}  // namespace darboux
