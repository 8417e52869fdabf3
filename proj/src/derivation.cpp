#include "darboux/derivation.hpp"

#include <set>
#include <vector>

#include "darboux/linalg.hpp"

namespace darboux {

Poly apply(const Derivation& d, const Poly& f) {
    return d.p * f.partial(Var::x) + d.q * f.partial(Var::y);
}

RatFunc apply(const Derivation& d, const RatFunc& r) {
    Poly n = apply(d, r.num()) * r.den() - r.num() * apply(d, r.den());
    return RatFunc(n, r.den() * r.den());
}

Derivation bracket(const Derivation& a, const Derivation& b) {
    return {apply(a, b.p) - apply(b, a.p), apply(a, b.q) - apply(b, a.q)};
}

Poly divergence(const Derivation& d) { return d.p.partial(Var::x) + d.q.partial(Var::y); }

Poly delta(const Derivation& a, const Derivation& b) { return a.p * b.q - a.q * b.p; }

namespace {

// Joint scaling of a component pair: (p, q) == unit * (p', q') with the
// concatenated coefficients integer-primitive and the leading entry positive
// (p's graded-lex leading coefficient, falling back to q's when p == 0).
struct PairNormalForm {
    Rat unit;
    Poly p;
    Poly q;
};

PairNormalForm normal_form_pair(const Poly& p, const Poly& q) {
    Int num_gcd(0), den_lcm(1);
    for (const Poly* part : {&p, &q}) {
        for (const auto& [m, c] : part->terms()) {
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
        }
    }
    Rat unit = make_rat(num_gcd, den_lcm);
    const Rat lead = p.is_zero() ? q.leading_coeff() : p.leading_coeff();
    if (lead < 0) unit = -unit;
    const Rat inv = Rat(1) / unit;
    return {unit, p * inv, q * inv};
}

}  // namespace

ReducedForm reduce(const Derivation& d) {
    if (d.is_zero()) throw zero_derivation("cannot reduce the zero derivation");
    const Poly g = gcd(d.p, d.q);
    const Poly p0 = *divide_exact(d.p, g);
    const Poly q0 = *divide_exact(d.q, g);
    PairNormalForm nf = normal_form_pair(p0, q0);
    return {Derivation{nf.p, nf.q}, g * nf.unit};
}

bool k_linearly_independent(const Derivation& a, const Derivation& b) {
    std::set<Monomial, MonomialLess> sp, sq;
    for (const Derivation* d : {&a, &b}) {
        for (const auto& [m, c] : d->p.terms()) sp.insert(m);
        for (const auto& [m, c] : d->q.terms()) sq.insert(m);
    }
    RatMatrix m(2, sp.size() + sq.size());
    std::size_t col = 0;
    for (const Monomial& mono : sp) {
        m.at(0, col) = a.p.coeff(mono);
        m.at(1, col) = b.p.coeff(mono);
        ++col;
    }
    for (const Monomial& mono : sq) {
        m.at(0, col) = a.q.coeff(mono);
        m.at(1, col) = b.q.coeff(mono);
        ++col;
    }
    return rank(m) == 2;
}

Derivation jacobian_derivation(const Poly& u) { return {-u.partial(Var::y), u.partial(Var::x)}; }

Poly jacobian_det(const Poly& u, const Poly& v) {
    return u.partial(Var::x) * v.partial(Var::y) - u.partial(Var::y) * v.partial(Var::x);
}

Poly potential(const Derivation& d) {
    if (!divergence(d).is_zero()) throw not_divergence_free("derivation has nonzero divergence");
    // u(x, y) = int_0^x q(t, y) dt - int_0^y p(0, t) dt, so u(0, 0) = 0.
    return d.q.integrate(Var::x) - d.p.substitute_zero(Var::x).integrate(Var::y);
}

}  // namespace darboux
