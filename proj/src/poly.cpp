#include "darboux/poly.hpp"

#include <utility>
#include <vector>

namespace darboux {

Rat rat_pow(const Rat& base, unsigned long exp) {
    if (exp == 0) return Rat(1);
    Rat out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), exp);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), exp);
    return out;  // canonical since base was
}

Rat rat_from_string(const std::string& text) {
    Rat r;
    if (mpq_set_str(r.get_mpq_t(), text.c_str(), 10) != 0)
        throw std::invalid_argument("malformed rational literal: " + text);
    if (r.get_den() == 0) throw zero_input("zero denominator in rational literal: " + text);
    r.canonicalize();
    return r;
}

void Poly::insert(Monomial m, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rat Poly::constant_value() const {
    if (terms_.empty()) return Rat(0);
    return terms_.begin()->second;
}

unsigned Poly::degree_in(Var v) const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(v));
    return d;
}

Rat Poly::coeff(Monomial m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

Poly& Poly::operator+=(const Poly& rhs) {
    for (const auto& [m, c] : rhs.terms_) insert(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
    for (const auto& [m, c] : rhs.terms_) insert(m, -c);
    return *this;
}

Poly& Poly::operator*=(const Rat& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, a] : terms_) a *= c;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            out.insert({ma.dx + mb.dx, ma.dy + mb.dy}, ca * cb);
    return out;
}

Poly operator-(Poly a) {
    for (auto& [m, c] : a.terms_) c = -c;
    return a;
}

Poly Poly::pow(unsigned e) const {
    Poly out(1);
    for (unsigned i = 0; i < e; ++i) out *= *this;
    return out;
}

Poly Poly::partial(Var v) const {
    Poly out;
    for (const auto& [m, c] : terms_) {
        unsigned e = m.exponent(v);
        if (e == 0) continue;
        Monomial n = m;
        (v == Var::x ? n.dx : n.dy) = e - 1;
        out.insert(n, c * static_cast<long>(e));
    }
    return out;
}

Poly Poly::integrate(Var v) const {
    Poly out;
    for (const auto& [m, c] : terms_) {
        Monomial n = m;
        unsigned e = m.exponent(v) + 1;
        (v == Var::x ? n.dx : n.dy) = e;
        out.insert(n, c / static_cast<long>(e));
    }
    return out;
}

Poly Poly::substitute_zero(Var v) const {
    Poly out;
    for (const auto& [m, c] : terms_)
        if (m.exponent(v) == 0) out.insert(m, c);
    return out;
}

Rat Poly::evaluate(const Rat& at_x, const Rat& at_y) const {
    Rat out(0);
    for (const auto& [m, c] : terms_) out += c * rat_pow(at_x, m.dx) * rat_pow(at_y, m.dy);
    return out;
}

NormalForm normal_form(const Poly& p) {
    if (p.is_zero()) throw zero_input("normal_form of the zero polynomial");
    Int num_gcd(0), den_lcm(1);
    for (const auto& [m, c] : p.terms()) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    }
    Rat unit = make_rat(num_gcd, den_lcm);
    if (p.leading_coeff() < 0) unit = -unit;
    return {unit, p * (Rat(1) / unit)};
}

Poly normalized(const Poly& p) { return p.is_zero() ? p : normal_form(p).primitive; }

std::optional<Poly> divide_exact(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw zero_input("division by the zero polynomial");
    Poly q;
    Poly r = a;
    const Monomial bm = b.leading_monomial();
    const Rat bc = b.leading_coeff();
    while (!r.is_zero()) {
        Monomial rm = r.leading_monomial();
        if (rm.dx < bm.dx || rm.dy < bm.dy) return std::nullopt;
        Poly t = Poly::term({rm.dx - bm.dx, rm.dy - bm.dy}, r.leading_coeff() / bc);
        q += t;
        r -= t * b;
    }
    return q;
}

namespace {

// Exact division known to succeed by construction.
Poly exact(std::optional<Poly> q) {
    if (!q) throw verification_failure("internal: expected exact polynomial division failed");
    return std::move(*q);
}

// Coefficient of y^k, a polynomial in x only.
Poly y_coefficient(const Poly& p, unsigned k) {
    Poly c;
    for (const auto& [m, a] : p.terms())
        if (m.dy == k) c += Poly::term({m.dx, 0}, a);
    return c;
}

// Division with remainder for polynomials in the single variable v.
std::pair<Poly, Poly> divmod_univariate(Poly a, const Poly& b, Var v) {
    Poly q;
    const unsigned db = b.degree_in(v);
    const Monomial blead = v == Var::x ? Monomial{db, 0} : Monomial{0, db};
    const Rat bc = b.coeff(blead);
    while (!a.is_zero() && a.degree_in(v) >= db) {
        unsigned da = a.degree_in(v);
        Monomial alead = v == Var::x ? Monomial{da, 0} : Monomial{0, da};
        Monomial qm = v == Var::x ? Monomial{da - db, 0} : Monomial{0, da - db};
        Poly t = Poly::term(qm, a.coeff(alead) / bc);
        q += t;
        a -= t * b;
    }
    return {q, a};
}

Poly gcd_univariate(Poly a, Poly b, Var v) {
    while (!b.is_zero()) {
        Poly r = divmod_univariate(std::move(a), b, v).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// gcd over Q[x] of the y-coefficients, normalized. p must be nonzero.
Poly content_y(const Poly& p) {
    Poly c;
    for (unsigned k = 0; k <= p.degree_in(Var::y); ++k) {
        Poly coef = y_coefficient(p, k);
        if (coef.is_zero()) continue;
        c = c.is_zero() ? coef : gcd_univariate(std::move(c), coef, Var::x);
        if (c.is_constant()) break;
    }
    return normalized(c);
}

// Classical pseudo-remainder in y: repeatedly scale by the divisor's leading
// y-coefficient so the top y-block cancels. Result is an associate of
// prem(a, b), which is all the primitive remainder sequence needs.
Poly pseudo_rem_y(Poly a, const Poly& b) {
    const unsigned db = b.degree_in(Var::y);
    const Poly lcb = y_coefficient(b, db);
    while (!a.is_zero() && a.degree_in(Var::y) >= db) {
        unsigned da = a.degree_in(Var::y);
        Poly lca = y_coefficient(a, da);
        a = lcb * a - lca * Poly::term({0, da - db}, Rat(1)) * b;
    }
    return a;
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) throw zero_input("gcd(0, 0) is undefined");
    if (a.is_zero()) return normalized(b);
    if (b.is_zero()) return normalized(a);

    const Poly ca = content_y(a);
    const Poly cb = content_y(b);
    const Poly c = gcd_univariate(ca, cb, Var::x);

    Poly A = exact(divide_exact(a, ca));
    Poly B = exact(divide_exact(b, cb));
    if (A.degree_in(Var::y) < B.degree_in(Var::y)) std::swap(A, B);
    while (!B.is_zero()) {
        Poly r = pseudo_rem_y(std::move(A), B);
        A = std::move(B);
        B = r.is_zero() ? std::move(r) : exact(divide_exact(r, content_y(r)));
    }
    return normalized(c * A);
}

Poly squarefree_part(const Poly& a) {
    if (a.is_zero()) throw zero_input("squarefree_part of the zero polynomial");
    Poly g = gcd(a, a.partial(Var::x));
    g = gcd(g, a.partial(Var::y));
    return normalized(exact(divide_exact(a, g)));
}

}  // namespace darboux
