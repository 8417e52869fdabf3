#pragma once

#include <map>
#include <optional>
#include <utility>

#include "darboux/errors.hpp"
#include "darboux/rational.hpp"

namespace darboux {

enum class Var { x, y };

constexpr Var other(Var v) { return v == Var::x ? Var::y : Var::x; }

// Exponent pair of a monomial x^dx * y^dy.
struct Monomial {
    unsigned dx = 0;
    unsigned dy = 0;

    unsigned total() const { return dx + dy; }
    unsigned exponent(Var v) const { return v == Var::x ? dx : dy; }

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Graded-lexicographic order: total degree first, then x beats y.
struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        if (a.total() != b.total()) return a.total() < b.total();
        return a.dx < b.dx;
    }
};

// Sparse bivariate polynomial over Rat. Canonical form: no zero coefficient
// is stored, and the term map iterates in ascending graded-lex order, so two
// polynomials are equal exactly when their maps are.
class Poly {
public:
    using TermMap = std::map<Monomial, Rat, MonomialLess>;

    Poly() = default;
    explicit Poly(const Rat& c) { insert({0, 0}, c); }
    explicit Poly(long c) { insert({0, 0}, Rat(c)); }

    static Poly var(Var v) { return term(v == Var::x ? Monomial{1, 0} : Monomial{0, 1}, Rat(1)); }
    static Poly x() { return var(Var::x); }
    static Poly y() { return var(Var::y); }

    static Poly term(Monomial m, const Rat& c) {
        Poly p;
        p.insert(m, c);
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{0, 0}); }

    // Value of a constant polynomial (0 for the zero polynomial).
    Rat constant_value() const;

    // -1 for the zero polynomial.
    int total_degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first.total()); }
    unsigned degree_in(Var v) const;

    const TermMap& terms() const { return terms_; }
    Rat coeff(Monomial m) const;

    // Largest term under graded-lex; polynomial must be nonzero.
    Monomial leading_monomial() const { return terms_.rbegin()->first; }
    Rat leading_coeff() const { return terms_.rbegin()->second; }

    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    Poly& operator*=(const Poly& rhs) { return *this = *this * rhs; }
    Poly& operator*=(const Rat& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rat& c) { return a *= c; }
    friend Poly operator*(const Rat& c, Poly a) { return a *= c; }
    friend Poly operator-(Poly a);

    friend bool operator==(const Poly&, const Poly&) = default;

    Poly pow(unsigned e) const;

    // Formal partial derivative.
    Poly partial(Var v) const;

    // Antiderivative with no constant term in v: partial(integrate(p,v),v) == p.
    Poly integrate(Var v) const;

    // Substitutes 0 for v, dropping every term that contains it.
    Poly substitute_zero(Var v) const;

    Rat evaluate(const Rat& at_x, const Rat& at_y) const;

private:
    void insert(Monomial m, const Rat& c);

    TermMap terms_;
};

// Decomposition p == unit * primitive with primitive integer-primitive and
// positive leading coefficient under graded-lex. Requires p != 0.
struct NormalForm {
    Rat unit;
    Poly primitive;
};

NormalForm normal_form(const Poly& p);

// The canonical associate: normal_form(p).primitive, with normalized(0) == 0.
Poly normalized(const Poly& p);

// Exact quotient a / b when it exists, std::nullopt when b does not divide a.
// Throws zero_input when b == 0.
std::optional<Poly> divide_exact(const Poly& a, const Poly& b);

// Normalized greatest common divisor (primitive remainder sequence with y as
// the main variable over Q[x]). Throws zero_input when both arguments vanish.
Poly gcd(const Poly& a, const Poly& b);

// a / gcd(a, da/dx, da/dy), normalized: same irreducible divisors as a, each
// once. Throws zero_input when a == 0.
Poly squarefree_part(const Poly& a);

}  // namespace darboux
