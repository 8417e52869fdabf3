#pragma once

#include "darboux/poly.hpp"

namespace darboux {

// Rational function in lowest terms. The denominator is normalized
// (integer-primitive, positive leading coefficient) and coprime to the
// numerator; zero is stored as 0/1. Immutable after construction.
class RatFunc {
public:
    RatFunc() : den_(Poly(1)) {}
    explicit RatFunc(Poly num) : num_(std::move(num)), den_(Poly(1)) {}
    RatFunc(const Poly& num, const Poly& den);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

    friend bool operator==(const RatFunc&, const RatFunc&) = default;

private:
    Poly num_;
    Poly den_;
};

}  // namespace darboux
