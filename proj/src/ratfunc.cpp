#include "darboux/ratfunc.hpp"

namespace darboux {

RatFunc::RatFunc(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw zero_input("rational function with zero denominator");
    if (num.is_zero()) {
        num_ = Poly();
        den_ = Poly(1);
        return;
    }
    Poly g = gcd(num, den);
    Poly n = *divide_exact(num, g);
    Poly d = *divide_exact(den, g);
    NormalForm nf = normal_form(d);
    num_ = n * (Rat(1) / nf.unit);
    den_ = nf.primitive;
}

}  // namespace darboux
