#pragma once

#include <gmpxx.h>

#include <string>

namespace darboux {

// Exact arbitrary-precision rational scalar. GMP keeps values canonical
// (lowest terms, positive denominator, zero stored as 0/1) provided raw
// numerator/denominator pairs go through make_rat or ordinary arithmetic.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat make_rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat make_rat(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

Rat rat_pow(const Rat& base, unsigned long exp);

// "n" for integers, "n/d" otherwise.
inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

// Parses the formats emitted by rat_to_string. Throws zero_input on a zero
// denominator, std::invalid_argument on malformed text.
Rat rat_from_string(const std::string& text);

}  // namespace darboux
