#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace darboux {

// Base class for every exception thrown by this library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A zero value where a nonzero one is required (zero divisor, gcd(0,0), ...).
struct zero_input : error {
    using error::error;
};

// The zero derivation was passed to an operation that rejects it.
struct zero_derivation : error {
    using error::error;
};

// A constant polynomial where a nonconstant one is required.
struct constant_input : error {
    using error::error;
};

// The two derivations are not linearly dependent over the polynomial ring.
struct not_dependent : error {
    using error::error;
};

// The two derivations do not commute.
struct not_commuting : error {
    using error::error;
};

// The two derivations are linearly dependent over the constants.
struct linearly_dependent : error {
    using error::error;
};

// A derivation with nonzero divergence where a divergence-free one is needed.
struct not_divergence_free : error {
    using error::error;
};

// The supplied witness does not certify the derivation it claims to.
struct invalid_witness : error {
    using error::error;
};

// An internally produced certificate failed an exact re-check.
struct verification_failure : error {
    using error::error;
};

// A certificate document does not match the expected schema.
struct certificate_error : error {
    using error::error;
};

// Syntax error in a polynomial expression. Carries the byte offset of the
// offending token and a description of what would have been accepted there.
class parse_error : public error {
public:
    parse_error(std::size_t position, std::string expected, const std::string& found)
        : error("parse error at position " + std::to_string(position) + ": expected " + expected +
                ", found " + found),
          position_(position),
          expected_(std::move(expected)) {}

    std::size_t position() const { return position_; }
    const std::string& expected() const { return expected_; }

private:
    std::size_t position_;
    std::string expected_;
};

}  // namespace darboux
