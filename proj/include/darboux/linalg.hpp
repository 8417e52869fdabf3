#pragma once

#include <cstddef>
#include <vector>

#include "darboux/rational.hpp"

namespace darboux {

using RatVector = std::vector<Rat>;

// Dense row-major matrix of exact rationals.
struct RatMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Rat> entries;  // rows * cols values

    RatMatrix() = default;
    RatMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c, Rat(0)) {}

    Rat& at(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
    const Rat& at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }
};

// Basis of the right kernel, one vector per free column in ascending column
// order, derived from the reduced echelon form. Pivots are chosen
// deterministically: first nonzero column, earliest row. Elimination is
// fraction-free (Bareiss) after clearing denominators row by row.
std::vector<RatVector> nullspace(const RatMatrix& m);

std::size_t rank(const RatMatrix& m);

}  // namespace darboux
