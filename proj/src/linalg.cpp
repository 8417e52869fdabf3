#include "darboux/linalg.hpp"

#include <utility>
#include <vector>

namespace darboux {

namespace {

struct Echelon {
    std::vector<RatVector> m;
    std::vector<std::size_t> pivot_cols;
};

// Row echelon form via fraction-free (Bareiss) elimination. Each row is first
// scaled to integers by the lcm of its denominators (kernel unchanged);
// pivots are the first nonzero column, earliest remaining row.
Echelon echelon_fraction_free(const RatMatrix& input) {
    Echelon e;
    e.m.resize(input.rows, RatVector(input.cols, Rat(0)));
    for (std::size_t r = 0; r < input.rows; ++r) {
        Int lcm(1);
        for (std::size_t c = 0; c < input.cols; ++c)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), input.at(r, c).get_den_mpz_t());
        for (std::size_t c = 0; c < input.cols; ++c) e.m[r][c] = input.at(r, c) * Rat(lcm);
    }

    Rat prev(1);
    std::size_t prow = 0;
    for (std::size_t c = 0; c < input.cols && prow < input.rows; ++c) {
        std::size_t sel = prow;
        while (sel < input.rows && e.m[sel][c] == 0) ++sel;
        if (sel == input.rows) continue;
        std::swap(e.m[sel], e.m[prow]);
        const Rat piv = e.m[prow][c];
        for (std::size_t r = prow + 1; r < input.rows; ++r) {
            const Rat factor = e.m[r][c];
            for (std::size_t j = c; j < input.cols; ++j)
                e.m[r][j] = (piv * e.m[r][j] - factor * e.m[prow][j]) / prev;
        }
        prev = piv;
        e.pivot_cols.push_back(c);
        ++prow;
    }
    return e;
}

}  // namespace

std::size_t rank(const RatMatrix& m) { return echelon_fraction_free(m).pivot_cols.size(); }

std::vector<RatVector> nullspace(const RatMatrix& input) {
    Echelon e = echelon_fraction_free(input);
    const std::size_t cols = input.cols;
    auto& m = e.m;
    const auto& piv = e.pivot_cols;

    // Back-substitute to reduced echelon form.
    for (std::size_t i = piv.size(); i-- > 0;) {
        const std::size_t c = piv[i];
        const Rat pv = m[i][c];
        for (std::size_t j = c; j < cols; ++j) m[i][j] /= pv;
        for (std::size_t r = 0; r < i; ++r) {
            const Rat f = m[r][c];
            if (f == 0) continue;
            for (std::size_t j = c; j < cols; ++j) m[r][j] -= f * m[i][j];
        }
    }

    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : piv) is_pivot[c] = true;

    std::vector<RatVector> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        RatVector v(cols, Rat(0));
        v[f] = 1;
        for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -m[i][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace darboux
