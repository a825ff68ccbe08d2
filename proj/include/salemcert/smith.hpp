#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "salemcert/matrix.hpp"

namespace salemcert {

// U * M * V = diag(divisors); U and V unimodular, divisors non-negative with
// d1 | d2 | ... and zeros trailing.
struct SnfResult {
    IntMatrix left;
    std::vector<BigInt> divisors;
    IntMatrix right;
};

namespace detail {

// smallest-magnitude nonzero entry of the trailing submatrix, row-major ties
inline bool find_snf_pivot(const IntMatrix& w, std::size_t start, std::size_t& pi,
                           std::size_t& pj) {
    bool found = false;
    BigInt best;
    for (std::size_t i = start; i < w.rows(); ++i)
        for (std::size_t j = start; j < w.cols(); ++j) {
            if (w(i, j) == 0) continue;
            BigInt mag = abs_of(w(i, j));
            if (!found || mag < best) {
                found = true;
                best = mag;
                pi = i;
                pj = j;
            }
        }
    return found;
}

}  // namespace detail

inline SnfResult smith_normal_form(const IntMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("smith_normal_form: matrix not square");
    std::size_t n = m.rows();
    IntMatrix w = m;
    IntMatrix u = IntMatrix::identity(n);
    IntMatrix v = IntMatrix::identity(n);

    auto swap_rows = [&](std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < n; ++j) {
            std::swap(w(a, j), w(b, j));
            std::swap(u(a, j), u(b, j));
        }
    };
    auto swap_cols = [&](std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < n; ++i) {
            std::swap(w(i, a), w(i, b));
            std::swap(v(i, a), v(i, b));
        }
    };
    auto add_row_multiple = [&](std::size_t dst, std::size_t src, const BigInt& q) {
        if (q == 0) return;
        for (std::size_t j = 0; j < n; ++j) {
            w(dst, j) += q * w(src, j);
            u(dst, j) += q * u(src, j);
        }
    };
    auto add_col_multiple = [&](std::size_t dst, std::size_t src, const BigInt& q) {
        if (q == 0) return;
        for (std::size_t i = 0; i < n; ++i) {
            w(i, dst) += q * w(i, src);
            v(i, dst) += q * v(i, src);
        }
    };

    for (std::size_t t = 0; t < n; ++t) {
        std::size_t pi = t, pj = t;
        if (!detail::find_snf_pivot(w, t, pi, pj)) break;  // trailing zeros
        swap_rows(t, pi);
        swap_cols(t, pj);
        while (true) {
            // clear column t below the pivot, re-selecting the smaller
            // remainder as the new pivot until everything divides out
            bool dirty = false;
            for (std::size_t i = t + 1; i < n; ++i) {
                if (w(i, t) == 0) continue;
                BigInt q = div_round_nearest(w(i, t), w(t, t));
                add_row_multiple(i, t, -q);
                if (w(i, t) != 0) {
                    swap_rows(t, i);  // strictly smaller magnitude pivot
                    dirty = true;
                }
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (w(t, j) == 0) continue;
                BigInt q = div_round_nearest(w(t, j), w(t, t));
                add_col_multiple(j, t, -q);
                if (w(t, j) != 0) {
                    swap_cols(t, j);
                    dirty = true;
                }
            }
            if (dirty) continue;
            // pivot must divide the whole trailing block for the chain
            bool fixed = true;
            for (std::size_t i = t + 1; i < n && fixed; ++i)
                for (std::size_t j = t + 1; j < n && fixed; ++j)
                    if (w(i, j) % w(t, t) != 0) {
                        add_row_multiple(t, i, BigInt(1));
                        fixed = false;
                    }
            if (fixed) break;
        }
        if (w(t, t) < 0) {
            for (std::size_t j = 0; j < n; ++j) {
                w(t, j) = -w(t, j);
                u(t, j) = -u(t, j);
            }
        }
    }

    SnfResult result;
    result.left = std::move(u);
    result.right = std::move(v);
    result.divisors.reserve(n);
    for (std::size_t i = 0; i < n; ++i) result.divisors.push_back(w(i, i));
    return result;
}

}  // namespace salemcert
