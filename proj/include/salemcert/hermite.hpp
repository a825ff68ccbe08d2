#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "salemcert/matrix.hpp"

namespace salemcert {

// Row-style Hermite normal form of the lattice generated by the input rows:
// row echelon, positive pivots, entries above each pivot reduced into
// [0, pivot). Zero rows are dropped; the result's rows are a canonical basis.
inline IntMatrix hermite_normal_form(const std::vector<std::vector<BigInt>>& rows) {
    if (rows.empty()) return IntMatrix(0, 0);
    std::size_t n = rows[0].size();
    for (const auto& r : rows)
        if (r.size() != n) throw std::invalid_argument("hermite_normal_form: ragged rows");
    std::vector<std::vector<BigInt>> w = rows;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < n && pivot_row < w.size(); ++col) {
        // euclidean reduction of the column below pivot_row down to one entry
        while (true) {
            std::size_t best = w.size();
            for (std::size_t i = pivot_row; i < w.size(); ++i) {
                if (w[i][col] == 0) continue;
                if (best == w.size() || abs_of(w[i][col]) < abs_of(w[best][col])) best = i;
            }
            if (best == w.size()) break;  // column is zero from pivot_row down
            std::swap(w[pivot_row], w[best]);
            bool all_cleared = true;
            for (std::size_t i = pivot_row + 1; i < w.size(); ++i) {
                if (w[i][col] == 0) continue;
                BigInt q = div_round_nearest(w[i][col], w[pivot_row][col]);
                for (std::size_t j = 0; j < n; ++j) w[i][j] -= q * w[pivot_row][j];
                if (w[i][col] != 0) all_cleared = false;
            }
            if (all_cleared) break;
        }
        if (w[pivot_row][col] == 0) continue;
        if (w[pivot_row][col] < 0)
            for (std::size_t j = 0; j < n; ++j) w[pivot_row][j] = -w[pivot_row][j];
        for (std::size_t i = 0; i < pivot_row; ++i) {
            BigInt q = div_floor(w[i][col], w[pivot_row][col]);
            if (q == 0) continue;
            for (std::size_t j = 0; j < n; ++j) w[i][j] -= q * w[pivot_row][j];
        }
        ++pivot_row;
    }
    IntMatrix basis(pivot_row, n);
    for (std::size_t i = 0; i < pivot_row; ++i)
        for (std::size_t j = 0; j < n; ++j) basis(i, j) = w[i][j];
    return basis;
}

inline IntMatrix hermite_normal_form(const IntMatrix& m) {
    std::vector<std::vector<BigInt>> rows(m.rows(), std::vector<BigInt>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j);
    return hermite_normal_form(rows);
}

// Integer coordinates of v in the HNF basis (rows), if v lies in the lattice.
inline std::optional<std::vector<BigInt>> lattice_coordinates(const IntMatrix& basis,
                                                              const std::vector<BigInt>& v) {
    if (basis.cols() != v.size())
        throw std::invalid_argument("lattice_coordinates: dimension mismatch");
    std::vector<BigInt> rest = v;
    std::vector<BigInt> coords(basis.rows(), BigInt(0));
    std::size_t col = 0;
    for (std::size_t row = 0; row < basis.rows(); ++row) {
        while (col < basis.cols() && basis(row, col) == 0) ++col;
        if (col == basis.cols()) break;
        if (rest[col] % basis(row, col) != 0) {
            // pivot does not divide: can only be in the lattice if every
            // earlier coordinate already vanished, which it did not
            return std::nullopt;
        }
        BigInt q = rest[col] / basis(row, col);
        coords[row] = q;
        for (std::size_t j = 0; j < basis.cols(); ++j) rest[j] -= q * basis(row, j);
        ++col;
    }
    for (const auto& x : rest)
        if (x != 0) return std::nullopt;
    return coords;
}

inline bool lattice_contains(const IntMatrix& basis, const std::vector<BigInt>& v) {
    return lattice_coordinates(basis, v).has_value();
}

}  // namespace salemcert
