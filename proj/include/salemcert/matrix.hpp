#pragma once

#include <cstddef>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "salemcert/bigint.hpp"
#include "salemcert/polynomial.hpp"
#include "salemcert/quadratic_field.hpp"
#include "salemcert/rational.hpp"

namespace salemcert {

template <typename T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols, T fill = T(0))
        : rows_(rows), cols_(cols), data_(rows * cols, std::move(fill)) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        a.check_same_shape(b);
        Matrix r(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.data_.size(); ++i) r.data_[i] = a.data_[i] + b.data_[i];
        return r;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        a.check_same_shape(b);
        Matrix r(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.data_.size(); ++i) r.data_[i] = a.data_[i] - b.data_[i];
        return r;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: dimension mismatch in product");
        Matrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (is_zero(a(i, k))) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    r(i, j) = r(i, j) + a(i, k) * b(k, j);
            }
        return r;
    }

    Matrix scaled(const T& s) const {
        Matrix r(rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] * s;
        return r;
    }

    bool is_zero_matrix() const {
        for (const auto& x : data_)
            if (!is_zero(x)) return false;
        return true;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
        for (std::size_t i = 0; i < m.rows_; ++i) {
            if (i) os << ';';
            for (std::size_t j = 0; j < m.cols_; ++j) {
                if (j) os << ',';
                os << m(i, j);
            }
        }
        return os;
    }

private:
    void check_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("Matrix: shape mismatch");
    }

    std::size_t rows_, cols_;
    std::vector<T> data_;
};

using IntMatrix = Matrix<BigInt>;
using RatMatrix = Matrix<Rat>;
using QuadMatrix = Matrix<QuadExt>;

template <typename T>
std::vector<T> mat_vec(const Matrix<T>& m, const std::vector<T>& v) {
    if (m.cols() != v.size()) throw std::invalid_argument("mat_vec: dimension mismatch");
    std::vector<T> r(m.rows(), T(0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r[i] = r[i] + m(i, j) * v[j];
    return r;
}

// --- exact integer kernels ----------------------------------------------

// Bareiss fraction-free elimination; every intermediate division is exact.
inline BigInt det_bareiss(const IntMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("det_bareiss: matrix not square");
    std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix w = m;
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (w(k, k) == 0) {
            std::size_t r = k + 1;
            while (r < n && w(r, k) == 0) ++r;
            if (r == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(w(k, j), w(r, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                w(i, j) = (w(i, j) * w(k, k) - w(i, k) * w(k, j)) / prev;
            w(i, k) = 0;
        }
        prev = w(k, k);
    }
    return sign > 0 ? w(n - 1, n - 1) : BigInt(-w(n - 1, n - 1));
}

inline IntMatrix delete_row_col(const IntMatrix& m, std::size_t row, std::size_t col) {
    IntMatrix r(m.rows() - 1, m.cols() - 1);
    for (std::size_t i = 0, ri = 0; i < m.rows(); ++i) {
        if (i == row) continue;
        for (std::size_t j = 0, rj = 0; j < m.cols(); ++j) {
            if (j == col) continue;
            r(ri, rj) = m(i, j);
            ++rj;
        }
        ++ri;
    }
    return r;
}

// adj(M) with M * adj(M) = det(M) * I
inline IntMatrix adjugate(const IntMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("adjugate: matrix not square");
    std::size_t n = m.rows();
    if (n == 1) return IntMatrix::identity(1);
    IntMatrix adj(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            BigInt c = det_bareiss(delete_row_col(m, i, j));
            adj(j, i) = ((i + j) % 2 == 0) ? c : BigInt(-c);
        }
    return adj;
}

// exact inverse, defined only for |det| = 1
inline IntMatrix inverse_unimodular(const IntMatrix& m) {
    BigInt d = det_bareiss(m);
    if (d != 1 && d != -1)
        throw std::domain_error("inverse_unimodular: determinant is not +-1");
    IntMatrix adj = adjugate(m);
    return d == 1 ? adj : adj.scaled(BigInt(-1));
}

template <typename T>
Matrix<T> matrix_power(const Matrix<T>& m, unsigned long k) {
    if (!m.is_square()) throw std::invalid_argument("matrix_power: matrix not square");
    Matrix<T> result = Matrix<T>::identity(m.rows());
    Matrix<T> base = m;
    while (k > 0) {
        if (k & 1) result = result * base;
        base = base * base;
        k >>= 1;
    }
    return result;
}

inline IntMatrix matrix_power_signed(const IntMatrix& m, long k) {
    if (k >= 0) return matrix_power(m, static_cast<unsigned long>(k));
    return matrix_power(inverse_unimodular(m), static_cast<unsigned long>(-k));
}

// M^m - I by square-and-multiply
inline IntMatrix power_minus_identity(const IntMatrix& m, long power) {
    if (power < 1) throw std::domain_error("power_minus_identity: exponent must be >= 1");
    return matrix_power(m, static_cast<unsigned long>(power)) - IntMatrix::identity(m.rows());
}

// Companion matrix with sub-diagonal ones and -(c_0, ..., c_{n-1}) in the
// last column, for monic p = X^n + c_{n-1} X^{n-1} + ... + c_0.
inline IntMatrix companion_matrix(const IntPoly& p) {
    if (p.is_zero_poly() || !p.is_monic())
        throw std::domain_error("companion_matrix: polynomial must be monic");
    if (p.degree() < 1) throw std::domain_error("companion_matrix: degree must be >= 1");
    std::size_t n = static_cast<std::size_t>(p.degree());
    IntMatrix a(n, n);
    for (std::size_t i = 1; i < n; ++i) a(i, i - 1) = 1;
    for (std::size_t i = 0; i < n; ++i) a(i, n - 1) = -p.coeff(i);
    return a;
}

// Monic characteristic polynomial det(X I - M), by evaluation of the
// fraction-free determinant at X = 0..n and Newton interpolation over Q.
inline IntPoly char_poly(const IntMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("char_poly: matrix not square");
    std::size_t n = m.rows();
    std::vector<Rat> nodes, values;
    for (std::size_t t = 0; t <= n; ++t) {
        IntMatrix shifted = IntMatrix::identity(n).scaled(BigInt(t)) - m;
        nodes.emplace_back(BigInt(t));
        values.emplace_back(det_bareiss(shifted));
    }
    // Newton divided differences
    std::vector<Rat> dd = values;
    for (std::size_t level = 1; level < dd.size(); ++level)
        for (std::size_t i = dd.size() - 1; i >= level; --i)
            dd[i] = (dd[i] - dd[i - 1]) / (nodes[i] - nodes[i - level]);
    RatPoly poly{dd.back()};
    for (std::size_t i = dd.size() - 1; i-- > 0;) {
        RatPoly factor{-nodes[i], Rat(1)};
        poly = poly * factor + RatPoly{dd[i]};
    }
    std::vector<BigInt> coeffs;
    coeffs.reserve(poly.coeffs().size());
    for (const auto& c : poly.coeffs()) {
        if (!c.is_integer()) throw std::logic_error("char_poly: non-integer coefficient");
        coeffs.push_back(c.num());
    }
    IntPoly result(std::move(coeffs));
    if (!result.is_monic() || result.degree() != static_cast<int>(n))
        throw std::logic_error("char_poly: interpolation yielded a non-monic result");
    return result;
}

// --- generic field elimination -------------------------------------------

template <typename T>
std::size_t rank_field(Matrix<T> m) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
        std::size_t pivot = rank;
        while (pivot < m.rows() && is_zero(m(pivot, col))) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != rank)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(rank, j), m(pivot, j));
        for (std::size_t i = rank + 1; i < m.rows(); ++i) {
            if (is_zero(m(i, col))) continue;
            T factor = m(i, col) / m(rank, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                m(i, j) = m(i, j) - factor * m(rank, j);
        }
        ++rank;
    }
    return rank;
}

template <typename T>
T det_field(Matrix<T> m) {
    if (!m.is_square()) throw std::invalid_argument("det_field: matrix not square");
    T det = T(1);
    std::size_t n = m.rows();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && is_zero(m(pivot, col))) ++pivot;
        if (pivot == n) return T(0);
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(col, j), m(pivot, j));
            det = -det;
        }
        det = det * m(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (is_zero(m(i, col))) continue;
            T factor = m(i, col) / m(col, col);
            for (std::size_t j = col; j < n; ++j) m(i, j) = m(i, j) - factor * m(col, j);
        }
    }
    return det;
}

template <typename T>
Matrix<T> inverse_field(const Matrix<T>& m) {
    if (!m.is_square()) throw std::invalid_argument("inverse_field: matrix not square");
    std::size_t n = m.rows();
    Matrix<T> w = m;
    Matrix<T> inv = Matrix<T>::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && is_zero(w(pivot, col))) ++pivot;
        if (pivot == n) throw std::domain_error("inverse_field: singular matrix");
        if (pivot != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(w(col, j), w(pivot, j));
                std::swap(inv(col, j), inv(pivot, j));
            }
        T p = w(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            w(col, j) = w(col, j) / p;
            inv(col, j) = inv(col, j) / p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || is_zero(w(i, col))) continue;
            T factor = w(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                w(i, j) = w(i, j) - factor * w(col, j);
                inv(i, j) = inv(i, j) - factor * inv(col, j);
            }
        }
    }
    return inv;
}

// --- conversions and text format ------------------------------------------

inline RatMatrix to_rat_matrix(const IntMatrix& m) {
    RatMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
    return r;
}

inline QuadMatrix to_quad_matrix(const IntMatrix& m) {
    QuadMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = QuadExt(Rat(m(i, j)));
    return r;
}

// rows separated by ';', entries by ','
inline IntMatrix parse_int_matrix(const std::string& text) {
    std::vector<std::vector<BigInt>> rows;
    std::string row_text;
    std::istringstream rows_in(text);
    while (std::getline(rows_in, row_text, ';')) {
        std::vector<BigInt> row;
        std::string tok;
        std::istringstream entries(row_text);
        while (std::getline(entries, tok, ',')) {
            auto b = tok.find_first_not_of(" \t");
            auto e = tok.find_last_not_of(" \t");
            if (b == std::string::npos) throw std::invalid_argument("parse_int_matrix: empty entry");
            row.push_back(parse_bigint(tok.substr(b, e - b + 1)));
        }
        if (row.empty()) throw std::invalid_argument("parse_int_matrix: empty row");
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::invalid_argument("parse_int_matrix: no rows");
    for (const auto& r : rows)
        if (r.size() != rows[0].size())
            throw std::invalid_argument("parse_int_matrix: ragged rows");
    IntMatrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
    return m;
}

inline std::string int_matrix_str(const IntMatrix& m) {
    std::ostringstream os;
    os << m;
    return os.str();
}

}  // namespace salemcert
