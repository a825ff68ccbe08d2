#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "salemcert/matrix.hpp"
#include "salemcert/quadratic_field.hpp"
#include "salemcert/spectral.hpp"

namespace salemcert {

// The invariant positive definite binary form of an elliptic companion block
// B = [[0,-1],[1,t]] (|t| < 2): Q = [[1, t/2],[t/2, 1]], which satisfies
// B^T Q B = Q exactly and det Q = (4 - t^2)/4 > 0.
struct InvariantForm2 {
    QuadExt trace_param;
    QuadMatrix matrix;
};

inline InvariantForm2 invariant_form(const QuadExt& t) {
    QuadExt margin = QuadExt(4) - t * t;
    if (margin.sign() <= 0)
        throw std::domain_error("invariant_form: |trace| >= 2, no invariant positive form");
    QuadMatrix q(2, 2);
    QuadExt half_t = t / QuadExt(2);
    q(0, 0) = QuadExt(1);
    q(0, 1) = half_t;
    q(1, 0) = half_t;
    q(1, 1) = QuadExt(1);
    QuadMatrix b(2, 2);
    b(0, 0) = QuadExt(0);
    b(0, 1) = QuadExt(-1);
    b(1, 0) = QuadExt(1);
    b(1, 1) = t;
    if (b.transpose() * q * b != q)
        throw std::logic_error("invariant_form: defining identity failed");
    return {t, q};
}

// Change of basis [v, Av, w, Aw] built from the first standard basis vectors
// with nonzero projections; the elliptic pair spans ker factor_elliptic(A).
inline QuadMatrix subspace_basis(const SpectralSplit& split, const IntMatrix& a) {
    std::size_t n = a.rows();
    if (n != 4) throw std::invalid_argument("subspace_basis: expected a 4x4 matrix");
    QuadMatrix aq = to_quad_matrix(a);
    auto pick_column = [n](const QuadMatrix& projector) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t i = 0; i < n; ++i)
                if (!projector(i, j).is_zero()) return j;
        }
        throw std::domain_error("subspace_basis: projector is zero");
    };
    std::size_t je = pick_column(split.projector_elliptic);
    std::size_t jh = pick_column(split.projector_hyperbolic);
    QuadMatrix t(n, n);
    std::vector<QuadExt> v(n), w(n);
    for (std::size_t i = 0; i < n; ++i) {
        v[i] = split.projector_elliptic(i, je);
        w[i] = split.projector_hyperbolic(i, jh);
    }
    std::vector<QuadExt> av = mat_vec(aq, v), aw = mat_vec(aq, w);
    for (std::size_t i = 0; i < n; ++i) {
        t(i, 0) = v[i];
        t(i, 1) = av[i];
        t(i, 2) = w[i];
        t(i, 3) = aw[i];
    }
    if (det_field(t).is_zero())
        throw std::domain_error("subspace_basis: degenerate basis");
    return t;
}

// The degenerate suspension metric as an exact Gram matrix, with its
// positive-semidefiniteness witness: block = S^T * core * S.
struct GramForm {
    QuadMatrix entries;       // (n+1) x (n+1), trailing block is the dt^2 term
    long rank = 0;
    QuadMatrix psd_witness_s;     // 2 x n
    QuadMatrix psd_witness_core;  // 2 x 2 positive definite
};

inline long form_rank(const QuadMatrix& g) {
    return static_cast<long>(rank_field(g));
}

// (invariant form on the elliptic plane) (+) (zero on the complement) + dt^2,
// assembled in standard coordinates: G4 = T^-T diag(Q, 0) T^-1, G = diag(G4, 1).
inline GramForm ambient_gram(const IntMatrix& a, const SpectralSplit& split) {
    QuadExt trace = -split.factor_elliptic.coeff(1);
    if (!split.factor_elliptic.is_monic() || split.factor_elliptic.degree() != 2 ||
        split.factor_elliptic.coeff(0) != QuadExt(1))
        throw std::domain_error("ambient_gram: elliptic factor must be monic X^2 - t X + 1");
    InvariantForm2 q = invariant_form(trace);

    std::size_t n = a.rows();
    QuadMatrix t = subspace_basis(split, a);
    QuadMatrix t_inv = inverse_field(t);
    // S = first two rows of T^-1 (coordinates along the elliptic pair)
    QuadMatrix s(2, n);
    for (std::size_t j = 0; j < n; ++j) {
        s(0, j) = t_inv(0, j);
        s(1, j) = t_inv(1, j);
    }
    QuadMatrix block = s.transpose() * q.matrix * s;

    GramForm g;
    g.entries = QuadMatrix(n + 1, n + 1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g.entries(i, j) = block(i, j);
    g.entries(n, n) = QuadExt(1);
    g.rank = form_rank(g.entries);
    g.psd_witness_s = std::move(s);
    g.psd_witness_core = q.matrix;
    return g;
}

// Phi = diag(A, 1) is the differential of (x, t) -> (Ax, t+1); the metric is
// invariant iff Phi^T G Phi = G entrywise. Lattice translations preserve G
// automatically since all entries are constant.
inline bool verify_isometry(const GramForm& g, const IntMatrix& a) {
    std::size_t n = a.rows();
    if (g.entries.rows() != n + 1)
        throw std::invalid_argument("verify_isometry: dimension mismatch");
    QuadMatrix phi(n + 1, n + 1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) phi(i, j) = QuadExt(Rat(a(i, j)));
    phi(n, n) = QuadExt(1);
    return phi.transpose() * g.entries * phi == g.entries;
}

}  // namespace salemcert
