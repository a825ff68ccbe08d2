#pragma once

#include <stdexcept>
#include <utility>

#include "salemcert/matrix.hpp"
#include "salemcert/polynomial.hpp"
#include "salemcert/quadratic_field.hpp"

namespace salemcert {

// extended euclidean algorithm over a field: g = a*x + b*y with g the
// monic gcd (or zero when both inputs are zero)
template <typename T>
void poly_ext_gcd(const Poly<T>& a, const Poly<T>& b, Poly<T>& g, Poly<T>& x, Poly<T>& y) {
    Poly<T> old_r = a, r = b;
    Poly<T> old_x = Poly<T>{T(1)}, cur_x = Poly<T>();
    Poly<T> old_y = Poly<T>(), cur_y = Poly<T>{T(1)};
    while (!r.is_zero_poly()) {
        auto [q, rem] = divmod(old_r, r);
        old_r = r;
        r = rem;
        Poly<T> tx = old_x - q * cur_x;
        old_x = cur_x;
        cur_x = tx;
        Poly<T> ty = old_y - q * cur_y;
        old_y = cur_y;
        cur_y = ty;
    }
    if (!old_r.is_zero_poly()) {
        T lead = old_r.leading();
        T inv = T(1) / lead;
        old_r = old_r.scaled(inv);
        old_x = old_x.scaled(inv);
        old_y = old_y.scaled(inv);
    }
    g = old_r;
    x = old_x;
    y = old_y;
}

template <typename T>
Matrix<T> eval_poly_at_matrix(const Poly<T>& p, const Matrix<T>& m) {
    if (!m.is_square()) throw std::invalid_argument("eval_poly_at_matrix: matrix not square");
    std::size_t n = m.rows();
    Matrix<T> acc(n, n);
    for (int i = p.degree(); i >= 0; --i) {
        acc = acc * m;
        const T& c = p.coeff(static_cast<std::size_t>(i));
        for (std::size_t d = 0; d < n; ++d) acc(d, d) = acc(d, d) + c;
    }
    return acc;
}

// The splitting of Q(sqrt(D))^n into the kernels of two coprime factors of
// the characteristic polynomial. projector_elliptic projects onto
// ker factor_elliptic(A) (the invariant-form carrying part), and
// projector_hyperbolic onto ker factor_hyperbolic(A).
struct SpectralSplit {
    QuadMatrix projector_elliptic;
    QuadMatrix projector_hyperbolic;
    QuadPoly factor_elliptic;
    QuadPoly factor_hyperbolic;
};

// Projectors via the Bezout identity u*f + v*g = 1: the projector onto
// ker f(A) along ker g(A) is (v*g)(A), and (u*f)(A) is its complement.
// Two exact polynomial evaluations at A; no eigenvector extraction.
inline SpectralSplit spectral_projectors(const IntMatrix& a, const QuadPoly& factor_elliptic,
                                         const QuadPoly& factor_hyperbolic) {
    QuadPoly product = factor_elliptic * factor_hyperbolic;
    if (product != to_quad_poly(char_poly(a)))
        throw std::domain_error("spectral_projectors: factors do not multiply to the characteristic polynomial");
    QuadPoly g, u, v;
    poly_ext_gcd(factor_elliptic, factor_hyperbolic, g, u, v);
    if (g.degree() != 0)
        throw std::domain_error("spectral_projectors: factors are not coprime");
    QuadMatrix aq = to_quad_matrix(a);
    SpectralSplit split;
    split.factor_elliptic = factor_elliptic;
    split.factor_hyperbolic = factor_hyperbolic;
    split.projector_hyperbolic = eval_poly_at_matrix(u * factor_elliptic, aq);
    split.projector_elliptic = eval_poly_at_matrix(v * factor_hyperbolic, aq);

    std::size_t n = a.rows();
    QuadMatrix sum = split.projector_elliptic + split.projector_hyperbolic;
    if (sum != QuadMatrix::identity(n))
        throw std::logic_error("spectral_projectors: projectors do not sum to the identity");
    if (split.projector_elliptic * split.projector_elliptic != split.projector_elliptic ||
        split.projector_hyperbolic * split.projector_hyperbolic != split.projector_hyperbolic)
        throw std::logic_error("spectral_projectors: projector not idempotent");
    if (split.projector_elliptic * aq != aq * split.projector_elliptic)
        throw std::logic_error("spectral_projectors: projector does not commute with the matrix");
    if (!(eval_poly_at_matrix(factor_elliptic, aq) * split.projector_elliptic).is_zero_matrix() ||
        !(eval_poly_at_matrix(factor_hyperbolic, aq) * split.projector_hyperbolic).is_zero_matrix())
        throw std::logic_error("spectral_projectors: factor does not annihilate its subspace");
    return split;
}

}  // namespace salemcert
