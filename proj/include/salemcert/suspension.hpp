#pragma once

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "salemcert/cyclotomic.hpp"
#include "salemcert/hermite.hpp"
#include "salemcert/matrix.hpp"
#include "salemcert/polynomial.hpp"
#include "salemcert/smith.hpp"

namespace salemcert {

// Element (v, k) of Z^n x|_A Z with the group law
// (v, k) * (w, l) = (v + A^k w, k + l).
struct SuspensionElement {
    std::vector<BigInt> translation;
    long shift = 0;

    friend bool operator==(const SuspensionElement& a, const SuspensionElement& b) {
        return a.shift == b.shift && a.translation == b.translation;
    }
    friend bool operator!=(const SuspensionElement& a, const SuspensionElement& b) {
        return !(a == b);
    }
};

inline SuspensionElement suspension_identity(std::size_t n) {
    return {std::vector<BigInt>(n, BigInt(0)), 0};
}

inline SuspensionElement compose(const SuspensionElement& x, const SuspensionElement& y,
                                 const IntMatrix& a) {
    if (x.translation.size() != a.rows() || y.translation.size() != a.rows())
        throw std::invalid_argument("compose: dimension mismatch");
    IntMatrix ak = matrix_power_signed(a, x.shift);
    std::vector<BigInt> moved = mat_vec(ak, y.translation);
    SuspensionElement r;
    r.translation.resize(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) r.translation[i] = x.translation[i] + moved[i];
    r.shift = x.shift + y.shift;
    return r;
}

inline SuspensionElement inverse(const SuspensionElement& x, const IntMatrix& a) {
    // (v, k)^-1 = (-A^-k v, -k)
    IntMatrix ak = matrix_power_signed(a, -x.shift);
    std::vector<BigInt> moved = mat_vec(ak, x.translation);
    SuspensionElement r;
    r.translation.resize(moved.size());
    for (std::size_t i = 0; i < moved.size(); ++i) r.translation[i] = -moved[i];
    r.shift = -x.shift;
    return r;
}

inline SuspensionElement element_power(const SuspensionElement& x, long e, const IntMatrix& a) {
    SuspensionElement base = e >= 0 ? x : inverse(x, a);
    long count = e >= 0 ? e : -e;
    SuspensionElement acc = suspension_identity(a.rows());
    for (long i = 0; i < count; ++i) acc = compose(acc, base, a);
    return acc;
}

// Commutator of a lattice element n with a shifting element k0 = (tau, m),
// composed as k0 * n * k0^-1 * n^-1. The translation part tau cancels and
// the closed form is ((A^m - I) n, 0).
inline SuspensionElement commutator(const std::vector<BigInt>& n, const SuspensionElement& k0,
                                    const IntMatrix& a) {
    if (k0.shift == 0) throw std::domain_error("commutator: k0 must have nonzero shift");
    SuspensionElement lattice{n, 0};
    SuspensionElement word =
        compose(compose(compose(k0, lattice, a), inverse(k0, a), a), inverse(lattice, a), a);
    IntMatrix delta = matrix_power_signed(a, k0.shift) - IntMatrix::identity(a.rows());
    std::vector<BigInt> expect = mat_vec(delta, n);
    if (word.shift != 0 || word.translation != expect)
        throw std::logic_error("commutator: closed form mismatch");
    return word;
}

// Lemma-style decomposition of a subgroup of Z^n x| Z: a lattice L plus an
// optional generator whose shift generates the set of shifts occurring in
// the subgroup.
struct SubgroupData {
    IntMatrix lattice_basis;                         // HNF rows
    std::optional<SuspensionElement> generator_k0;   // absent when all shifts vanish
};

inline SubgroupData subgroup_decompose(const std::vector<SuspensionElement>& generators,
                                       const IntMatrix& a) {
    if (generators.empty())
        throw std::invalid_argument("subgroup_decompose: empty generator list");
    std::size_t n = a.rows();
    for (const auto& g : generators)
        if (g.translation.size() != n)
            throw std::invalid_argument("subgroup_decompose: dimension mismatch");

    // gcd of the shifts, realized as an actual word in the generators
    long g_shift = 0;
    std::optional<SuspensionElement> word;
    for (const auto& gen : generators) {
        if (gen.shift == 0) continue;
        if (!word) {
            word = gen.shift > 0 ? gen : inverse(gen, a);
            g_shift = word->shift;
            continue;
        }
        BigInt x, y;
        BigInt g = ext_gcd(BigInt(g_shift), BigInt(gen.shift), x, y);
        SuspensionElement combined =
            compose(element_power(*word, static_cast<long>(x), a),
                    element_power(gen, static_cast<long>(y), a), a);
        word = combined;
        g_shift = static_cast<long>(g);
        if (word->shift != g_shift) throw std::logic_error("subgroup_decompose: bad gcd word");
    }

    // residual translations: gen * k0^-(shift/g) lies in Z^n
    std::vector<std::vector<BigInt>> lattice_gens;
    for (const auto& gen : generators) {
        SuspensionElement residue = gen;
        if (word) {
            long j = gen.shift / g_shift;
            residue = compose(gen, element_power(*word, -j, a), a);
        }
        if (residue.shift != 0) throw std::logic_error("subgroup_decompose: residue has shift");
        lattice_gens.push_back(residue.translation);
    }

    IntMatrix basis = hermite_normal_form(lattice_gens);
    if (word) {
        // close under conjugation by k0 until the basis stabilizes
        IntMatrix fwd = matrix_power_signed(a, g_shift);
        IntMatrix bwd = matrix_power_signed(a, -g_shift);
        for (int round = 0;; ++round) {
            if (round >= 64)
                throw std::runtime_error("subgroup_decompose: lattice saturation did not stabilize");
            std::vector<std::vector<BigInt>> rows;
            for (std::size_t i = 0; i < basis.rows(); ++i) {
                std::vector<BigInt> r(n);
                for (std::size_t j = 0; j < n; ++j) r[j] = basis(i, j);
                rows.push_back(r);
                rows.push_back(mat_vec(fwd, r));
                rows.push_back(mat_vec(bwd, r));
            }
            IntMatrix closed = hermite_normal_form(rows);
            if (closed == basis) break;
            basis = std::move(closed);
        }
    }

    // every input generator must be (lattice element) * k0^j
    for (const auto& gen : generators) {
        SuspensionElement residue = gen;
        if (word) residue = compose(gen, element_power(*word, -(gen.shift / g_shift), a), a);
        if (!lattice_contains(basis, residue.translation))
            throw std::logic_error("subgroup_decompose: generator not expressible");
    }

    SubgroupData data;
    data.lattice_basis = std::move(basis);
    data.generator_k0 = word;
    return data;
}

struct AbelianizationData {
    long free_rank = 0;
    std::vector<BigInt> torsion;  // divisors > 1
};

// Abelianization of L x|_{A^m} Z: L/(A^m - I)L (+) Z, computed from the SNF
// of (A^m - I) restricted to L in the given HNF basis.
inline AbelianizationData abelianization(const IntMatrix& lattice_basis, long m,
                                         const IntMatrix& a) {
    if (m < 1) throw std::domain_error("abelianization: m must be >= 1");
    std::size_t r = lattice_basis.rows();
    IntMatrix delta = power_minus_identity(a, m);
    IntMatrix am = matrix_power(a, static_cast<unsigned long>(m));
    // restriction matrix: (A^m - I) b_i = sum_j C(i, j) b_j, and A^m L <= L
    IntMatrix c(r, r);
    for (std::size_t i = 0; i < r; ++i) {
        std::vector<BigInt> b(lattice_basis.cols());
        for (std::size_t j = 0; j < lattice_basis.cols(); ++j) b[j] = lattice_basis(i, j);
        if (!lattice_contains(lattice_basis, mat_vec(am, b)))
            throw std::domain_error("abelianization: lattice is not invariant under A^m");
        auto coords = lattice_coordinates(lattice_basis, mat_vec(delta, b));
        if (!coords) throw std::domain_error("abelianization: lattice is not invariant under A^m");
        for (std::size_t j = 0; j < r; ++j) c(i, j) = (*coords)[j];
    }
    SnfResult snf = smith_normal_form(c);
    AbelianizationData out;
    long zeros = 0;
    for (const auto& d : snf.divisors) {
        if (d == 0) ++zeros;
        else if (d > 1) out.torsion.push_back(d);
    }
    out.free_rank = 1 + zeros;
    return out;
}

// Largest q for which the abelianization-rank obstruction permits a finite
// cover of the suspension to fiber over the q-torus:
// 1 + sum of phi(k) over the cyclotomic divisors of the characteristic
// polynomial (= 1 + max_m dim_Q ker(A^m - I)).
inline long fibration_bound(const IntMatrix& a) {
    IntPoly p = char_poly(a);
    if (poly_gcd(p, p.derivative()).degree() != 0)
        throw std::domain_error("fibration_bound: characteristic polynomial is not squarefree");
    long bound = 1;
    for (long k : cyclotomic_factors(p)) bound += euler_phi(k);
    return bound;
}

// --- text format: "v1,v2,...,vn|k" ----------------------------------------

inline SuspensionElement parse_suspension_element(const std::string& text) {
    auto bar = text.find('|');
    if (bar == std::string::npos)
        throw std::invalid_argument("parse_suspension_element: missing '|'");
    SuspensionElement e;
    std::string vec = text.substr(0, bar);
    std::string tok;
    std::istringstream is(vec);
    while (std::getline(is, tok, ',')) {
        auto b = tok.find_first_not_of(" \t");
        auto en = tok.find_last_not_of(" \t");
        if (b == std::string::npos)
            throw std::invalid_argument("parse_suspension_element: empty coordinate");
        e.translation.push_back(parse_bigint(tok.substr(b, en - b + 1)));
    }
    if (e.translation.empty())
        throw std::invalid_argument("parse_suspension_element: empty translation");
    e.shift = std::stol(text.substr(bar + 1));
    return e;
}

inline std::string suspension_element_str(const SuspensionElement& e) {
    std::ostringstream os;
    for (std::size_t i = 0; i < e.translation.size(); ++i) {
        if (i) os << ',';
        os << e.translation[i];
    }
    os << '|' << e.shift;
    return os.str();
}

}  // namespace salemcert
