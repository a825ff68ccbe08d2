#pragma once

#include <stdexcept>
#include <vector>

#include "salemcert/polynomial.hpp"
#include "salemcert/root_isolation.hpp"

namespace salemcert {

inline std::vector<BigInt> positive_divisors(const BigInt& n) {
    BigInt a = abs_of(n);
    if (a == 0) throw std::domain_error("positive_divisors: zero");
    std::vector<BigInt> small, large;
    for (BigInt d = 1; d * d <= a; ++d) {
        if (a % d != 0) continue;
        small.push_back(d);
        if (d * d != a) large.push_back(a / d);
    }
    for (auto it = large.rbegin(); it != large.rend(); ++it) small.push_back(*it);
    return small;
}

inline bool has_rational_root(const IntPoly& p) {
    if (p.coeff(0) == 0) return true;  // root 0
    for (const auto& r : positive_divisors(p.coeff(0))) {
        for (const auto& s : positive_divisors(p.leading())) {
            if (gcd_of(r, s) != 1) continue;
            if (p.eval(Rat(r, s)).is_zero() || p.eval(Rat(-r, s)).is_zero()) return true;
        }
    }
    return false;
}

// Exact irreducibility over Q for degree 1..4: rational-root test plus, for
// quartics, an exhaustive search for an integral quadratic*quadratic
// factorization with the linear coefficient bounded through the root bound
// (a factor a*X^2 + b*X + c of p has |b| <= 2*a*R with R the Cauchy bound).
inline bool irreducible_quartic(const IntPoly& p) {
    if (p.is_zero_poly()) throw std::domain_error("irreducible_quartic: zero polynomial");
    if (p.degree() > 4) throw std::domain_error("irreducible_quartic: degree > 4 unsupported");
    if (p.degree() < 1) throw std::domain_error("irreducible_quartic: constant polynomial");
    if (content(p) != 1) throw std::domain_error("irreducible_quartic: input must be primitive");

    if (p.degree() == 1) return true;
    if (has_rational_root(p)) return false;
    if (p.degree() <= 3) return true;  // degree 2 or 3 without rational roots

    const BigInt c4 = p.coeff(4), c3 = p.coeff(3), c2 = p.coeff(2), c1 = p.coeff(1),
                 c0 = p.coeff(0);
    // c0 != 0 here: a zero constant term implies the rational root 0
    Rat root_bound = cauchy_root_bound(p);
    for (const auto& a : positive_divisors(c4)) {
        for (const BigInt& d : {BigInt(c4 / a), BigInt(-c4 / a)}) {
            if (a * d != c4) continue;
            Rat b_bound_rat = Rat(2 * a) * root_bound;
            BigInt b_bound = b_bound_rat.num() / b_bound_rat.den() + 1;
            for (const auto& c_abs : positive_divisors(c0)) {
                for (const BigInt& c : {BigInt(c_abs), BigInt(-c_abs)}) {
                    BigInt f = c0 / c;
                    if (c * f != c0) continue;
                    for (BigInt b = -b_bound; b <= b_bound; ++b) {
                        // p = (a X^2 + b X + c)(d X^2 + e X + f)
                        BigInt num_e = c3 - b * d;
                        if (num_e % a != 0) continue;
                        BigInt e = num_e / a;
                        if (c2 != a * f + b * e + c * d) continue;
                        if (c1 != b * f + c * e) continue;
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

}  // namespace salemcert
