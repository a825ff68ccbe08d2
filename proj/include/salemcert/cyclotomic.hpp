#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "salemcert/polynomial.hpp"

namespace salemcert {

inline long euler_phi(long k) {
    if (k < 1) throw std::domain_error("euler_phi: argument must be >= 1");
    long result = k, n = k;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

namespace detail {

inline const IntPoly& cyclotomic_memo(long k, std::map<long, IntPoly>& memo) {
    auto it = memo.find(k);
    if (it != memo.end()) return it->second;
    // Phi_k = (X^k - 1) / prod_{d | k, d < k} Phi_d, all divisions exact
    IntPoly num = IntPoly::monomial(static_cast<std::size_t>(k)) - IntPoly{BigInt(1)};
    for (long d = 1; d < k; ++d) {
        if (k % d != 0) continue;
        auto [quo, rem] = divmod_monic(num, cyclotomic_memo(d, memo));
        if (!rem.is_zero_poly()) throw std::logic_error("cyclotomic_poly: inexact division");
        num = quo;
    }
    return memo.emplace(k, std::move(num)).first->second;
}

}  // namespace detail

inline IntPoly cyclotomic_poly(long k) {
    if (k < 1) throw std::domain_error("cyclotomic_poly: index must be >= 1");
    std::map<long, IntPoly> memo;
    return detail::cyclotomic_memo(k, memo);
}

// All k with Phi_k | p, sorted ascending. phi(k) <= n forces k <= 2n^2,
// so scanning k up to that bound is exhaustive.
inline std::vector<long> cyclotomic_factors(const IntPoly& p) {
    if (p.is_zero_poly()) throw std::domain_error("cyclotomic_factors: zero polynomial");
    long n = p.degree();
    std::vector<long> hits;
    if (n < 1) return hits;
    std::map<long, IntPoly> memo;
    for (long k = 1; k <= 2 * n * n; ++k) {
        if (euler_phi(k) > n) continue;
        if (divides_monic(detail::cyclotomic_memo(k, memo), p)) hits.push_back(k);
    }
    return hits;
}

}  // namespace salemcert
