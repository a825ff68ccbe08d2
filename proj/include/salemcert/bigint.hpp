#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <utility>

namespace salemcert {

using BigInt = boost::multiprecision::cpp_int;

inline int sign_of(const BigInt& x) { return x.sign(); }

inline BigInt abs_of(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

inline BigInt gcd_of(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::gcd(a, b);
}

// Quotient rounded toward -inf, so that a - q*b lies in [0, |b|).
inline BigInt div_floor(const BigInt& a, const BigInt& b) {
    if (b == 0) throw std::domain_error("div_floor: division by zero");
    BigInt q = a / b;              // truncated toward zero
    if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

inline BigInt mod_floor(const BigInt& a, const BigInt& b) {
    return a - div_floor(a, b) * b;
}

// Quotient q minimizing |a - q*b|; on ties the smaller q is taken.
// Keeps Euclidean descent steps in SNF/HNF strictly decreasing.
inline BigInt div_round_nearest(const BigInt& a, const BigInt& b) {
    if (b == 0) throw std::domain_error("div_round_nearest: division by zero");
    BigInt q = div_floor(a, b);
    BigInt r = a - q * b;          // 0 <= r < |b|
    BigInt r2 = r * 2;
    if (r2 > abs_of(b)) return q + 1;
    return q;
}

// extended gcd: returns g >= 0 and (x, y) with a*x + b*y = g
inline BigInt ext_gcd(const BigInt& a, const BigInt& b, BigInt& x, BigInt& y) {
    BigInt old_r = a, r = b;
    BigInt old_x = 1, cur_x = 0;
    BigInt old_y = 0, cur_y = 1;
    while (r != 0) {
        BigInt q = old_r / r;
        BigInt t;
        t = old_r - q * r; old_r = r; r = t;
        t = old_x - q * cur_x; old_x = cur_x; cur_x = t;
        t = old_y - q * cur_y; old_y = cur_y; cur_y = t;
    }
    if (old_r < 0) { old_r = -old_r; old_x = -old_x; old_y = -old_y; }
    x = old_x;
    y = old_y;
    return old_r;
}

// n = s * c^2 with s squarefree; deterministic trial division up to sqrt(n).
inline std::pair<BigInt, BigInt> squarefree_part(const BigInt& n) {
    if (n < 1) throw std::domain_error("squarefree_part: argument must be >= 1");
    BigInt rest = n, square_root = 1, core = 1;
    for (BigInt p = 2; p * p <= rest; ++p) {
        if (rest % p != 0) continue;
        int e = 0;
        while (rest % p == 0) { rest /= p; ++e; }
        for (int i = 0; i < e / 2; ++i) square_root *= p;
        if (e % 2 != 0) core *= p;
    }
    core *= rest;                  // leftover prime, exponent 1
    return {core, square_root};
}

inline bool is_perfect_square(const BigInt& n, BigInt& root) {
    if (n < 0) return false;
    root = boost::multiprecision::sqrt(n);
    return root * root == n;
}

inline BigInt parse_bigint(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("parse_bigint: empty string");
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) throw std::invalid_argument("parse_bigint: no digits");
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9')
            throw std::invalid_argument("parse_bigint: bad digit in '" + s + "'");
    return BigInt(s);
}

}  // namespace salemcert
