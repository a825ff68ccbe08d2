#pragma once

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "salemcert/bigint.hpp"
#include "salemcert/quadratic_field.hpp"
#include "salemcert/rational.hpp"

namespace salemcert {

inline bool is_zero(const BigInt& x) { return x == 0; }

// Univariate polynomial with coefficients in ascending degree order.
// Normalized: no trailing zero coefficients; the zero polynomial has an
// empty coefficient list and degree -1.
template <typename T>
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }

    static Poly zero() { return Poly(); }
    static Poly constant(T v) { return Poly(std::vector<T>{std::move(v)}); }
    static Poly monomial(std::size_t deg, T v = T(1)) {
        std::vector<T> c(deg + 1, T(0));
        c[deg] = std::move(v);
        return Poly(std::move(c));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero_poly() const { return c_.empty(); }

    const std::vector<T>& coeffs() const { return c_; }

    // coefficient of X^i, zero beyond the degree
    const T& coeff(std::size_t i) const {
        static const T kZero = T(0);
        return i < c_.size() ? c_[i] : kZero;
    }

    const T& leading() const {
        if (c_.empty()) throw std::domain_error("Poly: leading coefficient of zero polynomial");
        return c_.back();
    }

    bool is_monic() const { return !c_.empty() && c_.back() == T(1); }

    template <typename U>
    U eval(const U& x) const {            // exact Horner
        U acc = U(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + U(*it);
        return acc;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<T> d(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * T(static_cast<int>(i));
        return Poly(std::move(d));
    }

    Poly operator-() const {
        std::vector<T> r(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
        return Poly(std::move(r));
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<T> r(std::max(a.c_.size(), b.c_.size()), T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = r[i] + a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] + b.c_[i];
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.c_.empty() || b.c_.empty()) return Poly();
        std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        return Poly(std::move(r));
    }

    Poly scaled(const T& s) const {
        std::vector<T> r(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * s;
        return Poly(std::move(r));
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const Poly& p) {
        os << '[';
        for (std::size_t i = 0; i < p.c_.size(); ++i) {
            if (i) os << ',';
            os << p.c_[i];
        }
        return os << ']';
    }

private:
    void trim() {
        while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
    }

    std::vector<T> c_;
};

using IntPoly = Poly<BigInt>;
using RatPoly = Poly<Rat>;
using QuadPoly = Poly<QuadExt>;

// --- division ---------------------------------------------------------

// Long division over a field; T must support exact division.
template <typename T>
std::pair<Poly<T>, Poly<T>> divmod(const Poly<T>& a, const Poly<T>& b) {
    if (b.is_zero_poly()) throw std::domain_error("Poly: division by zero polynomial");
    std::vector<T> rem(a.coeffs());
    int db = b.degree();
    if (a.degree() < db) return {Poly<T>(), a};
    std::vector<T> quo(a.degree() - db + 1, T(0));
    for (int i = a.degree(); i >= db; --i) {
        if (is_zero(rem[i])) continue;
        T q = rem[i] / b.leading();
        quo[i - db] = q;
        for (int j = 0; j <= db; ++j) rem[i - db + j] = rem[i - db + j] - q * b.coeff(j);
    }
    return {Poly<T>(std::move(quo)), Poly<T>(std::move(rem))};
}

// Division by a monic divisor; valid over any commutative ring.
template <typename T>
std::pair<Poly<T>, Poly<T>> divmod_monic(const Poly<T>& a, const Poly<T>& b) {
    if (!b.is_monic()) throw std::domain_error("Poly: divmod_monic needs a monic divisor");
    std::vector<T> rem(a.coeffs());
    int db = b.degree();
    if (a.degree() < db) return {Poly<T>(), a};
    std::vector<T> quo(a.degree() - db + 1, T(0));
    for (int i = a.degree(); i >= db; --i) {
        if (is_zero(rem[i])) continue;
        T q = rem[i];
        quo[i - db] = q;
        for (int j = 0; j <= db; ++j) rem[i - db + j] = rem[i - db + j] - q * b.coeff(j);
    }
    return {Poly<T>(std::move(quo)), Poly<T>(std::move(rem))};
}

template <typename T>
bool divides_monic(const Poly<T>& d, const Poly<T>& p) {
    return divmod_monic(p, d).second.is_zero_poly();
}

// --- integer polynomial utilities --------------------------------------

inline BigInt content(const IntPoly& p) {
    BigInt g = 0;
    for (const auto& c : p.coeffs()) g = gcd_of(g, abs_of(c));
    return g;
}

// content 1, positive leading coefficient; zero polynomial maps to itself
inline IntPoly primitive_part(const IntPoly& p) {
    if (p.is_zero_poly()) return p;
    BigInt g = content(p);
    if (p.leading() < 0) g = -g;
    std::vector<BigInt> r(p.coeffs());
    for (auto& c : r) c /= g;
    return IntPoly(std::move(r));
}

// remainder of lc(b)^(deg a - deg b + 1) * a under division by b
inline IntPoly pseudo_rem(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero_poly()) throw std::domain_error("Poly: pseudo_rem by zero");
    int db = b.degree();
    if (a.degree() < db) return a;
    BigInt lb = b.leading();
    IntPoly r = a;
    int e = a.degree() - db + 1;
    while (!r.is_zero_poly() && r.degree() >= db) {
        IntPoly s = IntPoly::monomial(static_cast<std::size_t>(r.degree() - db), r.leading());
        r = r.scaled(lb) - s * b;
        --e;
    }
    while (e-- > 0) r = r.scaled(lb);
    return r;
}

// Primitive gcd over Q via the subresultant remainder sequence.
inline IntPoly poly_gcd(IntPoly p, IntPoly q) {
    if (p.is_zero_poly()) return primitive_part(q);
    if (q.is_zero_poly()) return primitive_part(p);
    p = primitive_part(p);
    q = primitive_part(q);
    if (p.degree() < q.degree()) std::swap(p, q);
    BigInt g = 1, h = 1;
    while (true) {
        int delta = p.degree() - q.degree();
        IntPoly r = pseudo_rem(p, q);
        if (r.is_zero_poly()) break;
        if (r.degree() == 0) return IntPoly{BigInt(1)};
        p = q;
        BigInt divisor = g * pow(h, static_cast<unsigned>(delta));
        std::vector<BigInt> rc(r.coeffs());
        for (auto& c : rc) {
            if (c % divisor != 0) throw std::logic_error("poly_gcd: subresultant division not exact");
            c /= divisor;
        }
        q = IntPoly(std::move(rc));
        g = p.leading();
        // h = g^delta / h^(delta-1)
        if (delta == 0) {
            // h unchanged
        } else {
            BigInt num = pow(g, static_cast<unsigned>(delta));
            BigInt den = pow(h, static_cast<unsigned>(delta - 1));
            if (den != 0 && num % den == 0) h = num / den;
            else throw std::logic_error("poly_gcd: subresultant h-update not exact");
        }
    }
    return primitive_part(q);
}

// --- reciprocal (palindromic) structure ---------------------------------

inline bool is_reciprocal(const IntPoly& p) {
    if (p.is_zero_poly()) return false;
    int n = p.degree();
    for (int i = 0; 2 * i <= n; ++i)
        if (p.coeff(i) != p.coeff(n - i)) return false;
    return true;
}

// For reciprocal p of even degree 2k, the unique q of degree k with
// p(X) = X^k * q(X + 1/X).
inline IntPoly reciprocal_transform(const IntPoly& p) {
    if (!is_reciprocal(p)) throw std::domain_error("reciprocal_transform: polynomial is not reciprocal");
    if (p.degree() % 2 != 0) throw std::domain_error("reciprocal_transform: odd degree");
    int k = p.degree() / 2;
    IntPoly rem = p;
    std::vector<BigInt> q(static_cast<std::size_t>(k) + 1, BigInt(0));
    // X^(k-j) * (X^2+1)^j  is the expansion of  X^k * Y^j  at  Y = X + 1/X
    const IntPoly x2p1{BigInt(1), BigInt(0), BigInt(1)};
    for (int j = k; j >= 0; --j) {
        BigInt c = rem.coeff(static_cast<std::size_t>(k + j));
        q[static_cast<std::size_t>(j)] = c;
        if (c == 0) continue;
        IntPoly term = IntPoly::monomial(static_cast<std::size_t>(k - j), c);
        IntPoly pw{BigInt(1)};
        for (int i = 0; i < j; ++i) pw = pw * x2p1;
        rem = rem - term * pw;
    }
    if (!rem.is_zero_poly()) throw std::logic_error("reciprocal_transform: residual nonzero");
    return IntPoly(std::move(q));
}

// --- conversions and text format ----------------------------------------

inline RatPoly to_rat_poly(const IntPoly& p) {
    std::vector<Rat> c;
    c.reserve(p.coeffs().size());
    for (const auto& x : p.coeffs()) c.emplace_back(x);
    return RatPoly(std::move(c));
}

inline QuadPoly to_quad_poly(const IntPoly& p) {
    std::vector<QuadExt> c;
    c.reserve(p.coeffs().size());
    for (const auto& x : p.coeffs()) c.emplace_back(Rat(x));
    return QuadPoly(std::move(c));
}

// comma-separated ascending coefficients, e.g. "1,-2,0,-2,1"
inline IntPoly parse_int_poly(const std::string& text) {
    std::vector<BigInt> c;
    std::string tok;
    std::istringstream is(text);
    while (std::getline(is, tok, ',')) {
        auto b = tok.find_first_not_of(" \t");
        auto e = tok.find_last_not_of(" \t");
        if (b == std::string::npos) throw std::invalid_argument("parse_int_poly: empty coefficient");
        c.push_back(parse_bigint(tok.substr(b, e - b + 1)));
    }
    if (c.empty()) throw std::invalid_argument("parse_int_poly: no coefficients");
    return IntPoly(std::move(c));
}

inline std::string int_poly_str(const IntPoly& p) {
    if (p.is_zero_poly()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        if (i) os << ',';
        os << p.coeffs()[i];
    }
    return os.str();
}

}  // namespace salemcert
