#pragma once

#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "salemcert/bigint.hpp"
#include "salemcert/rational.hpp"

namespace salemcert {

// Element a + b*sqrt(D) of a real quadratic field Q(sqrt(D)), D squarefree >= 2.
// Pure rationals are canonicalized to b = 0, D = 0 and interoperate with any
// radicand; mixing two distinct radicands is an error, never a coercion.
// Sign and comparison are decided by integer arithmetic alone: for opposite
// signs of a and b, sign(a + b*sqrt(D)) follows from comparing a^2 with D*b^2.
class QuadExt {
public:
    QuadExt() : D_(0) {}
    QuadExt(int n) : rat_(n), D_(0) {}          // NOLINT: implicit by design
    QuadExt(Rat r) : rat_(std::move(r)), D_(0) {}

    QuadExt(Rat rational_part, Rat radical_part, BigInt radicand)
        : rat_(std::move(rational_part)), rad_(std::move(radical_part)), D_(std::move(radicand)) {
        if (rad_.is_zero()) {
            D_ = 0;
        } else {
            if (D_ < 2) throw std::domain_error("QuadExt: radicand must be >= 2");
            auto [core, sq] = squarefree_part(D_);
            if (sq != 1) throw std::domain_error("QuadExt: radicand must be squarefree");
        }
    }

    static QuadExt sqrt_of(BigInt D) { return QuadExt(Rat(0), Rat(1), std::move(D)); }

    const Rat& rational_part() const { return rat_; }
    const Rat& radical_part() const { return rad_; }
    const BigInt& radicand() const { return D_; }

    bool is_rational() const { return rad_.is_zero(); }
    bool is_zero() const { return rat_.is_zero() && rad_.is_zero(); }

    QuadExt conj() const { return make(rat_, -rad_, D_); }

    // Field norm x * conj(x) = a^2 - D*b^2; always rational.
    Rat norm() const { return rat_ * rat_ - Rat(D_) * rad_ * rad_; }

    int sign() const {
        int sa = rat_.sign(), sb = rad_.sign();
        if (sb == 0) return sa;
        if (sa == 0) return sb;
        if (sa == sb) return sa;
        Rat lhs = rat_ * rat_;          // a^2
        Rat rhs = Rat(D_) * rad_ * rad_;  // D b^2
        if (lhs == rhs) return 0;        // impossible for squarefree D >= 2
        return lhs > rhs ? sa : sb;
    }

    QuadExt operator-() const { return make(-rat_, -rad_, D_); }

    friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
        BigInt D = merge_radicand(x, y);
        return make(x.rat_ + y.rat_, x.rad_ + y.rad_, D);
    }
    friend QuadExt operator-(const QuadExt& x, const QuadExt& y) {
        BigInt D = merge_radicand(x, y);
        return make(x.rat_ - y.rat_, x.rad_ - y.rad_, D);
    }
    friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
        BigInt D = merge_radicand(x, y);
        return make(x.rat_ * y.rat_ + Rat(D) * x.rad_ * y.rad_,
                    x.rat_ * y.rad_ + x.rad_ * y.rat_, D);
    }
    friend QuadExt operator/(const QuadExt& x, const QuadExt& y) {
        if (y.is_zero()) throw std::domain_error("QuadExt: division by zero");
        BigInt D = merge_radicand(x, y);
        Rat n = y.norm();
        QuadExt num = x * y.conj();
        return make(num.rat_ / n, num.rad_ / n, D);
    }

    QuadExt& operator+=(const QuadExt& o) { return *this = *this + o; }
    QuadExt& operator-=(const QuadExt& o) { return *this = *this - o; }
    QuadExt& operator*=(const QuadExt& o) { return *this = *this * o; }
    QuadExt& operator/=(const QuadExt& o) { return *this = *this / o; }

    friend bool operator==(const QuadExt& x, const QuadExt& y) {
        return x.rat_ == y.rat_ && x.rad_ == y.rad_ && x.D_ == y.D_;
    }
    friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }

    // "p/q" for rationals, "p/q + r/s*sqrt(D)" otherwise
    std::string str() const {
        if (is_rational()) return rat_.str();
        std::ostringstream os;
        os << rat_.str() << " + " << rad_.str() << "*sqrt(" << D_ << ")";
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const QuadExt& x) {
        return os << x.str();
    }

private:
    static QuadExt make(Rat a, Rat b, BigInt D) {
        QuadExt r;
        r.rat_ = std::move(a);
        r.rad_ = std::move(b);
        r.D_ = r.rad_.is_zero() ? BigInt(0) : std::move(D);
        return r;
    }

    static BigInt merge_radicand(const QuadExt& x, const QuadExt& y) {
        if (x.D_ == y.D_) return x.D_;
        if (x.D_ == 0) return y.D_;
        if (y.D_ == 0) return x.D_;
        throw std::domain_error("QuadExt: radicand mismatch (sqrt(" + x.D_.str() +
                                ") vs sqrt(" + y.D_.str() + "))");
    }

    Rat rat_;
    Rat rad_;
    BigInt D_;
};

inline int sign_of(const QuadExt& x) { return x.sign(); }
inline bool is_zero(const QuadExt& x) { return x.is_zero(); }

}  // namespace salemcert
