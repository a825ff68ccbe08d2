#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "salemcert/polynomial.hpp"
#include "salemcert/rational.hpp"

namespace salemcert {

// Open interval with rational endpoints. When used as an isolating interval
// the target polynomial has exactly one root inside and is nonzero at both
// endpoints.
struct RatInterval {
    Rat low;
    Rat high;

    RatInterval(Rat lo, Rat hi) : low(std::move(lo)), high(std::move(hi)) {
        if (!(low < high)) throw std::invalid_argument("RatInterval: low must be < high");
    }

    Rat width() const { return high - low; }

    friend bool operator==(const RatInterval& a, const RatInterval& b) {
        return a.low == b.low && a.high == b.high;
    }
};

// positive-rescale to a primitive integer polynomial, keeping the sign of
// every coefficient
inline IntPoly primitive_scaled(const RatPoly& p) {
    if (p.is_zero_poly()) return IntPoly();
    BigInt den = 1;
    for (const auto& c : p.coeffs()) den = den / gcd_of(den, c.den()) * c.den();
    std::vector<BigInt> ints;
    ints.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) ints.push_back(c.num() * (den / c.den()));
    BigInt g = 0;
    for (const auto& c : ints) g = gcd_of(g, abs_of(c));
    for (auto& c : ints) c /= g;
    return IntPoly(std::move(ints));
}

inline IntPoly primitive_scaled(const IntPoly& p) {
    if (p.is_zero_poly()) return p;
    BigInt g = content(p);
    std::vector<BigInt> r(p.coeffs());
    for (auto& c : r) c /= g;
    return IntPoly(std::move(r));
}

// Canonical Sturm sequence p, p', -rem(...), each element scaled to a
// primitive integer polynomial.
inline std::vector<IntPoly> sturm_chain(const IntPoly& p) {
    std::vector<IntPoly> chain;
    if (p.is_zero_poly()) return chain;
    chain.push_back(primitive_scaled(p));
    IntPoly d = p.derivative();
    if (d.is_zero_poly()) return chain;
    chain.push_back(primitive_scaled(d));
    while (true) {
        const IntPoly& s0 = chain[chain.size() - 2];
        const IntPoly& s1 = chain[chain.size() - 1];
        RatPoly rem = divmod(to_rat_poly(s0), to_rat_poly(s1)).second;
        if (rem.is_zero_poly()) break;
        std::vector<Rat> neg;
        neg.reserve(rem.coeffs().size());
        for (const auto& c : rem.coeffs()) neg.push_back(-c);
        chain.push_back(primitive_scaled(RatPoly(std::move(neg))));
        if (chain.back().degree() == 0) break;
    }
    return chain;
}

inline int sign_variations_at(const std::vector<IntPoly>& chain, const Rat& x) {
    int variations = 0, prev = 0;
    for (const auto& s : chain) {
        int sg = s.eval(x).sign();
        if (sg == 0) continue;
        if (prev != 0 && sg != prev) ++variations;
        prev = sg;
    }
    return variations;
}

inline int sturm_count(const std::vector<IntPoly>& chain, const Rat& low, const Rat& high) {
    return sign_variations_at(chain, low) - sign_variations_at(chain, high);
}

// Number of distinct real roots of p in (low, high]; endpoints must not be
// roots (the caller perturbs them rationally when they are).
inline int sturm_count(const IntPoly& p, const RatInterval& interval) {
    if (p.is_zero_poly()) throw std::domain_error("sturm_count: zero polynomial");
    if (p.eval(interval.low).is_zero() || p.eval(interval.high).is_zero())
        throw std::domain_error("sturm_count: interval endpoint is a root");
    auto chain = sturm_chain(p);
    return sturm_count(chain, interval.low, interval.high);
}

// B with every real root of p strictly inside (-B, B)
inline Rat cauchy_root_bound(const IntPoly& p) {
    if (p.is_zero_poly()) throw std::domain_error("cauchy_root_bound: zero polynomial");
    Rat lead = Rat(abs_of(p.leading()));
    Rat maxc(0);
    for (int i = 0; i < p.degree(); ++i) {
        Rat c = Rat(abs_of(p.coeff(static_cast<std::size_t>(i)))) / lead;
        if (c > maxc) maxc = c;
    }
    return maxc + Rat(1);
}

// Endpoint nudge step for root collisions: 1/(1 + max|coefficient|) * 2^-10.
inline Rat nudge_step(const IntPoly& p) {
    BigInt m = 0;
    for (const auto& c : p.coeffs()) m = std::max(m, abs_of(c));
    return Rat(BigInt(1), (1 + m) * 1024);
}

namespace detail {

inline void isolate_rec(const std::vector<IntPoly>& chain, const IntPoly& sf, const Rat& lo,
                        const Rat& hi, int count, const Rat& max_width,
                        std::vector<RatInterval>& out) {
    if (count == 0) return;
    if (count == 1 && hi - lo <= max_width) {
        out.emplace_back(lo, hi);
        return;
    }
    Rat mid = (lo + hi) / Rat(2);
    if (sf.eval(mid).is_zero()) {
        // rational root exactly at the split point: carve a tight isolating
        // interval around it, then recurse on the two remaining pieces
        Rat w = (hi - lo) / Rat(4);
        Rat half_max = max_width / Rat(2);
        if (w > half_max) w = half_max;
        while (sf.eval(mid - w).is_zero() || sf.eval(mid + w).is_zero() ||
               sturm_count(chain, mid - w, mid + w) != 1)
            w = w / Rat(2);
        int left = sturm_count(chain, lo, mid - w);
        int right = sturm_count(chain, mid + w, hi);
        isolate_rec(chain, sf, lo, mid - w, left, max_width, out);
        out.emplace_back(mid - w, mid + w);
        isolate_rec(chain, sf, mid + w, hi, right, max_width, out);
        return;
    }
    int left = sturm_count(chain, lo, mid);
    isolate_rec(chain, sf, lo, mid, left, max_width, out);
    isolate_rec(chain, sf, mid, hi, count - left, max_width, out);
}

}  // namespace detail

// Pairwise disjoint isolating intervals, one per distinct real root of p,
// each of width <= 2^-20, sorted ascending.
inline std::vector<RatInterval> isolate_real_roots(const IntPoly& p) {
    if (p.is_zero_poly()) throw std::domain_error("isolate_real_roots: zero polynomial");
    if (p.degree() == 0) return {};
    IntPoly sf = primitive_scaled(p);
    IntPoly g = poly_gcd(p, p.derivative());
    if (g.degree() > 0)
        sf = primitive_scaled(divmod(to_rat_poly(p), to_rat_poly(g)).first);
    auto chain = sturm_chain(sf);
    Rat bound = cauchy_root_bound(sf);
    Rat max_width(BigInt(1), BigInt(1) << 20);
    int total = sturm_count(chain, -bound, bound);
    std::vector<RatInterval> out;
    detail::isolate_rec(chain, sf, -bound, bound, total, max_width, out);
    return out;
}

}  // namespace salemcert
