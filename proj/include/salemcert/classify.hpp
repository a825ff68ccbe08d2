#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "salemcert/cyclotomic.hpp"
#include "salemcert/irreducibility.hpp"
#include "salemcert/polynomial.hpp"
#include "salemcert/root_isolation.hpp"

namespace salemcert {

enum class ProfileKind {
    Salem,              // one unit-circle pair, one real pair, irreducible
    AllUnitCircle,
    NoUnitCircle,
    Cyclotomic,
    Reducible,
    BoundaryDegenerate  // transform root at +-2 or a repeated transform root
};

inline std::string profile_kind_str(ProfileKind k) {
    switch (k) {
        case ProfileKind::Salem: return "salem";
        case ProfileKind::AllUnitCircle: return "all_unit_circle";
        case ProfileKind::NoUnitCircle: return "no_unit_circle";
        case ProfileKind::Cyclotomic: return "cyclotomic";
        case ProfileKind::Reducible: return "reducible";
        case ProfileKind::BoundaryDegenerate: return "boundary_degenerate";
    }
    throw std::logic_error("profile_kind_str: bad kind");
}

inline ProfileKind profile_kind_from_str(const std::string& s) {
    if (s == "salem") return ProfileKind::Salem;
    if (s == "all_unit_circle") return ProfileKind::AllUnitCircle;
    if (s == "no_unit_circle") return ProfileKind::NoUnitCircle;
    if (s == "cyclotomic") return ProfileKind::Cyclotomic;
    if (s == "reducible") return ProfileKind::Reducible;
    if (s == "boundary_degenerate") return ProfileKind::BoundaryDegenerate;
    throw std::invalid_argument("profile_kind_from_str: unknown kind '" + s + "'");
}

// Exact root-structure profile of p = X^4 - aX^3 + bX^2 - aX + 1.
struct SalemProfile {
    BigInt a;
    BigInt b;
    IntPoly poly;
    ProfileKind kind = ProfileKind::Reducible;
    int unit_circle_pairs = 0;
    std::vector<RatInterval> real_root_boxes;   // all real roots, when p is squarefree
    BigInt discriminant;                        // a^2 - 4b + 8, of the transform
    bool rational_split = false;                // discriminant is a perfect square
    BigInt discriminant_core = 0;               // signed squarefree part otherwise
    BigInt discriminant_cofactor = 0;           // |disc| = |core| * cofactor^2
    std::vector<long> cyclotomic_indices;
    bool irreducible = false;
};

inline IntPoly reciprocal_quartic(const BigInt& a, const BigInt& b) {
    return IntPoly{BigInt(1), BigInt(-a), b, BigInt(-a), BigInt(1)};
}

namespace detail {

// The unique root of p in J is the reciprocal of the unique root in I:
// both J' = 1/I (endpointwise) and J isolate a root, and so does their
// intersection. Since p is reciprocal, 1/root(I) is a root inside J'.
inline bool reciprocal_pair_check(const IntPoly& p, const RatInterval& box_i,
                                  const RatInterval& box_j) {
    if (box_i.low.sign() * box_i.high.sign() <= 0) return false;  // 0 inside or on edge
    Rat inv_low = box_i.high.reciprocal();
    Rat inv_high = box_i.low.reciprocal();
    auto chain = sturm_chain(p);
    if (sturm_count(chain, inv_low, inv_high) != 1) return false;
    Rat lo = std::max(inv_low, box_j.low);
    Rat hi = std::min(inv_high, box_j.high);
    if (!(lo < hi)) return false;
    return sturm_count(chain, lo, hi) == 1 && sturm_count(chain, box_j.low, box_j.high) == 1;
}

}  // namespace detail

inline SalemProfile classify_reciprocal_quartic(const BigInt& a, const BigInt& b) {
    SalemProfile profile;
    profile.a = a;
    profile.b = b;
    profile.poly = reciprocal_quartic(a, b);
    const IntPoly& p = profile.poly;
    IntPoly transform{b - 2, -a, BigInt(1)};  // Y^2 - aY + (b-2)

    profile.discriminant = a * a - 4 * b + 8;
    BigInt disc = profile.discriminant;
    BigInt root;
    if (disc >= 0 && is_perfect_square(disc, root)) {
        profile.rational_split = true;
        profile.discriminant_core = 0;
        profile.discriminant_cofactor = root;
    } else {
        auto [core, cof] = squarefree_part(abs_of(disc));
        profile.discriminant_core = disc < 0 ? BigInt(-core) : core;
        profile.discriminant_cofactor = cof;
    }

    profile.irreducible = irreducible_quartic(p);
    profile.cyclotomic_indices = cyclotomic_factors(p);

    BigInt at_one = p.eval(Rat(1)).num();     // = transform(2)
    BigInt at_minus_one = p.eval(Rat(-1)).num();
    bool squarefree = disc != 0 && at_one != 0 && at_minus_one != 0;

    int inside = 0;
    if (squarefree) {
        if (disc > 0) {
            auto chain = sturm_chain(transform);
            inside = sturm_count(chain, Rat(-2), Rat(2));
        }
        profile.unit_circle_pairs = inside;
        profile.real_root_boxes = isolate_real_roots(p);
    } else {
        // degenerate strata: report multiplicity-aware counts, no boxes
        if (disc == 0) {
            Rat doubled = Rat(a, 2);
            if (doubled.abs() < Rat(2)) profile.unit_circle_pairs = 2;
        } else if (disc > 0) {
            // one transform root is +-2; the other is rational: a -+ 2
            Rat other = at_one == 0 ? Rat(a - 2) : Rat(a + 2);
            if (at_one == 0 && at_minus_one == 0) other = Rat(2);  // q = (Y-2)(Y+2)
            if (other.abs() < Rat(2)) profile.unit_circle_pairs = 1;
        }
    }

    if (!profile.irreducible) {
        profile.kind = ProfileKind::Reducible;
    } else if (!profile.cyclotomic_indices.empty()) {
        profile.kind = ProfileKind::Cyclotomic;
    } else if (!squarefree) {
        // unreachable for integer (a, b): a boundary stratum forces
        // reducibility over Q, which is caught above
        profile.kind = ProfileKind::BoundaryDegenerate;
    } else if (inside == 1) {
        profile.kind = ProfileKind::Salem;
    } else if (inside == 2) {
        profile.kind = ProfileKind::AllUnitCircle;
    } else {
        profile.kind = ProfileKind::NoUnitCircle;
    }

    if (profile.kind == ProfileKind::Salem) {
        if (profile.real_root_boxes.size() != 2)
            throw std::logic_error("classify: salem profile without two real roots");
        if (!detail::reciprocal_pair_check(p, profile.real_root_boxes[0],
                                           profile.real_root_boxes[1]))
            throw std::logic_error("classify: salem real roots are not a reciprocal pair");
    }
    return profile;
}

}  // namespace salemcert
