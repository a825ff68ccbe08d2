#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "salemcert/classify.hpp"
#include "salemcert/matrix.hpp"
#include "salemcert/metric.hpp"
#include "salemcert/smith.hpp"
#include "salemcert/spectral.hpp"
#include "salemcert/suspension.hpp"

namespace salemcert {

enum class Verdict { Counterexample, NotCounterexample, InvalidInput };

inline std::string verdict_str(Verdict v) {
    switch (v) {
        case Verdict::Counterexample: return "counterexample";
        case Verdict::NotCounterexample: return "not_counterexample";
        case Verdict::InvalidInput: return "invalid_input";
    }
    throw std::logic_error("verdict_str: bad verdict");
}

inline Verdict verdict_from_str(const std::string& s) {
    if (s == "counterexample") return Verdict::Counterexample;
    if (s == "not_counterexample") return Verdict::NotCounterexample;
    if (s == "invalid_input") return Verdict::InvalidInput;
    throw std::invalid_argument("verdict_from_str: unknown verdict '" + s + "'");
}

struct CheckRecord {
    std::string check;
    bool ok = false;
    std::string detail;

    friend bool operator==(const CheckRecord& a, const CheckRecord& b) {
        return a.check == b.check && a.ok == b.ok && a.detail == b.detail;
    }
};

// The full verified chain for one reciprocal quartic. Every stored value is
// reproduced by re-running its producing operation on the input.
struct Certificate {
    BigInt a;
    BigInt b;
    IntPoly poly;
    SalemProfile profile;
    bool irreducible = false;
    std::vector<long> cyclotomic_indices;

    bool has_factors = false;
    BigInt field_radicand = 0;      // D of Q(sqrt(D))
    QuadPoly factor_elliptic;       // X^2 - y_- X + 1, |y_-| < 2
    QuadPoly factor_hyperbolic;    // X^2 - y_+ X + 1, |y_+| > 2

    bool has_gram = false;
    QuadMatrix gram;               // 5x5 over Q(sqrt(D))
    bool isometry = false;
    long metric_rank = -1;

    long h1_free_rank = -1;
    std::vector<BigInt> h1_torsion;
    long fibration_bound_value = -1;

    Verdict verdict = Verdict::InvalidInput;
    std::vector<CheckRecord> reasons;
    std::vector<std::string> assumptions;
};

namespace detail {

inline std::vector<std::string> certificate_assumptions() {
    return {
        "the suspension group acts properly discontinuously, freely and cocompactly on "
        "R^4 x R, so the quotient is a closed 5-manifold (structural, not computed)",
        "lattice translations preserve the metric because its matrix is constant in the "
        "global coordinates (structural, not computed)",
        "a constant-coefficient metric has flat coordinates by definition, and flatness "
        "descends to the quotient (structural, not computed)",
        "the suspension is covered, with infinite degree, by a fiber bundle over the "
        "4-torus (prose context, not verified)",
    };
}

}  // namespace detail

inline Certificate certify(const BigInt& a, const BigInt& b) {
    Certificate cert;
    cert.a = a;
    cert.b = b;
    cert.poly = reciprocal_quartic(a, b);
    cert.profile = classify_reciprocal_quartic(a, b);
    cert.irreducible = cert.profile.irreducible;
    cert.cyclotomic_indices = cert.profile.cyclotomic_indices;
    cert.assumptions = detail::certificate_assumptions();

    auto push = [&cert](std::string name, bool ok, std::string detail) {
        cert.reasons.push_back({std::move(name), ok, std::move(detail)});
        return ok;
    };

    bool salem = cert.profile.kind == ProfileKind::Salem;
    std::string kind = profile_kind_str(cert.profile.kind);
    std::string classify_detail = kind;
    if (cert.profile.kind == ProfileKind::Cyclotomic) {
        std::ostringstream os;
        os << "cyclotomic: Phi_k divides the polynomial for k in {";
        for (std::size_t i = 0; i < cert.cyclotomic_indices.size(); ++i)
            os << (i ? "," : "") << cert.cyclotomic_indices[i];
        os << "}";
        classify_detail = os.str();
    } else if (cert.profile.kind == ProfileKind::Reducible) {
        classify_detail = "reducible over Q";
    }
    if (!push("classification", salem, classify_detail)) {
        cert.verdict = Verdict::NotCounterexample;
        return cert;
    }

    // independent of the salem classification: no A^m - I may be singular
    push("cyclotomic_free", cert.cyclotomic_indices.empty(),
         cert.cyclotomic_indices.empty() ? "no cyclotomic divisor"
                                         : "cyclotomic divisor present");

    IntMatrix companion = companion_matrix(cert.poly);
    bool charpoly_ok = char_poly(companion) == cert.poly;
    push("companion_charpoly", charpoly_ok,
         charpoly_ok ? "char poly of companion equals input" : "char poly mismatch");

    // factor over Q(sqrt(D)): transform roots y = (a +- c sqrt(D)) / 2
    const BigInt& d_core = cert.profile.discriminant_core;
    const BigInt& cof = cert.profile.discriminant_cofactor;
    bool factor_ok = false;
    if (d_core > 1) {
        cert.field_radicand = d_core;
        QuadExt y_minus(Rat(a, 2), Rat(-cof, 2), d_core);
        QuadExt y_plus(Rat(a, 2), Rat(cof, 2), d_core);
        cert.factor_elliptic = QuadPoly{QuadExt(1), -y_minus, QuadExt(1)};
        cert.factor_hyperbolic = QuadPoly{QuadExt(1), -y_plus, QuadExt(1)};
        // the elliptic root is the one with |y| < 2
        auto elliptic = [](const QuadExt& y) { return (QuadExt(4) - y * y).sign() > 0; };
        bool minus_elliptic = elliptic(y_minus);
        bool plus_elliptic = elliptic(y_plus);
        if (minus_elliptic == plus_elliptic)
            throw std::logic_error("certify: salem quartic without a unique elliptic factor");
        if (plus_elliptic) std::swap(cert.factor_elliptic, cert.factor_hyperbolic);
        factor_ok = cert.factor_elliptic * cert.factor_hyperbolic == to_quad_poly(cert.poly);
        cert.has_factors = true;
    }
    push("field_factorization", factor_ok,
         factor_ok ? "quadratic factor product re-expands to the input polynomial"
                   : "factorization over Q(sqrt(D)) failed");

    bool rank_ok = false, isometry_ok = false;
    if (factor_ok) {
        SpectralSplit split =
            spectral_projectors(companion, cert.factor_elliptic, cert.factor_hyperbolic);
        GramForm gram = ambient_gram(companion, split);
        cert.gram = gram.entries;
        cert.has_gram = true;
        cert.metric_rank = gram.rank;
        rank_ok = cert.metric_rank == 3;
        cert.isometry = verify_isometry(gram, companion);
        isometry_ok = cert.isometry;
    }
    push("metric_rank", rank_ok, "rank " + std::to_string(cert.metric_rank));
    push("isometry", isometry_ok,
         isometry_ok ? "monodromy preserves the metric" : "isometry check failed");

    SnfResult snf = smith_normal_form(power_minus_identity(companion, 1));
    long zeros = 0;
    cert.h1_torsion.clear();
    for (const auto& d : snf.divisors) {
        if (d == 0) ++zeros;
        else if (d > 1) cert.h1_torsion.push_back(d);
    }
    cert.h1_free_rank = 1 + zeros;
    push("abelianization", true, "h1 computed from the elementary divisors of A - I");

    cert.fibration_bound_value = fibration_bound(companion);
    bool beats_bound = cert.metric_rank > cert.fibration_bound_value;
    push("rank_exceeds_bound", beats_bound,
         "metric rank " + std::to_string(cert.metric_rank) + " vs fibration bound " +
             std::to_string(cert.fibration_bound_value));

    bool all_ok = true;
    for (const auto& r : cert.reasons) all_ok = all_ok && r.ok;
    cert.verdict = all_ok ? Verdict::Counterexample : Verdict::NotCounterexample;
    return cert;
}

struct SearchBox {
    long a_min, a_max;
    long b_min, b_max;
};

// Certify every pair in the box; the counterexamples, in lexicographic
// (a, b) order.
inline std::vector<Certificate> search_box(const SearchBox& box) {
    if (box.a_min > box.a_max || box.b_min > box.b_max)
        throw std::invalid_argument("search_box: empty range");
    std::vector<Certificate> hits;
    for (long a = box.a_min; a <= box.a_max; ++a)
        for (long b = box.b_min; b <= box.b_max; ++b) {
            Certificate cert = certify(BigInt(a), BigInt(b));
            if (cert.verdict == Verdict::Counterexample) hits.push_back(std::move(cert));
        }
    return hits;
}

}  // namespace salemcert
