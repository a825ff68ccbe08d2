#pragma once

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

#include "salemcert/certify.hpp"
#include "salemcert/classify.hpp"

namespace salemcert {

using OrderedJson = nlohmann::ordered_json;

namespace detail {

// big integers always serialize as decimal strings; JSON consumers must not
// be trusted with 64-bit overflow
inline OrderedJson bigint_json(const BigInt& x) { return x.str(); }

inline OrderedJson rat_json(const Rat& x) { return x.str(); }

inline OrderedJson quadext_json(const QuadExt& x, const BigInt& ambient_d) {
    OrderedJson j;
    j["rat"] = x.rational_part().str();
    j["rad"] = x.radical_part().str();
    const BigInt& d = x.is_rational() ? ambient_d : x.radicand();
    if (d <= BigInt(1) << 53)
        j["D"] = d.convert_to<long long>();
    else
        j["D"] = d.str();
    return j;
}

inline QuadExt quadext_from_json(const OrderedJson& j) {
    Rat rat = Rat::parse(j.at("rat").get<std::string>());
    Rat rad = Rat::parse(j.at("rad").get<std::string>());
    BigInt d = j.at("D").is_string() ? parse_bigint(j.at("D").get<std::string>())
                                     : BigInt(j.at("D").get<long long>());
    if (rad.is_zero()) return QuadExt(rat);
    return QuadExt(rat, rad, d);
}

inline OrderedJson quad_poly_json(const QuadPoly& p, const BigInt& ambient_d) {
    OrderedJson arr = OrderedJson::array();
    for (const auto& c : p.coeffs()) arr.push_back(quadext_json(c, ambient_d));
    return arr;
}

inline QuadPoly quad_poly_from_json(const OrderedJson& arr) {
    std::vector<QuadExt> c;
    for (const auto& item : arr) c.push_back(quadext_from_json(item));
    return QuadPoly(std::move(c));
}

inline OrderedJson quad_matrix_json(const QuadMatrix& m, const BigInt& ambient_d) {
    OrderedJson rows = OrderedJson::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        OrderedJson row = OrderedJson::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(quadext_json(m(i, j), ambient_d));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline QuadMatrix quad_matrix_from_json(const OrderedJson& rows) {
    std::size_t r = rows.size();
    std::size_t c = r ? rows.at(0).size() : 0;
    QuadMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = quadext_from_json(rows.at(i).at(j));
    return m;
}

}  // namespace detail

inline OrderedJson profile_json(const SalemProfile& p) {
    OrderedJson j;
    j["kind"] = profile_kind_str(p.kind);
    j["unit_circle_pairs"] = p.unit_circle_pairs;
    OrderedJson boxes = OrderedJson::array();
    for (const auto& box : p.real_root_boxes) {
        OrderedJson b;
        b["low"] = box.low.str();
        b["high"] = box.high.str();
        boxes.push_back(std::move(b));
    }
    j["real_root_boxes"] = std::move(boxes);
    j["discriminant"] = detail::bigint_json(p.discriminant);
    if (p.rational_split)
        j["discriminant_core"] = "rational_split";
    else
        j["discriminant_core"] = detail::bigint_json(p.discriminant_core);
    j["discriminant_cofactor"] = detail::bigint_json(p.discriminant_cofactor);
    return j;
}

inline SalemProfile profile_from_json(const OrderedJson& j, const BigInt& a, const BigInt& b,
                                      const std::vector<long>& cyclotomic_indices,
                                      bool irreducible) {
    SalemProfile p;
    p.a = a;
    p.b = b;
    p.poly = reciprocal_quartic(a, b);
    p.kind = profile_kind_from_str(j.at("kind").get<std::string>());
    p.unit_circle_pairs = j.at("unit_circle_pairs").get<int>();
    for (const auto& box : j.at("real_root_boxes"))
        p.real_root_boxes.emplace_back(Rat::parse(box.at("low").get<std::string>()),
                                       Rat::parse(box.at("high").get<std::string>()));
    p.discriminant = parse_bigint(j.at("discriminant").get<std::string>());
    if (j.at("discriminant_core").get<std::string>() == "rational_split") {
        p.rational_split = true;
        p.discriminant_core = 0;
    } else {
        p.discriminant_core = parse_bigint(j.at("discriminant_core").get<std::string>());
    }
    p.discriminant_cofactor = parse_bigint(j.at("discriminant_cofactor").get<std::string>());
    p.cyclotomic_indices = cyclotomic_indices;
    p.irreducible = irreducible;
    return p;
}

inline OrderedJson certificate_json(const Certificate& c) {
    OrderedJson j;
    j["schema"] = "cert/1";
    OrderedJson input;
    input["a"] = detail::bigint_json(c.a);
    input["b"] = detail::bigint_json(c.b);
    input["poly"] = int_poly_str(c.poly);
    j["input"] = std::move(input);
    j["profile"] = profile_json(c.profile);
    j["irreducible"] = c.irreducible;
    OrderedJson cyc = OrderedJson::array();
    for (long k : c.cyclotomic_indices) cyc.push_back(k);
    j["cyclotomic_indices"] = std::move(cyc);
    if (c.has_factors) {
        OrderedJson field;
        if (c.field_radicand <= BigInt(1) << 53)
            field["D"] = c.field_radicand.convert_to<long long>();
        else
            field["D"] = c.field_radicand.str();
        j["field"] = std::move(field);
        OrderedJson factors;
        factors["elliptic"] = detail::quad_poly_json(c.factor_elliptic, c.field_radicand);
        factors["hyperbolic"] = detail::quad_poly_json(c.factor_hyperbolic, c.field_radicand);
        j["factors"] = std::move(factors);
    } else {
        j["field"] = nullptr;
        j["factors"] = nullptr;
    }
    if (c.has_gram) {
        j["gram"] = detail::quad_matrix_json(c.gram, c.field_radicand);
        j["isometry"] = c.isometry;
        j["metric_rank"] = c.metric_rank;
    } else {
        j["gram"] = nullptr;
        j["isometry"] = nullptr;
        j["metric_rank"] = nullptr;
    }
    if (c.h1_free_rank >= 0) {
        j["h1_free_rank"] = c.h1_free_rank;
        OrderedJson torsion = OrderedJson::array();
        for (const auto& d : c.h1_torsion) torsion.push_back(detail::bigint_json(d));
        j["h1_torsion"] = std::move(torsion);
    } else {
        j["h1_free_rank"] = nullptr;
        j["h1_torsion"] = nullptr;
    }
    if (c.fibration_bound_value >= 0)
        j["fibration_bound"] = c.fibration_bound_value;
    else
        j["fibration_bound"] = nullptr;
    j["verdict"] = verdict_str(c.verdict);
    OrderedJson reasons = OrderedJson::array();
    for (const auto& r : c.reasons) {
        OrderedJson rec;
        rec["check"] = r.check;
        rec["ok"] = r.ok;
        rec["detail"] = r.detail;
        reasons.push_back(std::move(rec));
    }
    j["reasons"] = std::move(reasons);
    OrderedJson assumptions = OrderedJson::array();
    for (const auto& s : c.assumptions) assumptions.push_back(s);
    j["assumptions"] = std::move(assumptions);
    return j;
}

inline std::string certificate_json_text(const Certificate& c) {
    return certificate_json(c).dump(2) + "\n";
}

inline Certificate certificate_from_json(const OrderedJson& j) {
    if (j.at("schema").get<std::string>() != "cert/1")
        throw std::invalid_argument("certificate_from_json: unknown schema");
    Certificate c;
    c.a = parse_bigint(j.at("input").at("a").get<std::string>());
    c.b = parse_bigint(j.at("input").at("b").get<std::string>());
    c.poly = parse_int_poly(j.at("input").at("poly").get<std::string>());
    c.irreducible = j.at("irreducible").get<bool>();
    for (const auto& k : j.at("cyclotomic_indices")) c.cyclotomic_indices.push_back(k.get<long>());
    c.profile = profile_from_json(j.at("profile"), c.a, c.b, c.cyclotomic_indices, c.irreducible);
    if (!j.at("field").is_null()) {
        c.has_factors = true;
        const auto& d = j.at("field").at("D");
        c.field_radicand = d.is_string() ? parse_bigint(d.get<std::string>())
                                         : BigInt(d.get<long long>());
        c.factor_elliptic = detail::quad_poly_from_json(j.at("factors").at("elliptic"));
        c.factor_hyperbolic = detail::quad_poly_from_json(j.at("factors").at("hyperbolic"));
    }
    if (!j.at("gram").is_null()) {
        c.has_gram = true;
        c.gram = detail::quad_matrix_from_json(j.at("gram"));
        c.isometry = j.at("isometry").get<bool>();
        c.metric_rank = j.at("metric_rank").get<long>();
    }
    if (!j.at("h1_free_rank").is_null()) {
        c.h1_free_rank = j.at("h1_free_rank").get<long>();
        for (const auto& d : j.at("h1_torsion"))
            c.h1_torsion.push_back(parse_bigint(d.get<std::string>()));
    }
    if (!j.at("fibration_bound").is_null())
        c.fibration_bound_value = j.at("fibration_bound").get<long>();
    c.verdict = verdict_from_str(j.at("verdict").get<std::string>());
    for (const auto& r : j.at("reasons"))
        c.reasons.push_back({r.at("check").get<std::string>(), r.at("ok").get<bool>(),
                             r.at("detail").get<std::string>()});
    for (const auto& s : j.at("assumptions")) c.assumptions.push_back(s.get<std::string>());
    return c;
}

inline OrderedJson search_json(const SearchBox& box, const std::vector<Certificate>& certs) {
    OrderedJson j;
    j["schema"] = "search/1";
    OrderedJson b;
    b["a_min"] = box.a_min;
    b["a_max"] = box.a_max;
    b["b_min"] = box.b_min;
    b["b_max"] = box.b_max;
    j["box"] = std::move(b);
    j["count"] = certs.size();
    OrderedJson list = OrderedJson::array();
    for (const auto& c : certs) list.push_back(certificate_json(c));
    j["certificates"] = std::move(list);
    return j;
}

}  // namespace salemcert
