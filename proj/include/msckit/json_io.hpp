#ifndef MSCKIT_JSON_IO_HPP
#define MSCKIT_JSON_IO_HPP

#include <json.hpp>

#include <numeric>
#include <string>

#include "msckit/automorphisms.hpp"
#include "msckit/classify2d.hpp"
#include "msckit/construct.hpp"
#include "msckit/derivations.hpp"
#include "msckit/experiments.hpp"
#include "msckit/msc.hpp"
#include "msckit/simplicity.hpp"

namespace msc {

using Json = nlohmann::ordered_json;

inline Json field_to_json(const FieldSpec& f) {
    if (f.kind == FieldSpec::Kind::Rationals) return Json{{"type", "Q"}};
    return Json{{"type", "GF"}, {"p", f.p}};
}

inline FieldSpec field_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("type") || !j["type"].is_string())
        throw ValidationError("field must be {\"type\":\"Q\"} or {\"type\":\"GF\",\"p\":...}");
    std::string type = j["type"];
    if (type == "Q") return FieldSpec::rationals();
    if (type == "GF") {
        if (!j.contains("p") || !j["p"].is_number_unsigned())
            throw ValidationError("GF field needs a prime \"p\"");
        return FieldSpec::prime(j["p"].get<std::uint64_t>());
    }
    throw ValidationError("unknown field type '" + type + "'");
}

template <class F>
Json matrix_to_json(const Matrix<F>& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.field().to_string(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

template <class F>
Json vec_to_json(const F& field, const Vec<F>& v) {
    Json row = Json::array();
    for (const auto& x : v) row.push_back(field.to_string(x));
    return row;
}

template <class F>
Json subspace_to_json(const Subspace<F>& s) {
    Json rows = Json::array();
    for (const auto& b : s.basis()) rows.push_back(vec_to_json(s.field(), b));
    return rows;
}

template <class F>
Json msc_to_json(const Msc<F>& A) {
    Json j;
    j["n"] = A.dim();
    j["field"] = field_to_json(A.field().spec());
    j["entries"] = matrix_to_json(A.matrix());
    return j;
}

/// Parses and validates the MSC interchange schema:
/// {"n": 2, "field": {...}, "entries": [["0","1",...], ...]} with n rows of
/// n² scalar strings.
template <class F>
Msc<F> msc_from_json(const Json& j, const F& field) {
    if (!j.is_object() || !j.contains("n") || !j.contains("entries"))
        throw ValidationError("MSC needs \"n\" and \"entries\"");
    if (!j["n"].is_number_unsigned() || j["n"].get<std::uint64_t>() < 1)
        throw ValidationError("\"n\" must be a positive integer");
    const std::size_t n = j["n"].get<std::size_t>();
    const auto& entries = j["entries"];
    if (!entries.is_array() || entries.size() != n)
        throw ValidationError("\"entries\" must have n rows");
    Msc<F> A(field, n);
    for (std::size_t k = 0; k < n; ++k) {
        const auto& row = entries[k];
        if (!row.is_array() || row.size() != n * n)
            throw ValidationError("each entries row must have n^2 scalars");
        for (std::size_t c = 0; c < n * n; ++c) {
            if (!row[c].is_string()) throw ValidationError("scalars are strings");
            A.matrix().at(k, c) = field.parse(row[c].get<std::string>());
        }
    }
    return A;
}

template <class F>
Json der_report_to_json(const Msc<F>& A) {
    auto basis = derivation_basis(A);
    Json j;
    j["trivial"] = basis.empty();
    j["dim"] = basis.size();
    Json b = Json::array();
    for (const auto& D : basis) b.push_back(matrix_to_json(D));
    j["basis"] = std::move(b);
    j["rank_MA"] = derivation_rank(A);
    return j;
}

template <class F>
Json aut_verdict_to_json(const AutVerdict<F>& v) {
    Json j;
    j["status"] = v.status == AutStatus::Trivial      ? "Trivial"
                  : v.status == AutStatus::NonTrivial ? "NonTrivial"
                                                      : "Unknown";
    j["method"] = v.method == AutMethod::Exhaustive ? "Exhaustive" : "WitnessOnly";
    if (v.order) j["order"] = *v.order;
    if (v.witness) j["witness"] = matrix_to_json(*v.witness);
    return j;
}

template <class F>
Json simple_verdict_to_json(const SimplicityVerdict<F>& v) {
    Json j;
    j["status"] = v.status == SimpleStatus::Simple      ? "Simple"
                  : v.status == SimpleStatus::NotSimple ? "NotSimple"
                                                        : "Unknown";
    j["method"] = v.method == SimpleMethod::ProjectiveScan    ? "ProjectiveScan"
                  : v.method == SimpleMethod::EigenlineSearch ? "EigenlineSearch"
                                                              : "CandidateClosures";
    if (v.certificate) j["certificate"] = subspace_to_json(*v.certificate);
    if (v.n1_convention) j["n1_convention"] = true;
    return j;
}

inline Json audit_report_to_json(const AuditReport& r) {
    Json j;
    j["field"] = field_to_json(r.field);
    j["property"] = prop_name(r.property);
    j["total_msc"] = r.total_msc;
    j["holding"] = r.holding;
    Json fams = Json::array();
    for (const auto& f : r.families) fams.push_back(Json{{"id", f.id}, {"instances", f.instances}});
    j["families"] = std::move(fams);
    j["sound"] = r.sound;
    j["complete"] = r.complete;
    j["unique"] = r.unique;
    Json viols = Json::array();
    PrimeField F(r.field.p);
    for (const auto& v : r.violations) {
        Json e{{"kind", v.kind}, {"family", v.family}};
        e["msc"] = matrix_to_json(detail::unpack_msc2(F, v.msc_code).matrix());
        viols.push_back(std::move(e));
    }
    j["violations"] = std::move(viols);
    return j;
}

inline std::string exact_fraction(std::uint64_t num, std::uint64_t den) {
    if (den == 0) return "0";
    std::uint64_t g = std::gcd(num, den);
    return std::to_string(num / g) + "/" + std::to_string(den / g);
}

/// Report bytes are deterministic for a fixed seed: timing is never part of
/// the serialized report.
inline Json density_report_to_json(const DensityReport& r) {
    Json j;
    j["field"] = field_to_json(r.field);
    j["n"] = r.n;
    j["samples"] = r.exhaustive ? Json("exhaustive") : Json(r.samples);
    j["count"] = r.samples;
    if (!r.exhaustive) j["seed"] = r.seed;
    j["density_model"] = "finite-field proxy (complement mass over GF(q)); "
                         "Zariski density is not verified here";
    Json fr;
    fr["trivial_der"] = exact_fraction(r.count_trivder, r.samples);
    if (r.aut_available) {
        fr["trivial_aut"] = exact_fraction(r.count_trivaut, r.samples);
        fr["star"] = exact_fraction(r.count_star, r.samples);
    }
    fr["simple"] = exact_fraction(r.count_simple, r.samples);
    j["fractions"] = std::move(fr);
    Json counts;
    counts["trivial_der"] = r.count_trivder;
    if (r.aut_available) {
        counts["trivial_aut"] = r.count_trivaut;
        counts["star"] = r.count_star;
    }
    counts["simple"] = r.count_simple;
    j["counts"] = std::move(counts);
    return j;
}

inline Json inclusion_report_to_json(const InclusionReport& r) {
    Json j;
    j["field"] = field_to_json(r.field);
    j["n"] = 2;
    j["samples"] = r.exhaustive ? Json("exhaustive") : Json(r.samples);
    j["count"] = r.samples;
    if (!r.exhaustive) j["seed"] = r.seed;
    j["der_not_aut"] = r.der_not_aut;
    j["aut_not_der"] = r.aut_not_der;
    if (r.der_not_aut_matches_list) j["der_not_aut_matches_list"] = *r.der_not_aut_matches_list;
    if (r.aut_not_der_matches_list) j["aut_not_der_matches_list"] = *r.aut_not_der_matches_list;
    return j;
}

template <class F>
Json chain_to_json(const std::vector<ChainStage<F>>& tower) {
    auto assurance = [](Assurance a) {
        return a == Assurance::Verified    ? "verified"
               : a == Assurance::ByConstruction ? "by construction (conditional on seed)"
                                           : "not checked";
    };
    Json arr = Json::array();
    for (const auto& st : tower) {
        Json stage;
        stage["n"] = st.algebra.dim();
        stage["msc"] = msc_to_json(st.algebra);
        Json checks;
        checks["trivial_der"] = st.trivial_der;
        checks["trivial_aut"] = assurance(st.aut);
        if (st.simple != Assurance::NotApplicable) checks["simple"] = assurance(st.simple);
        stage["checks"] = std::move(checks);
        arr.push_back(std::move(stage));
    }
    return arr;
}

inline Json family_to_json(const Family& fam) {
    Json j;
    j["id"] = fam.id;
    j["params"] = fam.params;
    Json tmpl = Json::array();
    for (int r = 0; r < 2; ++r) {
        Json row = Json::array();
        for (int c = 0; c < 4; ++c) {
            const auto& a = fam.tmpl[static_cast<std::size_t>(r * 4 + c)];
            std::string s = std::to_string(a.c);
            for (std::size_t k = 0; k < fam.params.size(); ++k) {
                long long l = a.lin[k];
                if (l == 0) continue;
                s += (l > 0 ? "+" : "-");
                if (std::abs(l) != 1) s += std::to_string(std::abs(l)) + "*";
                s += fam.params[k];
            }
            row.push_back(s);
        }
        tmpl.push_back(std::move(row));
    }
    j["template"] = std::move(tmpl);
    Json cons = Json::array();
    for (const auto& cl : fam.constraints) cons.push_back(cl.text);
    j["constraints"] = std::move(cons);
    return j;
}

}  // namespace msc

#endif  // MSCKIT_JSON_IO_HPP
