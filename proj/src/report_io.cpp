#include "skeinkit/report_io.hpp"

#include <limits>

#include "json.hpp"

namespace skeinkit {

namespace {

nlohmann::ordered_json poly_terms(const LaurentPoly2& p) {
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [mono, coeff] : p.terms()) {
        nlohmann::ordered_json term;
        term["v"] = mono.v_exp;
        term["z"] = mono.z_exp;
        if (coeff >= std::numeric_limits<long long>::min() &&
            coeff <= std::numeric_limits<long long>::max()) {
            term["c"] = coeff.convert_to<long long>();
        } else {
            term["c"] = coeff.str();
        }
        terms.push_back(std::move(term));
    }
    nlohmann::ordered_json j;
    j["terms"] = std::move(terms);
    return j;
}

}  // namespace

std::string poly_to_json(const LaurentPoly2& p) { return poly_terms(p).dump(); }

std::string report_to_json(const InvariantReport& r, bool poly_as_terms) {
    nlohmann::ordered_json j;
    j["crossing_count"] = r.crossing_count;
    j["components"] = r.components;
    j["writhe"] = r.writhe;
    j["seifert_circles"] = r.seifert_circles;
    j["canonical_genus"] = r.canonical_genus;
    if (poly_as_terms) {
        j["homfly"] = poly_terms(r.homfly);
    } else {
        j["homfly"] = r.homfly.to_text();
    }
    j["z_degree"] = r.z_degree;
    j["morton_bound"] = r.morton_bound;
    j["morton_tight"] = r.morton_tight;
    j["stats"]["expansions"] = r.stats.expansions;
    j["stats"]["memo_hits"] = r.stats.memo_hits;
    j["stats"]["memo_entries"] = r.stats.memo_entries;
    return j.dump(2);
}

}  // namespace skeinkit
