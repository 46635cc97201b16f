#pragma once

#include <string>

#include <json.hpp>

#include "kneser/error.hpp"
#include "kneser/graph6.hpp"
#include "kneser/pclass.hpp"
#include "kneser/psum.hpp"
#include "kneser/reconstruction.hpp"
#include "kneser/tree_invariants.hpp"

namespace kneser {

using Json = nlohmann::ordered_json;

inline Json to_json(const PClass& c) { return Json(c.components); }

/// {"n":..,"k":..,"terms":[{"class":[forms..],"coeff":..},..]}, terms in
/// lexicographic class order.
inline Json to_json(const PSeries& s) {
    Json terms = Json::array();
    for (const auto& [c, a] : s.terms) terms.push_back(Json{{"class", to_json(c)}, {"coeff", a}});
    return Json{{"n", s.n}, {"k", s.k}, {"terms", std::move(terms)}};
}

inline Json to_json(const DegreeProfile& p) { return Json(p.degrees); }

inline Json to_json(const ReconstructionResult& r) {
    Json out{{"graph6", write_graph6(r.tree)}, {"class", to_json(r.source_class)}, {"removed_leaf", r.removed_leaf}};
    if (r.witness) out["witness"] = *r.witness;
    return out;
}

/// Validates and decodes the series interchange format.
inline PSeries pseries_from_json(const nlohmann::json& j) {
    auto fail = [](const std::string& why) -> PSeries { throw InvalidInput("series schema: " + why); };
    if (!j.is_object()) return fail("top level must be an object");
    for (const char* key : {"n", "k", "terms"})
        if (!j.contains(key)) return fail(std::string("missing '") + key + "'");
    if (!j["n"].is_number_integer() || !j["k"].is_number_integer()) return fail("'n' and 'k' must be integers");
    PSeries s;
    s.n = j["n"].get<int>();
    s.k = j["k"].get<int>();
    if (s.n < 1) return fail("'n' must be positive");
    if (s.k != 1 && s.k != 2) return fail("'k' must be 1 or 2");
    if (!j["terms"].is_array()) return fail("'terms' must be an array");
    for (const auto& t : j["terms"]) {
        if (!t.is_object() || !t.contains("class") || !t.contains("coeff")) return fail("term needs 'class' and 'coeff'");
        if (!t["class"].is_array() || !t["coeff"].is_number_integer()) return fail("bad term field types");
        std::vector<std::string> parts;
        for (const auto& f : t["class"]) {
            if (!f.is_string()) return fail("class components must be strings");
            const auto form = f.get<std::string>();
            Lambda part;
            try {
                part = lambda_from_form(form);
            } catch (const Error&) {
                return fail("unreadable component '" + form + "'");
            }
            if (part.k() != s.k) return fail("component '" + form + "' has the wrong block size");
            if (connected_components(part).size() != 1) return fail("component '" + form + "' is disconnected");
            parts.push_back(form);
        }
        PClass c(std::move(parts));
        if (class_edge_count(c) != s.n) return fail("class does not have n blocks");
        const auto a = t["coeff"].get<long long>();
        if (a == 0) return fail("zero coefficient");
        if (!s.terms.emplace(std::move(c), a).second) return fail("duplicate class");
    }
    return s;
}

inline PSeries pseries_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidInput(std::string("series is not JSON: ") + e.what());
    }
    return pseries_from_json(j);
}

} // namespace kneser
