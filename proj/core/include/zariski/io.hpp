#pragma once

// JSON shapes:
//   poset      {"elements": ["a", "b"], "leq": [["a", "b"]]}
//   subset     {"mode": "finite" | "cofinite", "places": ["p:2"], "generic": false}
//   module     {"field": false, "constraint": <subset>, "exponents": {"p:2": 1}}
//   report     {"checked": 10, "violations": 0, "passed": true, "failures": []}

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "zariski/finite_spectral.hpp"
#include "zariski/parse.hpp"
#include "zariski/semistar.hpp"

namespace zariski {

using json = nlohmann::json;

inline json parse_json(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

/// `text` itself when it looks like JSON, else the contents of the file it
/// names.
inline std::string inline_or_file(std::string_view text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && (text[first] == '{' || text[first] == '[')) return std::string(text);
    std::ifstream in{std::string(text)};
    if (!in) throw ParseError("cannot read \"" + std::string(text) + "\" as JSON or as a file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// ---- posets ----------------------------------------------------------------

inline FinitePoset poset_from_json(const json& j) {
    try {
        auto elements = j.at("elements").get<std::vector<std::string>>();
        std::vector<std::pair<std::string, std::string>> pairs;
        if (j.contains("leq"))
            for (const auto& pr : j.at("leq")) {
                if (!pr.is_array() || pr.size() != 2) throw ParseError("leq entries are [x, y] pairs");
                pairs.emplace_back(pr[0].get<std::string>(), pr[1].get<std::string>());
            }
        return FinitePoset::from_pairs(std::move(elements), pairs);
    } catch (const json::exception& e) {
        throw ParseError(std::string("poset JSON: ") + e.what());
    }
}

inline json to_json(const FinitePoset& poset) {
    json leq = json::array();
    for (std::size_t x = 0; x < poset.size(); ++x)
        for (std::size_t y = 0; y < poset.size(); ++y)
            if (x != y && poset.leq(x, y)) leq.push_back({poset.label(x), poset.label(y)});
    return {{"elements", poset.elements()}, {"leq", leq}};
}

inline FinSubset fin_subset_from_json(const FinitePoset& poset, const json& j) {
    try {
        return FinSubset::from_labels(poset, j.get<std::vector<std::string>>());
    } catch (const json::exception& e) {
        throw ParseError(std::string("subset JSON: ") + e.what());
    }
}

inline json to_json(const FinitePoset& poset, const FinSubset& subset) {
    return subset.labels(poset);
}

// ---- Zar(K|A) --------------------------------------------------------------

template <class D>
json to_json(const ZarSubset<D>& subset) {
    json places = json::array();
    for (const auto& p : subset.exceptions()) places.push_back(p.str());
    return {{"mode", subset.is_finite() ? "finite" : "cofinite"},
            {"places", places},
            {"generic", subset.contains_generic()}};
}

template <class D>
ZarSubset<D> subset_from_json(const BasePair<D>& base, const json& j) {
    try {
        const auto mode = j.at("mode").get<std::string>();
        if (mode != "finite" && mode != "cofinite") throw ParseError("mode must be \"finite\" or \"cofinite\"");
        std::vector<Place<D>> places;
        for (const auto& p : j.value("places", json::array())) places.push_back(parse_place(base, p.get<std::string>()));
        const bool generic = j.value("generic", false);
        return mode == "finite" ? ZarSubset<D>::finite(std::move(places), generic)
                                : ZarSubset<D>::cofinite(std::move(places), generic);
    } catch (const json::exception& e) {
        throw ParseError(std::string("subset JSON: ") + e.what());
    }
}

/// "all", "all+K", "K", "empty", a JSON object, or a path to one.
template <class D>
ZarSubset<D> parse_subset(const BasePair<D>& base, std::string_view text) {
    if (text == "all") return ZarSubset<D>::all_places();
    if (text == "all+K") return ZarSubset<D>::whole();
    if (text == "K") return ZarSubset<D>::generic_only();
    if (text == "empty") return ZarSubset<D>::empty();
    return subset_from_json(base, parse_json(inline_or_file(text)));
}

template <class D>
SpacePoint<D> parse_point(const BasePair<D>& base, std::string_view text) {
    if (text == "K") return SpacePoint<D>::generic();
    return SpacePoint<D>::at(parse_place(base, text));
}

template <class D>
json to_json(const typename GenModule<D>::ExponentMap& exps) {
    json out = json::object();
    for (const auto& [p, e] : exps) out[p.str()] = e;
    return out;
}

template <class D>
json to_json(const GenModule<D>& m) {
    return {{"field", m.is_field()},
            {"constraint", to_json(m.constraint())},
            {"exponents", to_json<D>(m.exceptions())},
            {"text", m.str()}};
}

template <class D>
json to_json(const FracIdeal<D>& ideal) {
    json gens = json::array();
    for (const auto& g : ideal.generators()) gens.push_back(g.str());
    return {{"generators", gens}, {"exponents", to_json<D>(ideal.exponents())}};
}

inline json to_json(const CheckReport& r) {
    return {{"checked", r.checked}, {"violations", r.violations}, {"passed", r.passed()}, {"failures", r.failures}};
}

} // namespace zariski
