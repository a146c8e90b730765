#pragma once

// JSON forms of the public value types: formal characters, diagrams,
// MF verdicts, suite reports.

#include <json.hpp>

#include "supermf/char_engine.hpp"
#include "supermf/diagram.hpp"
#include "supermf/dsl.hpp"

namespace supermf {

using nlohmann::json;

inline json to_json(const ProductGroup& g) {
    json factors = json::array();
    for (const auto& f : g.factors) factors.push_back(to_string(f));
    return factors;
}

inline json weight_to_json(const ProductGroup& g, const WeightVec& w) {
    json out = json::array();
    for (int f = 0; f < g.size(); ++f) out.push_back(g.slice(w, f));
    return out;
}

inline json to_json(const FormalChar& c) {
    json terms = json::array();
    for (const auto& [w, m] : c.terms)
        terms.push_back({{"weight", weight_to_json(c.group, w)}, {"mult", m}});
    return json{{"group", to_json(c.group)}, {"terms", terms}};
}

inline json to_json(const RepDiagram& d) {
    json factors = json::array();
    for (int f = 0; f < d.factor_count(); ++f) {
        json jf;
        jf["name"] = d.factor_names.empty() ? "G" + std::to_string(f + 1)
                                            : d.factor_names[static_cast<std::size_t>(f)];
        jf["type"] = classical_group_name(d.factors[static_cast<std::size_t>(f)]);
        factors.push_back(jf);
    }
    json subs = json::array();
    for (const auto& s : d.submodules) {
        json js;
        js["name"] = s.name;
        js["parity"] = s.odd ? "odd" : "even";
        js["dual"] = s.dual;
        js["weights"] = s.weights;
        subs.push_back(js);
    }
    return json{{"name", d.name}, {"factors", factors}, {"submodules", subs}};
}

inline json to_json(const MFVerdict& v, const ProductGroup& g) {
    json out;
    out["status"] = v.mf ? "mf_up_to_bound" : "not_mf";
    out["bound"] = v.bound;
    if (v.witness) {
        out["witness"] = {{"multiindex", v.witness->index},
                          {"label", weight_to_json(g, v.witness->label)},
                          {"multiplicity", v.witness->multiplicity}};
    }
    return out;
}

}  // namespace supermf
