#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "cgh/bounds.hpp"
#include "cgh/constructions.hpp"
#include "cgh/io.hpp"
#include "cgh/patterns.hpp"
#include "cgh/rational.hpp"
#include "cgh/search.hpp"
#include "cgh/verify.hpp"

namespace cgh {

using Json = nlohmann::ordered_json;

inline Json json_of(const Rational& q) { return to_string(q); }

inline Json json_of(const std::vector<Vertex>& seq) { return Json(seq); }

inline Json json_of(const PathWitness& w) {
    Json segs = Json::array();
    for (const auto& s : w.segments) segs.push_back({s.u, s.v});
    return {{"seq", w.seq}, {"segments", segs}};
}

inline Json json_of(const End& e) { return {{"k", e.k}, {"end", e.vs}}; }

inline Json json_of(const BoundReport& b) {
    return {{"name", b.name}, {"lhs", json_of(b.lhs)}, {"rhs", json_of(b.rhs)}, {"holds", b.holds},
            {"n", b.n},       {"r", b.r},               {"k", b.k}};
}

inline Json json_of(const ConstructionReport& c) {
    Json extras = Json::object();
    for (const auto& [key, value] : c.extras) extras[key] = value;
    return {{"n", c.cgh.n()},
            {"r", c.cgh.r()},
            {"edge_count", c.edge_count},
            {"predicted_leading_term", json_of(c.predicted_leading_term)},
            {"claim", c.claim},
            {"claim_applies", c.claim_applies},
            {"note", c.note},
            {"extras", extras}};
}

inline Json json_of(const PatternPredicate& p) {
    return {{"kind", to_string(p.kind)}, {"k", p.k}, {"convex", p.convex}};
}

inline Json json_of(const ExtremalResult& res) {
    return {{"n", res.n},
            {"r", res.r},
            {"pattern", json_of(res.pattern)},
            {"max_edges", res.max_edges},
            {"exact", res.exact},
            {"nodes_explored", res.nodes_explored},
            {"witness", res.witness.edges()}};
}

inline Json json_of(const BoundValues& b) {
    Json j = {{"n", b.n},
              {"r", b.r},
              {"k", b.k},
              {"binom_n_r_minus_1", json_of(b.binom)},
              {"trivial", json_of(b.trivial)},
              {"thm2", json_of(b.thm2)},
              {"conj1", json_of(b.conj1)},
              {"link", json_of(b.link)},
              {"link_applies", b.link_applies}};
    if (b.thm3) j["thm3"] = json_of(*b.thm3);
    if (b.thm4) j["thm4"] = json_of(*b.thm4);
    if (b.odd_improvement) {
        j["odd_improvement"] = *b.odd_improvement;
        j["odd_improvement_coefficient"] = *b.odd_improvement_coefficient;
        j["odd_improvement_upper"] = json_of(*b.odd_improvement_upper);
    }
    return j;
}

inline Json json_of(const InjectionReport& r) {
    return {{"eq1", json_of(r.eq1)},
            {"eq2", json_of(r.eq2)},
            {"f_injective", r.f_injective},
            {"f_image_in_next_layer", r.f_image_in_next_layer},
            {"g_injective", r.g_injective},
            {"g_image_in_shadow", r.g_image_in_shadow}};
}

inline Json json_of(const ExpectedCounts& e) {
    Json shadow = Json::array();
    for (const auto& q : e.shadow) shadow.push_back(json_of(q));
    Json j = {{"edges", json_of(e.edges)}, {"shadow", shadow}, {"shadow_closed_form", json_of(e.shadow_closed_form)}};
    if (e.edges_enumerated) j["edges_enumerated"] = json_of(*e.edges_enumerated);
    if (e.shadow_enumerated) {
        Json s = Json::array();
        for (const auto& q : *e.shadow_enumerated) s.push_back(json_of(q));
        j["shadow_enumerated"] = s;
    }
    return j;
}

inline Json json_of(const ColoringExperiment& e) {
    Json exact_shadow = Json::array();
    for (const auto& q : e.exact_shadow) exact_shadow.push_back(json_of(q));
    return {{"seed", e.seed},
            {"samples", e.samples},
            {"observed_g", e.observed_g},
            {"stderr_g", e.stderr_g},
            {"observed_shadow", e.observed_shadow},
            {"stderr_shadow", e.stderr_shadow},
            {"exact_g", json_of(e.exact_g)},
            {"exact_shadow", exact_shadow},
            {"within_3se", e.within_3se}};
}

inline Json json_of(const OddReductionReport& r) {
    return {{"bound", json_of(r.bound)},       {"lifted", json_of(r.lifted)},
            {"ell", r.ell},                    {"x_count", r.x_count},
            {"detector_run", r.detector_run},  {"lifted_path_free", r.lifted_path_free}};
}

inline Json json_of(const LiftIdentities& l) {
    return {{"x_count", l.x_count},
            {"lifted_edges", l.lifted_edges},
            {"expected_edges", l.expected_edges},
            {"lifted_shadow", l.lifted_shadow},
            {"expected_shadow", l.expected_shadow},
            {"holds", l.holds()}};
}

inline Json json_of(const LinkRecursionReport& r) {
    return {{"averaging", json_of(r.averaging)},
            {"bound", json_of(r.bound)},
            {"vertex", r.vertex},
            {"link_path_free", r.link_path_free}};
}

}  // namespace cgh
