#pragma once

#include <string>

#include "starcore/geninv.hpp"
#include "starcore/matrix_json.hpp"
#include "starcore/theorem_lab.hpp"

namespace starcore {

inline json to_json(const GenInverse& g) {
    return json{{"kind", std::string(to_string(g.kind))}, {"index", g.index}, {"certificate", g.certificate}};
}

namespace lab {

inline json to_json(const Conjunct& c) {
    json j{{"name", c.name}, {"holds", c.holds}};
    if (!c.gating) j["gating"] = false;
    if (!c.note.empty()) j["note"] = c.note;
    return j;
}

inline json to_json(const std::vector<Conjunct>& cs) {
    json arr = json::array();
    for (const auto& c : cs) arr.push_back(to_json(c));
    return arr;
}

inline json to_json(const TheoremReport& r) {
    json j{{"theorem", std::string(to_string(r.theorem))},
           {"verdict", std::string(to_string(r.verdict))},
           {"detail", r.detail},
           {"hypotheses", to_json(r.hypotheses)},
           {"side1", to_json(r.side1)},
           {"side2", to_json(r.side2)},
           {"checks", to_json(r.checks)}};
    auto first = r.first_failed_hypothesis();
    j["first_failed_hypothesis"] = first ? json(*first) : json(nullptr);
    if (r.verdict != Verdict::HypothesisFailed) {
        j["side1_holds"] = r.side1_holds();
        j["side2_holds"] = r.side2_holds();
    }
    return j;
}

// Matrices keyed by the role names the CLI uses (a, b / A, B, C, D / p, x).
inline json to_json(TheoremId id, const Instance& in) {
    json j = json::object();
    const bool block = id == TheoremId::L4_1 || id == TheoremId::T4_3 || id == TheoremId::C4_4;
    const bool projector = id == TheoremId::L2_1 || id == TheoremId::L2_2 || id == TheoremId::L2_3;
    if (block) {
        j["A"] = starcore::to_json(in.a);
        j["B"] = starcore::to_json(in.b);
        if (in.c) j["C"] = starcore::to_json(*in.c);
        if (in.d) j["D"] = starcore::to_json(*in.d);
    } else if (projector) {
        j["p"] = starcore::to_json(in.a);
        j["x"] = starcore::to_json(in.b);
    } else {
        j["a"] = starcore::to_json(in.a);
        j["b"] = starcore::to_json(in.b);
    }
    if (id == TheoremId::L4_2 || id == TheoremId::T4_3 || id == TheoremId::C4_4)
        j["lambda"] = format_scalar(in.lambda);
    return j;
}

inline Instance instance_from_json(TheoremId id, const json& j) {
    auto get = [&](const char* key) { return matrix_from_json(j.at(key)); };
    Instance in;
    const bool block = id == TheoremId::L4_1 || id == TheoremId::T4_3 || id == TheoremId::C4_4;
    const bool projector = id == TheoremId::L2_1 || id == TheoremId::L2_2 || id == TheoremId::L2_3;
    try {
        if (block) {
            in.a = get("A");
            in.b = j.contains("B") ? get("B") : Matrix();
            in.c = get("C");
            in.d = get("D");
        } else if (projector) {
            in.a = get("p");
            in.b = get("x");
        } else {
            in.a = get("a");
            in.b = get("b");
        }
    } catch (const json::exception& e) {
        throw ParseError(std::string("instance JSON: ") + e.what());
    }
    if (j.contains("lambda")) in.lambda = parse_scalar(j.at("lambda").get<std::string>());
    return in;
}

} // namespace lab
} // namespace starcore
