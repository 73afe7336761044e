// JSON serialization for graphs, positions, traces, spectral reports,
// classifications, and posets. Node indices and edge colors are 1-based in
// every external format; the library is 0-based internally.
#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "numbersgame/classify.hpp"
#include "numbersgame/engine.hpp"
#include "numbersgame/graph.hpp"
#include "numbersgame/poset.hpp"
#include "numbersgame/spectral.hpp"

namespace numbersgame {

using nlohmann::json;

inline json graph_to_json(const GcmGraph& g) {
    json amps = json::array();
    for (int i = 0; i < g.n(); ++i) {
        json row = json::array();
        for (int j = 0; j < g.n(); ++j) row.push_back(g.at(i, j).get_str());
        amps.push_back(std::move(row));
    }
    return json{{"kind", "gcm"}, {"n", g.n()}, {"amplitudes", std::move(amps)}};
}

inline json graph_to_json(const EgcmGraph& g) {
    json amps = json::array();
    for (int i = 0; i < g.n(); ++i) {
        json row = json::array();
        for (int j = 0; j < g.n(); ++j) row.push_back(g.at(i, j));
        amps.push_back(std::move(row));
    }
    return json{{"kind", "egcm"}, {"n", g.n()}, {"amplitudes", std::move(amps)}};
}

namespace detail {

inline Rational rational_from_json(const json& v) {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long>());
    throw std::invalid_argument("expected an integer or a \"p/q\" string");
}

}  // namespace detail

inline GcmGraph gcm_from_json(const json& j) {
    int n = j.at("n").get<int>();
    std::vector<Rational> m;
    m.reserve(static_cast<std::size_t>(n) * n);
    for (const auto& row : j.at("amplitudes"))
        for (const auto& v : row) m.push_back(detail::rational_from_json(v));
    if (static_cast<int>(m.size()) != n * n)
        throw std::invalid_argument("amplitudes must be an n x n matrix");
    return GcmGraph::validate(n, std::move(m));
}

inline EgcmGraph egcm_from_json(const json& j) {
    int n = j.at("n").get<int>();
    std::vector<double> m;
    m.reserve(static_cast<std::size_t>(n) * n);
    for (const auto& row : j.at("amplitudes"))
        for (const auto& v : row)
            m.push_back(v.is_string() ? detail::rational_from_json(v).get_d() : v.get<double>());
    if (static_cast<int>(m.size()) != n * n)
        throw std::invalid_argument("amplitudes must be an n x n matrix");
    return EgcmGraph::validate(n, std::move(m));
}

inline json position_to_json(const Position<Rational>& pos) {
    json out = json::array();
    for (const auto& v : pos) out.push_back(v.get_str());
    return out;
}

inline json position_to_json(const Position<double>& pos) {
    json out = json::array();
    for (double v : pos) out.push_back(v);
    return out;
}

inline Position<Rational> rational_position_from_json(const json& j, int n) {
    if (!j.is_array() || static_cast<int>(j.size()) != n)
        throw std::invalid_argument("position must be an array of length n");
    Position<Rational> out;
    for (const auto& v : j) out.push_back(detail::rational_from_json(v));
    return out;
}

inline Position<double> double_position_from_json(const json& j, int n) {
    if (!j.is_array() || static_cast<int>(j.size()) != n)
        throw std::invalid_argument("position must be an array of length n");
    Position<double> out;
    for (const auto& v : j)
        out.push_back(v.is_string() ? detail::rational_from_json(v).get_d() : v.get<double>());
    return out;
}

inline json certificate_to_json(const DivergenceCertificate& c) {
    json nodes = json::array();
    for (int v : c.nodes) nodes.push_back(v + 1);
    return json{{"component", std::move(nodes)}, {"rho", c.rho}, {"nu", c.nu}, {"pairing", c.pairing}};
}

template <class S>
json play_result_to_json(const PlayResult<S>& r, bool with_trace = true) {
    json out{{"status", to_string(r.status)},
             {"steps", r.steps},
             {"final", position_to_json(r.final_position)}};
    if (with_trace) {
        json fired = json::array();
        for (int v : r.firing_sequence) fired.push_back(v + 1);
        out["fired"] = std::move(fired);
    }
    if (r.certificate) out["certificate"] = certificate_to_json(*r.certificate);
    return out;
}

template <class S>
json spectral_report_to_json(const AmplitudeGraph<S>& g) {
    json comps = json::array();
    for (const auto& cc : classify_components(g)) {
        json nodes = json::array();
        for (int v : cc.nodes) nodes.push_back(v + 1);
        comps.push_back(json{{"nodes", std::move(nodes)},
                             {"trichotomy", to_string(cc.cls)},
                             {"exact", cc.exact},
                             {"rho", cc.perron.rho},
                             {"nu", cc.perron.vec},
                             {"iterations", cc.perron.iterations}});
    }
    return json{{"components", std::move(comps)}, {"trichotomy", to_string(trichotomy(g))}};
}

inline json classification_to_json(const Classification& c) {
    json comps = json::array();
    for (const auto& t : c.components) {
        json nodes = json::array();
        for (int v : t.nodes) nodes.push_back(v + 1);
        comps.push_back(json{{"nodes", std::move(nodes)},
                             {"finite", t.finite},
                             {"type", t.finite ? json(t.name) : json(nullptr)}});
    }
    return json{{"admissible", c.admissible},
                {"connected", c.connected},
                {"all_finite", c.all_finite},
                {"components", std::move(comps)}};
}

// Poset format: {"n":int, "elements":[ids], "covers":[[s,t,color],...]}
// with 1-based colors and covers referring to element ids.
inline EdgeColoredPoset poset_from_json(const json& j) {
    int n = j.at("n").get<int>();
    std::vector<int> ids = j.at("elements").get<std::vector<int>>();
    std::map<int, int> index;
    for (std::size_t k = 0; k < ids.size(); ++k) {
        if (!index.emplace(ids[k], static_cast<int>(k)).second)
            throw std::invalid_argument("duplicate element id " + std::to_string(ids[k]));
    }
    std::vector<Cover> covers;
    for (const auto& c : j.at("covers")) {
        if (!c.is_array() || c.size() != 3) throw std::invalid_argument("cover must be [s,t,color]");
        auto s = index.find(c[0].get<int>());
        auto t = index.find(c[1].get<int>());
        if (s == index.end() || t == index.end())
            throw std::invalid_argument("cover references an unknown element id");
        covers.push_back(Cover{s->second, t->second, c[2].get<int>() - 1});
    }
    return EdgeColoredPoset::validate(n, std::move(ids), std::move(covers));
}

inline json structure_report_to_json(const StructureReport& r) {
    json viols = json::array();
    for (const auto& v : r.violations)
        viols.push_back(json{{"cover", v.cover_index},
                             {"s", v.s},
                             {"t", v.t},
                             {"color", v.color},
                             {"expected", v.expected},
                             {"actual", v.actual}});
    json colors = json::array();
    for (int c : r.colors_used) colors.push_back(c + 1);
    return json{{"ok", r.ok},
                {"violations", std::move(viols)},
                {"colors_used", std::move(colors)},
                {"fully_surjective", r.fully_surjective},
                {"sufficiently_surjective", r.sufficiently_surjective}};
}

inline json error_to_json(const std::string& code, const std::string& message) {
    return json{{"error", code}, {"message", message}};
}

}  // namespace numbersgame
