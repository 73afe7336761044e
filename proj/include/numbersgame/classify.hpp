// Structural recognition of admissible graphs. The recognizer is purely
// combinatorial (tree shape plus Coxeter edge labels) so it can be cross
// checked against the spectral trichotomy and against game convergence.
#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "numbersgame/catalog.hpp"
#include "numbersgame/errors.hpp"
#include "numbersgame/graph.hpp"
#include "numbersgame/spectral.hpp"

namespace numbersgame {

struct ComponentType {
    std::vector<int> nodes;  // sorted node ids
    bool finite = false;
    std::string name;        // catalog id when finite, empty otherwise
    Family family = Family::A;
    int rank = 0;
    int m = 0;               // dihedral label for I2(m)
};

struct Classification {
    bool connected = false;
    bool all_finite = false;
    bool admissible = false;  // connected and finite type
    std::vector<ComponentType> components;
};

namespace detail {

// leg lengths of the unique degree-3 node, sorted ascending
inline std::vector<int> tripod_legs(const std::vector<std::vector<int>>& adj, int center) {
    std::vector<int> legs;
    for (int start : adj[center]) {
        int len = 1, prev = center, cur = start;
        while (true) {
            const auto& nb = adj[cur];
            if (nb.size() != 2) break;  // leaf (size 1) or another branch
            int next = nb[0] == prev ? nb[1] : nb[0];
            prev = cur;
            cur = next;
            ++len;
        }
        legs.push_back(len);
    }
    std::sort(legs.begin(), legs.end());
    return legs;
}

template <class S>
ComponentType recognize_component(const AmplitudeGraph<S>& g, std::vector<int> nodes) {
    constexpr bool exact = scalar_traits<S>::exact;
    ComponentType out;
    out.nodes = std::move(nodes);
    const int n = static_cast<int>(out.nodes.size());
    out.rank = n;
    auto named = [&](Family f, const std::string& name, int m = 0) {
        out.finite = true;
        out.family = f;
        out.name = name;
        out.m = m;
        return out;
    };
    if (n == 1) return named(exact ? Family::A : Family::CalA, exact ? "A1" : "calA1");

    // local adjacency within the component, indexed 0..n-1
    std::vector<int> local(g.n(), -1);
    for (int k = 0; k < n; ++k) local[out.nodes[k]] = k;
    std::vector<std::vector<int>> adj(n);
    int edge_count = 0;
    struct Edge { int a, b, label; };
    std::vector<Edge> specials;
    for (int a = 0; a < n; ++a) {
        for (int gb : g.neighbors(out.nodes[a])) {
            int b = local[gb];
            adj[a].push_back(b);
            if (a < b) {
                ++edge_count;
                int label = g.coxeter_label(out.nodes[a], out.nodes[b]);
                if (label == kInfiniteLabel) return out;  // product >= 4
                if (label > 3) specials.push_back({a, b, label});
            }
        }
    }
    if (edge_count != n - 1) return out;  // has a cycle
    int max_deg = 0, branch = -1, branch_count = 0;
    for (int a = 0; a < n; ++a) {
        int d = static_cast<int>(adj[a].size());
        max_deg = std::max(max_deg, d);
        if (d >= 3) {
            branch = a;
            ++branch_count;
        }
    }
    if (max_deg > 3 || branch_count > 1) return out;
    if (specials.size() > 1) return out;

    auto rank_name = [&](const char* prefix) { return prefix + std::to_string(n); };

    if (specials.empty()) {
        if (branch_count == 0) return named(exact ? Family::A : Family::CalA, rank_name(exact ? "A" : "calA"));
        auto legs = tripod_legs(adj, branch);
        if (legs[0] == 1 && legs[1] == 1) return named(exact ? Family::D : Family::CalD, rank_name(exact ? "D" : "calD"));
        if (legs[0] == 1 && legs[1] == 2) {
            if (legs[2] == 2) return named(exact ? Family::E6 : Family::CalE6, exact ? "E6" : "calE6");
            if (legs[2] == 3) return named(exact ? Family::E7 : Family::CalE7, exact ? "E7" : "calE7");
            if (legs[2] == 4) return named(exact ? Family::E8 : Family::CalE8, exact ? "E8" : "calE8");
        }
        return out;
    }

    const Edge sp = specials.front();
    if (branch_count > 0) return out;  // labeled edge on a tripod
    if (n == 2) {
        if constexpr (exact) {
            if (sp.label == 4) return named(Family::B, "B2");
            if (sp.label == 6) return named(Family::G2, "G2");
            return out;
        } else {
            return named(Family::CalI2, "I2(" + std::to_string(sp.label) + ")", sp.label);
        }
    }
    // a path; is the labeled edge terminal, and at which leaf
    int leaf = -1;
    if (adj[sp.a].size() == 1) leaf = sp.a;
    else if (adj[sp.b].size() == 1) leaf = sp.b;
    if (sp.label == 4) {
        if (leaf >= 0) {
            if constexpr (exact) {
                int inner = leaf == sp.a ? sp.b : sp.a;
                const S& amp = g.at(out.nodes[leaf], out.nodes[inner]);
                bool leaf_double = scalar_traits<S>::to_double(amp) < -1.5;
                return named(leaf_double ? Family::B : Family::C, rank_name(leaf_double ? "B" : "C"));
            } else {
                return named(Family::CalB, rank_name("calB"));
            }
        }
        // interior: the only finite shape is the 4-node path with the
        // labeled edge in the middle
        if (n == 4 && adj[sp.a].size() == 2 && adj[sp.b].size() == 2)
            return named(exact ? Family::F4 : Family::CalF4, exact ? "F4" : "calF4");
        return out;
    }
    if (!exact && sp.label == 5 && leaf >= 0) {
        if (n == 3) return named(Family::CalH3, "H3");
        if (n == 4) return named(Family::CalH4, "H4");
    }
    return out;
}

}  // namespace detail

template <class S>
Classification recognize(const AmplitudeGraph<S>& g) {
    Classification out;
    out.all_finite = true;
    for (auto& comp : g.connected_components()) {
        out.components.push_back(detail::recognize_component(g, std::move(comp)));
        if (!out.components.back().finite) out.all_finite = false;
    }
    out.connected = out.components.size() <= 1;
    out.admissible = out.connected && out.all_finite && g.n() > 0;
    return out;
}

template <class S>
bool is_admissible(const AmplitudeGraph<S>& g) {
    return recognize(g).admissible;
}

// Length of the longest Coxeter group element, i.e. the number of positive
// roots of the component type.
inline long longest_length(Family f, int rank, int m = 0) {
    long n = rank;
    switch (f) {
        case Family::A: case Family::CalA: return n * (n + 1) / 2;
        case Family::B: case Family::C: case Family::CalB: return n * n;
        case Family::D: case Family::CalD: return n * (n - 1);
        case Family::E6: case Family::CalE6: return 36;
        case Family::E7: case Family::CalE7: return 63;
        case Family::E8: case Family::CalE8: return 120;
        case Family::F4: case Family::CalF4: return 24;
        case Family::G2: return 6;
        case Family::CalH3: return 15;
        case Family::CalH4: return 60;
        case Family::CalI2: return m;
        default: throw NotFiniteType();
    }
}

inline long longest_length(const Classification& c) {
    if (!c.all_finite) throw NotFiniteType();
    long total = 0;
    for (const auto& comp : c.components) total += longest_length(comp.family, comp.rank, comp.m);
    return total;
}

struct CrossValidation {
    std::vector<int> nodes;
    bool structural_finite = false;
    Trichotomy spectral = Trichotomy::SubCritical;
    bool agree = false;  // finite type iff subcritical
};

// Compares the combinatorial recognizer with the spectral trichotomy on
// every component.
template <class S>
std::vector<CrossValidation> cross_validate(const AmplitudeGraph<S>& g) {
    std::vector<CrossValidation> out;
    auto rec = recognize(g);
    auto spec = classify_components(g);
    for (std::size_t k = 0; k < rec.components.size(); ++k) {
        CrossValidation cv;
        cv.nodes = rec.components[k].nodes;
        cv.structural_finite = rec.components[k].finite;
        cv.spectral = spec[k].cls;
        cv.agree = cv.structural_finite == (cv.spectral == Trichotomy::SubCritical);
        out.push_back(std::move(cv));
    }
    return out;
}

}  // namespace numbersgame
