// Coxeter-group tooling on top of the game engine: the Coxeter matrix,
// reduced-word checking via firing legality, and orbit enumeration under the
// unrestricted reflection action.
//
// Word convention: a word w = (w[0], ..., w[p-1]) denotes the group element
// s_{w[0]} ... s_{w[p-1]} read left to right; the rightmost letter fires
// first, so the matching firing sequence is the reversed letter list.
#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "numbersgame/classify.hpp"
#include "numbersgame/engine.hpp"
#include "numbersgame/errors.hpp"
#include "numbersgame/graph.hpp"

namespace numbersgame {

using Word = std::vector<int>;

// m_ii = 1, non-adjacent m_ij = 2, labeled edges per the amplitude product;
// kInfiniteLabel encodes infinity. Row-major n*n.
template <class S>
std::vector<int> coxeter_matrix(const AmplitudeGraph<S>& g) {
    const int n = g.n();
    std::vector<int> m(static_cast<std::size_t>(n) * n, 2);
    for (int i = 0; i < n; ++i) {
        m[static_cast<std::size_t>(i) * n + i] = 1;
        for (int j = 0; j < n; ++j)
            if (g.adjacent(i, j)) m[static_cast<std::size_t>(i) * n + j] = g.coxeter_label(i, j);
    }
    return m;
}

inline std::vector<int> word_to_firing(const Word& w) {
    return std::vector<int>(w.rbegin(), w.rend());
}

// A word is reduced exactly when its firing sequence is legal from a
// strongly dominant position; all-ones is the canonical seed.
template <class S>
bool is_reduced(const AmplitudeGraph<S>& g, const Word& w) {
    Position<S> seed(g.n(), scalar_traits<S>::one());
    return try_replay(g, std::move(seed), word_to_firing(w)).has_value();
}

template <class S>
struct OrbitResult {
    bool finite = false;             // false: infinite group, nothing enumerated
    long size = 0;
    long longest_length = 0;         // max BFS depth over the orbit
    std::vector<Position<S>> positions;
    std::vector<int> depth;
};

namespace detail {

template <class S>
struct PositionKeyer;

template <>
struct PositionKeyer<Rational> {
    std::map<std::string, int> seen;

    // returns the index of an equal stored position, or -1 after inserting
    int find_or_insert(const Position<Rational>& pos, int index,
                       const std::vector<Position<Rational>>&) {
        std::string key;
        for (const auto& v : pos) {
            key += v.get_str();
            key += ';';
        }
        auto [it, inserted] = seen.emplace(std::move(key), index);
        return inserted ? -1 : it->second;
    }
};

template <>
struct PositionKeyer<double> {
    // 1e-9 quantization grid with an audit: positions sharing a cell must
    // truly be within 1e-7, otherwise the grid merged distinct images.
    static constexpr double grid = 1e-9;
    static constexpr double audit = 1e-7;
    std::map<std::vector<long long>, int> seen;

    int find_or_insert(const Position<double>& pos, int index,
                       const std::vector<Position<double>>& stored) {
        std::vector<long long> canon(pos.size());
        std::vector<std::pair<long long, long long>> cand(pos.size());
        for (std::size_t i = 0; i < pos.size(); ++i) {
            double c = pos[i] / grid;
            long long k = std::llround(c);
            canon[i] = k;
            // near a cell boundary the true twin may sit one cell over
            double off = c - static_cast<double>(k);
            long long alt = k;
            if (off > 0.49) alt = k + 1;
            else if (off < -0.49) alt = k - 1;
            cand[i] = {k, alt};
        }
        // walk the (usually singleton) candidate cells
        std::vector<long long> key(pos.size());
        int hit = -1;
        std::function<void(std::size_t)> walk = [&](std::size_t i) {
            if (hit >= 0) return;
            if (i == pos.size()) {
                auto it = seen.find(key);
                if (it != seen.end()) hit = it->second;
                return;
            }
            key[i] = cand[i].first;
            walk(i + 1);
            if (cand[i].second != cand[i].first && hit < 0) {
                key[i] = cand[i].second;
                walk(i + 1);
            }
        };
        walk(0);
        if (hit >= 0) {
            for (std::size_t i = 0; i < pos.size(); ++i)
                if (std::abs(pos[i] - stored[hit][i]) >= audit)
                    throw DedupCollision("quantized dedup merged positions farther apart than 1e-7");
            return hit;
        }
        seen.emplace(std::move(canon), index);
        return -1;
    }
};

}  // namespace detail

inline constexpr long kDefaultOrbitCap = 2'000'000;

// BFS over the full reflection orbit of a strongly positive seed. Graphs
// that do not classify as finite type are reported infinite without
// enumeration.
template <class S>
OrbitResult<S> orbit(const AmplitudeGraph<S>& g, Position<S> seed, long cap = kDefaultOrbitCap) {
    OrbitResult<S> out;
    if (!recognize(g).all_finite) return out;
    out.finite = true;
    for (auto& v : seed) scalar_traits<S>::normalize(v);
    detail::PositionKeyer<S> keyer;
    out.positions.push_back(std::move(seed));
    out.depth.push_back(0);
    keyer.find_or_insert(out.positions[0], 0, out.positions);
    for (std::size_t head = 0; head < out.positions.size(); ++head) {
        for (int i = 0; i < g.n(); ++i) {
            if (scalar_traits<S>::is_zero(out.positions[head][i])) continue;
            Position<S> next = out.positions[head];
            reflect_in_place(g, next, i);
            int idx = static_cast<int>(out.positions.size());
            if (idx > cap) throw CapExceeded(cap);
            if (keyer.find_or_insert(next, idx, out.positions) < 0) {
                out.positions.push_back(std::move(next));
                out.depth.push_back(out.depth[head] + 1);
            }
        }
    }
    out.size = static_cast<long>(out.positions.size());
    out.longest_length = *std::max_element(out.depth.begin(), out.depth.end());
    return out;
}

// Length of the longest element, measured as the game length from the
// all-ones position (any strongly dominant seed gives the same count).
template <class S>
long longest_length(const AmplitudeGraph<S>& g) {
    auto rec = recognize(g);
    if (!rec.all_finite) throw NotFiniteType();
    long bound = longest_length(rec);
    PlayOptions opt;
    opt.limit = bound + 1;
    opt.certify = false;
    opt.keep_trace = false;
    auto res = play(g, Position<S>(g.n(), scalar_traits<S>::one()), opt);
    if (res.status != PlayStatus::Converged) throw NoConvergence(bound + 1);
    return res.steps;
}

}  // namespace numbersgame
