// Edge-colored ranked posets and the M-structure checker: rank validation,
// color components, rank-based weights, per-cover weight verification, and
// the finite-type inference with its explicit descent cross-check.
#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "numbersgame/classify.hpp"
#include "numbersgame/engine.hpp"
#include "numbersgame/errors.hpp"
#include "numbersgame/graph.hpp"

namespace numbersgame {

struct Cover {
    int s = 0, t = 0;  // element indices, s covered by t
    int color = 0;     // 0-based color, < n
};

class EdgeColoredPoset {
public:
    // ids are the caller's element names; covers refer to indices into ids.
    // Verifies acyclicity, rejects transitive edges, and derives the rank
    // function (unique per connected component once the minimum is 0).
    static EdgeColoredPoset validate(int n_colors, std::vector<int> ids, std::vector<Cover> covers) {
        EdgeColoredPoset p;
        p.n_ = n_colors;
        p.ids_ = std::move(ids);
        p.covers_ = std::move(covers);
        const int m = static_cast<int>(p.ids_.size());
        for (const auto& c : p.covers_) {
            if (c.color < 0 || c.color >= n_colors) throw ColorOutOfRange(c.color + 1);
            if (c.s < 0 || c.s >= m || c.t < 0 || c.t >= m)
                throw StructureNotVerified("cover references an unknown element");
        }
        p.check_acyclic();
        p.assign_ranks();
        return p;
    }

    int n_colors() const { return n_; }
    int size() const { return static_cast<int>(ids_.size()); }
    const std::vector<int>& ids() const { return ids_; }
    const std::vector<Cover>& covers() const { return covers_; }
    int rank(int x) const { return rank_[x]; }
    int top_rank() const { return top_rank_; }

    // Partition into connected components of the subdiagram keeping only
    // covers with colors in J; sorted element indices.
    std::vector<std::vector<int>> j_components(const std::vector<int>& J) const {
        std::vector<char> keep(n_, 0);
        for (int c : J)
            if (c >= 0 && c < n_) keep[c] = 1;
        std::vector<std::vector<int>> adj(size());
        for (const auto& c : covers_) {
            if (!keep[c.color]) continue;
            adj[c.s].push_back(c.t);
            adj[c.t].push_back(c.s);
        }
        std::vector<int> comp(size(), -1);
        std::vector<std::vector<int>> out;
        for (int s = 0; s < size(); ++s) {
            if (comp[s] >= 0) continue;
            int id = static_cast<int>(out.size());
            out.emplace_back();
            std::vector<int> stack{s};
            comp[s] = id;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                out[id].push_back(v);
                for (int w : adj[v])
                    if (comp[w] < 0) {
                        comp[w] = id;
                        stack.push_back(w);
                    }
            }
            std::sort(out[id].begin(), out[id].end());
        }
        return out;
    }

    std::vector<std::vector<int>> i_components(int color) const { return j_components({color}); }

    // m_i(x) = 2 rho_i(x) - l_i(x) over the color-i component of x.
    std::vector<long> weight(int x) const {
        std::vector<long> wt(n_, 0);
        for (int i = 0; i < n_; ++i) {
            for (const auto& comp : i_components(i)) {
                if (std::find(comp.begin(), comp.end(), x) == comp.end()) continue;
                int lo = rank_[comp[0]], hi = rank_[comp[0]];
                std::vector<char> present;
                for (int e : comp) {
                    lo = std::min(lo, rank_[e]);
                    hi = std::max(hi, rank_[e]);
                }
                present.assign(static_cast<std::size_t>(hi - lo + 1), 0);
                for (int e : comp) present[rank_[e] - lo] = 1;
                for (char has : present)
                    if (!has) throw ComponentNotRanked(i + 1);
                wt[i] = 2L * (rank_[x] - lo) - (hi - lo);
                break;
            }
        }
        return wt;
    }

private:
    void check_acyclic() const {
        const int m = size();
        std::vector<int> indeg(m, 0);
        std::vector<std::vector<int>> adj(m);
        for (const auto& c : covers_) {
            adj[c.s].push_back(c.t);
            ++indeg[c.t];
        }
        std::vector<int> q;
        for (int v = 0; v < m; ++v)
            if (indeg[v] == 0) q.push_back(v);
        int seen = 0;
        while (!q.empty()) {
            int v = q.back();
            q.pop_back();
            ++seen;
            for (int w : adj[v])
                if (--indeg[w] == 0) q.push_back(w);
        }
        if (seen != m) throw CycleDetected();
    }

    void assign_ranks() {
        const int m = size();
        rank_.assign(m, 0);
        std::vector<int> state(m, -1);  // component id once visited
        std::vector<std::vector<std::pair<int, int>>> adj(m);  // (neighbor, delta)
        for (const auto& c : covers_) {
            adj[c.s].emplace_back(c.t, +1);
            adj[c.t].emplace_back(c.s, -1);
        }
        top_rank_ = 0;
        int comp_id = 0;
        for (int s = 0; s < m; ++s) {
            if (state[s] >= 0) continue;
            std::vector<int> members{s};
            state[s] = comp_id;
            rank_[s] = 0;
            std::vector<int> stack{s};
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (auto [w, d] : adj[v]) {
                    if (state[w] < 0) {
                        state[w] = comp_id;
                        rank_[w] = rank_[v] + d;
                        members.push_back(w);
                        stack.push_back(w);
                    } else if (rank_[w] != rank_[v] + d) {
                        throw NotRanked(ids_[d > 0 ? v : w], ids_[d > 0 ? w : v]);
                    }
                }
            }
            int lo = rank_[members[0]];
            for (int e : members) lo = std::min(lo, rank_[e]);
            for (int e : members) {
                rank_[e] -= lo;
                top_rank_ = std::max(top_rank_, rank_[e]);
            }
            ++comp_id;
        }
    }

    int n_ = 0;
    std::vector<int> ids_;
    std::vector<Cover> covers_;
    std::vector<int> rank_;
    int top_rank_ = 0;
};

struct Violation {
    int cover_index = 0;
    int s = 0, t = 0;   // original element ids
    int color = 0;      // 1-based in reports
    std::vector<long> expected;
    std::vector<long> actual;
};

struct StructureReport {
    bool ok = false;
    std::vector<Violation> violations;
    std::vector<int> colors_used;             // 0-based, sorted
    bool fully_surjective = false;            // every color appears
    bool sufficiently_surjective = false;     // every GCM component is hit
};

// Verifies wt(s) + (row i of M) = wt(t) for every color-i cover.
inline StructureReport check_m_structure(const EdgeColoredPoset& p, const GcmGraph& g) {
    if (p.n_colors() != g.n()) throw IndexMismatch(p.n_colors(), g.n());
    StructureReport rep;
    std::vector<std::vector<long>> wt(p.size());
    for (int x = 0; x < p.size(); ++x) wt[x] = p.weight(x);
    for (std::size_t k = 0; k < p.covers().size(); ++k) {
        const auto& c = p.covers()[k];
        std::vector<long> expected(g.n());
        for (int j = 0; j < g.n(); ++j)
            expected[j] = wt[c.s][j] + static_cast<long>(g.at(c.color, j).get_num().get_si());
        if (expected != wt[c.t]) {
            Violation v;
            v.cover_index = static_cast<int>(k);
            v.s = p.ids()[c.s];
            v.t = p.ids()[c.t];
            v.color = c.color + 1;
            v.expected = std::move(expected);
            v.actual = wt[c.t];
            rep.violations.push_back(std::move(v));
        }
    }
    std::vector<char> used(g.n(), 0);
    for (const auto& c : p.covers()) used[c.color] = 1;
    for (int i = 0; i < g.n(); ++i)
        if (used[i]) rep.colors_used.push_back(i);
    rep.fully_surjective = static_cast<int>(rep.colors_used.size()) == g.n();
    rep.sufficiently_surjective = true;
    for (const auto& comp : g.connected_components()) {
        bool hit = false;
        for (int node : comp) hit = hit || used[node];
        if (!hit) rep.sufficiently_surjective = false;
    }
    rep.ok = rep.violations.empty();
    return rep;
}

struct InferenceResult {
    Classification classification;
    std::vector<int> descent_chain;  // original element ids, top first
    std::vector<int> fired_colors;   // 0-based colors of the descent steps
};

// Finite-type inference with the descent cross-check: play the game from
// the weight of a maximal-rank element; each fired color must admit an
// element of the matching color component at the mirrored rank whose weight
// equals the game position.
inline InferenceResult infer_finite_type(const EdgeColoredPoset& p, const GcmGraph& g) {
    auto rep = check_m_structure(p, g);
    if (!rep.ok) throw StructureNotVerified("M-structure violations present");
    if (!rep.sufficiently_surjective)
        throw StructureNotVerified("edge coloring misses a component of the graph");
    if (p.covers().empty()) throw StructureNotVerified("poset has no covers");
    InferenceResult out;
    out.classification = recognize(g);
    if (!out.classification.all_finite)
        throw StructureNotVerified("graph fails to classify as finite type");

    int cur = 0;
    for (int x = 0; x < p.size(); ++x)
        if (p.rank(x) > p.rank(cur) || (p.rank(x) == p.rank(cur) && p.ids()[x] < p.ids()[cur])) cur = x;
    out.descent_chain.push_back(p.ids()[cur]);
    auto wt_vec = [&](int x) { return p.weight(x); };
    Position<Rational> pos(g.n());
    {
        auto w = wt_vec(cur);
        for (int j = 0; j < g.n(); ++j) pos[j] = Rational(w[j]);
    }
    for (int step = 1; step <= p.top_rank() + 1; ++step) {
        auto legal = legal_moves(g, pos);
        if (legal.empty()) break;
        int color = legal.front();
        fire_in_place(g, pos, color);
        // mirrored rank inside the color component of the current element
        int next = -1;
        for (const auto& comp : p.i_components(color)) {
            if (std::find(comp.begin(), comp.end(), cur) == comp.end()) continue;
            int lo = p.rank(comp[0]), hi = p.rank(comp[0]);
            for (int e : comp) {
                lo = std::min(lo, p.rank(e));
                hi = std::max(hi, p.rank(e));
            }
            int target = lo + (hi - p.rank(cur));  // rho = l - rho_cur
            for (int e : comp) {
                if (p.rank(e) != target) continue;
                if (next < 0 || p.ids()[e] < p.ids()[next]) next = e;
            }
            break;
        }
        if (next < 0 || p.rank(next) >= p.rank(cur)) throw DescentFailed(step);
        auto w = wt_vec(next);
        for (int j = 0; j < g.n(); ++j)
            if (pos[j] != Rational(w[j])) throw DescentFailed(step);
        cur = next;
        out.descent_chain.push_back(p.ids()[cur]);
        out.fired_colors.push_back(color);
    }
    return out;
}

}  // namespace numbersgame
