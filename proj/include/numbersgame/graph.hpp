// GCM / E-GCM graphs: validation, components, induced subgraphs,
// Coxeter edge labels.
#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "numbersgame/errors.hpp"
#include "numbersgame/scalar.hpp"

namespace numbersgame {

enum class Kind { Gcm, Egcm };

// Coxeter label m_ij; 0 encodes infinity.
inline constexpr int kInfiniteLabel = 0;

template <class S>
class AmplitudeGraph {
public:
    using Scalar = S;

    // Validates the amplitude matrix (row-major, n*n) and derives the edge set.
    static AmplitudeGraph validate(int n, std::vector<S> entries) {
        AmplitudeGraph g;
        g.n_ = n;
        g.m_ = std::move(entries);
        const S two = scalar_traits<S>::from_int(2);
        for (int i = 0; i < n; ++i) {
            if (g.at(i, i) != two) throw DiagonalNotTwo(i + 1);
        }
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                if (i == j) continue;
                const S& v = g.at(i, j);
                if (scalar_traits<S>::is_positive(v)) throw PositiveOffDiagonal(i + 1, j + 1);
                bool z_ij = scalar_traits<S>::is_zero(v);
                bool z_ji = scalar_traits<S>::is_zero(g.at(j, i));
                if (z_ij != z_ji) throw AsymmetricZeroPattern(i + 1, j + 1);
                if constexpr (scalar_traits<S>::exact) {
                    if (!scalar_traits<S>::is_integer(v)) throw NonIntegerGcmEntry(i + 1, j + 1);
                }
            }
        }
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                if (scalar_traits<S>::is_zero(g.at(i, j))) continue;
                if constexpr (!scalar_traits<S>::exact) {
                    double p = g.at(i, j) * g.at(j, i);
                    if (!legal_product(p)) throw IllegalAmplitudeProduct(i + 1, j + 1, p);
                }
                g.edges_.emplace_back(i, j);
            }
        }
        return g;
    }

    int n() const { return n_; }
    Kind kind() const { return scalar_traits<S>::exact ? Kind::Gcm : Kind::Egcm; }
    const S& at(int i, int j) const { return m_[static_cast<std::size_t>(i) * n_ + j]; }
    const std::vector<S>& amplitudes() const { return m_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    bool adjacent(int i, int j) const { return i != j && !scalar_traits<S>::is_zero(at(i, j)); }

    int degree(int i) const {
        int d = 0;
        for (int j = 0; j < n_; ++j)
            if (adjacent(i, j)) ++d;
        return d;
    }

    std::vector<int> neighbors(int i) const {
        std::vector<int> out;
        for (int j = 0; j < n_; ++j)
            if (adjacent(i, j)) out.push_back(j);
        return out;
    }

    // Partition of {0..n-1} into connected node subsets, each sorted.
    std::vector<std::vector<int>> connected_components() const {
        std::vector<int> comp(n_, -1);
        std::vector<std::vector<int>> out;
        for (int s = 0; s < n_; ++s) {
            if (comp[s] >= 0) continue;
            int id = static_cast<int>(out.size());
            out.emplace_back();
            std::vector<int> stack{s};
            comp[s] = id;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                out[id].push_back(v);
                for (int w : neighbors(v)) {
                    if (comp[w] < 0) {
                        comp[w] = id;
                        stack.push_back(w);
                    }
                }
            }
            std::sort(out[id].begin(), out[id].end());
        }
        return out;
    }

    bool connected() const { return n_ == 0 || connected_components().size() == 1; }

    // Principal submatrix on the (sorted) node subset.
    AmplitudeGraph induced_subgraph(std::vector<int> nodes) const {
        if (nodes.empty()) throw EmptySubset();
        std::sort(nodes.begin(), nodes.end());
        int m = static_cast<int>(nodes.size());
        std::vector<S> sub;
        sub.reserve(static_cast<std::size_t>(m) * m);
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b) sub.push_back(at(nodes[a], nodes[b]));
        return validate(m, std::move(sub));
    }

    // m_ij: 2 for non-adjacent pairs, k when the product matches 4cos^2(pi/k),
    // kInfiniteLabel when the product reaches 4.
    int coxeter_label(int i, int j) const {
        if (!adjacent(i, j)) return 2;
        if constexpr (scalar_traits<S>::exact) {
            Rational p = at(i, j) * at(j, i);
            if (p == 1) return 3;
            if (p == 2) return 4;
            if (p == 3) return 6;
            return kInfiniteLabel;  // integer products >= 4
        } else {
            double p = at(i, j) * at(j, i);
            if (p >= 4.0 - tol::amp) return kInfiniteLabel;
            return match_label(p).value_or(kInfiniteLabel);
        }
    }

    bool acyclic() const {
        // a forest has |E| = n - #components
        return static_cast<int>(edges_.size()) == n_ - static_cast<int>(connected_components().size());
    }

    bool is_tree() const { return connected() && acyclic(); }

    // Single cycle: connected, every node degree 2, n >= 3.
    bool is_cycle() const {
        if (n_ < 3 || !connected()) return false;
        for (int i = 0; i < n_; ++i)
            if (degree(i) != 2) return false;
        return true;
    }

    static std::optional<int> match_label(double product) {
        if (product < 1.0 - tol::amp) return std::nullopt;
        // invert 4cos^2(pi/k) and test the neighbouring integers
        double clamped = std::min(std::max(product, 0.0), 4.0);
        double k_est = M_PI / std::acos(std::sqrt(clamped) / 2.0);
        for (long k = std::lround(k_est) - 1; k <= std::lround(k_est) + 1; ++k) {
            if (k < 3 || k > tol::max_label) continue;
            if (std::abs(coxeter_product(static_cast<int>(k)) - product) <= tol::amp) return static_cast<int>(k);
        }
        return std::nullopt;
    }

    static bool legal_product(double product) {
        if (product >= 4.0 - tol::amp) return true;
        return match_label(product).has_value();
    }

private:
    int n_ = 0;
    std::vector<S> m_;
    std::vector<std::pair<int, int>> edges_;
};

using GcmGraph = AmplitudeGraph<Rational>;
using EgcmGraph = AmplitudeGraph<double>;

// Converts an integer GCM graph to approximate mode.
inline EgcmGraph to_approx(const GcmGraph& g) {
    std::vector<double> m;
    m.reserve(g.amplitudes().size());
    for (const auto& v : g.amplitudes()) m.push_back(v.get_d());
    return EgcmGraph::validate(g.n(), std::move(m));
}

}  // namespace numbersgame
