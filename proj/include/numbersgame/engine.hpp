// The numbers game engine: legal moves, firing, full plays under a move
// policy, replay of recorded firing sequences, and the conserved quadratic
// form on trees.
#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <vector>

#include "numbersgame/errors.hpp"
#include "numbersgame/graph.hpp"
#include "numbersgame/spectral.hpp"

namespace numbersgame {

template <class S>
using Position = std::vector<S>;

template <class S>
bool is_legal(const AmplitudeGraph<S>& g, const Position<S>& pos, int node) {
    (void)g;
    return scalar_traits<S>::is_positive(pos[node]);
}

template <class S>
std::vector<int> legal_moves(const AmplitudeGraph<S>& g, const Position<S>& pos) {
    std::vector<int> out;
    for (int i = 0; i < g.n(); ++i)
        if (is_legal(g, pos, i)) out.push_back(i);
    return out;
}

template <class S>
bool is_terminal(const AmplitudeGraph<S>& g, const Position<S>& pos) {
    return legal_moves(g, pos).empty();
}

// The unrestricted firing step lambda_j -= M_ij * lambda_i; the fired node
// itself flips sign. No legality check, which is what orbit enumeration
// needs.
template <class S>
void reflect_in_place(const AmplitudeGraph<S>& g, Position<S>& pos, int node) {
    const S v = pos[node];
    if (scalar_traits<S>::is_zero(v)) return;
    for (int j = 0; j < g.n(); ++j) pos[j] -= g.at(node, j) * v;
}

template <class S>
void fire_in_place(const AmplitudeGraph<S>& g, Position<S>& pos, int node) {
    if (!is_legal(g, pos, node)) throw IllegalFiring(node + 1);
    reflect_in_place(g, pos, node);
}

template <class S>
Position<S> fire(const AmplitudeGraph<S>& g, Position<S> pos, int node) {
    fire_in_place(g, pos, node);
    return pos;
}

// A policy picks the next node from the nonempty legal set.
using Policy = std::function<int(const std::vector<int>& legal, long step)>;

inline Policy lowest_policy() {
    return [](const std::vector<int>& legal, long) { return legal.front(); };
}

inline Policy random_policy(unsigned long seed) {
    auto rng = std::make_shared<std::mt19937_64>(seed);
    return [rng](const std::vector<int>& legal, long) {
        std::uniform_int_distribution<std::size_t> dist(0, legal.size() - 1);
        return legal[dist(*rng)];
    };
}

enum class PlayStatus { Converged, Diverged, LimitReached };

inline const char* to_string(PlayStatus s) {
    switch (s) {
        case PlayStatus::Converged: return "converged";
        case PlayStatus::Diverged: return "diverged";
        default: return "limit-reached";
    }
}

template <class S>
struct PlayResult {
    PlayStatus status = PlayStatus::Converged;
    Position<S> final_position;
    std::vector<int> firing_sequence;  // 0-based, empty if trace not kept
    long steps = 0;
    std::optional<DivergenceCertificate> certificate;
};

struct PlayOptions {
    long limit = 10'000;
    bool certify = true;     // look for a divergence certificate before and
                             // after hitting the limit
    bool keep_trace = true;
};

template <class S>
PlayResult<S> play(const AmplitudeGraph<S>& g, Position<S> start, const PlayOptions& opt,
                   const Policy& policy = lowest_policy()) {
    PlayResult<S> out;
    for (auto& v : start) scalar_traits<S>::normalize(v);
    if (opt.certify) {
        out.certificate = certify_divergence(g, start);
        if (out.certificate) {
            out.status = PlayStatus::Diverged;
            out.final_position = std::move(start);
            return out;
        }
    }
    Position<S> pos = std::move(start);
    for (long step = 0; step < opt.limit; ++step) {
        auto legal = legal_moves(g, pos);
        if (legal.empty()) {
            out.status = PlayStatus::Converged;
            out.steps = step;
            out.final_position = std::move(pos);
            return out;
        }
        int node = policy(legal, step);
        reflect_in_place(g, pos, node);
        if (opt.keep_trace) out.firing_sequence.push_back(node);
    }
    out.steps = opt.limit;
    if (!is_terminal(g, pos)) {
        if (opt.certify) out.certificate = certify_divergence(g, pos);
        out.status = out.certificate ? PlayStatus::Diverged : PlayStatus::LimitReached;
    }
    out.final_position = std::move(pos);
    return out;
}

// Applies a recorded firing sequence, checking legality at every step.
template <class S>
Position<S> replay(const AmplitudeGraph<S>& g, Position<S> pos, const std::vector<int>& sequence) {
    for (std::size_t k = 0; k < sequence.size(); ++k) {
        int node = sequence[k];
        if (node < 0 || node >= g.n() || !is_legal(g, pos, node))
            throw IllegalFiringAt(static_cast<int>(k + 1), node + 1);
        reflect_in_place(g, pos, node);
    }
    return pos;
}

// Non-throwing variant; empty when the sequence is illegal somewhere.
template <class S>
std::optional<Position<S>> try_replay(const AmplitudeGraph<S>& g, Position<S> pos,
                                      const std::vector<int>& sequence) {
    for (int node : sequence) {
        if (node < 0 || node >= g.n() || !is_legal(g, pos, node)) return std::nullopt;
        reflect_in_place(g, pos, node);
    }
    return pos;
}

namespace detail {

// Gauss-Jordan inverse; exact for rationals, partial pivoting for doubles.
// Returns empty on a singular matrix.
template <class S>
std::optional<std::vector<S>> invert(std::vector<S> a, int n) {
    std::vector<S> inv(static_cast<std::size_t>(n) * n, scalar_traits<S>::zero());
    for (int i = 0; i < n; ++i) inv[static_cast<std::size_t>(i) * n + i] = scalar_traits<S>::one();
    auto A = [&](int i, int j) -> S& { return a[static_cast<std::size_t>(i) * n + j]; };
    auto I = [&](int i, int j) -> S& { return inv[static_cast<std::size_t>(i) * n + j]; };
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        if constexpr (scalar_traits<S>::exact) {
            for (int i = k; i < n; ++i)
                if (!scalar_traits<S>::is_zero(A(i, k))) { piv = i; break; }
        } else {
            double best = 0.0;
            for (int i = k; i < n; ++i) {
                double v = std::abs(scalar_traits<S>::to_double(A(i, k)));
                if (v > best) { best = v; piv = i; }
            }
            if (best <= tol::zero) piv = -1;
        }
        if (piv < 0) return std::nullopt;
        if (piv != k)
            for (int j = 0; j < n; ++j) {
                std::swap(A(piv, j), A(k, j));
                std::swap(I(piv, j), I(k, j));
            }
        S d = A(k, k);
        for (int j = 0; j < n; ++j) {
            A(k, j) = A(k, j) / d;
            I(k, j) = I(k, j) / d;
        }
        for (int i = 0; i < n; ++i) {
            if (i == k) continue;
            S f = A(i, k);
            if (scalar_traits<S>::is_zero(f)) continue;
            for (int j = 0; j < n; ++j) {
                A(i, j) -= f * A(k, j);
                I(i, j) -= f * I(k, j);
            }
        }
    }
    return inv;
}

}  // namespace detail

// The quadratic form Q = D B^{-1} with B = -M^T and D the diagonal
// symmetrizer fixed to 1 at the lowest node of the tree; along each tree
// edge D_j / D_i = M_ji / M_ij. The value pos^T Q pos is invariant under
// legal firing. Defined on connected acyclic graphs with invertible B.
template <class S>
struct ConservedForm {
    std::vector<S> D;  // diagonal entries
    std::vector<S> Q;  // row-major n*n, symmetric

    S evaluate(const Position<S>& pos) const {
        const int n = static_cast<int>(D.size());
        S out = scalar_traits<S>::zero();
        for (int i = 0; i < n; ++i) {
            S row = scalar_traits<S>::zero();
            for (int j = 0; j < n; ++j) row += Q[static_cast<std::size_t>(i) * n + j] * pos[j];
            out += pos[i] * row;
        }
        return out;
    }
};

template <class S>
ConservedForm<S> conserved_form(const AmplitudeGraph<S>& g) {
    if (!g.is_tree()) throw NotATree();
    const int n = g.n();
    ConservedForm<S> out;
    out.D.assign(n, scalar_traits<S>::zero());
    out.D[0] = scalar_traits<S>::one();
    // BFS from node 0 fixes the ratios along tree edges
    std::vector<int> stack{0};
    std::vector<char> seen(n, 0);
    seen[0] = 1;
    while (!stack.empty()) {
        int i = stack.back();
        stack.pop_back();
        for (int j : g.neighbors(i)) {
            if (seen[j]) continue;
            seen[j] = 1;
            out.D[j] = out.D[i] * g.at(j, i) / g.at(i, j);
            stack.push_back(j);
        }
    }
    std::vector<S> b(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) b[static_cast<std::size_t>(i) * n + j] = -g.at(j, i);
    auto binv = detail::invert(std::move(b), n);
    if (!binv) throw NotSubcritical();
    out.Q.resize(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            out.Q[static_cast<std::size_t>(i) * n + j] = out.D[i] * (*binv)[static_cast<std::size_t>(i) * n + j];
    return out;
}

}  // namespace numbersgame
