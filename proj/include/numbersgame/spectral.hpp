// Spectral analysis of the firing matrix A = 2I - M: Perron root and vector
// by shifted power iteration, the sub/critical/supercritical trichotomy
// (exact for integer amplitudes via leading principal minors), divergence
// certificates, and the cycle characteristic-polynomial shift.
#pragma once

#include <cmath>
#include <cstdlib>
#include <optional>
#include <vector>

#include "numbersgame/errors.hpp"
#include "numbersgame/graph.hpp"

namespace numbersgame {

enum class Trichotomy { SubCritical, Critical, SuperCritical };

inline const char* to_string(Trichotomy t) {
    switch (t) {
        case Trichotomy::SubCritical: return "subcritical";
        case Trichotomy::Critical: return "critical";
        default: return "supercritical";
    }
}

// A = 2I - M, row-major. Nonnegative with zero diagonal.
template <class S>
std::vector<S> firing_matrix(const AmplitudeGraph<S>& g) {
    const int n = g.n();
    std::vector<S> a(static_cast<std::size_t>(n) * n, scalar_traits<S>::zero());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) a[static_cast<std::size_t>(i) * n + j] = -g.at(i, j);
    return a;
}

struct PerronResult {
    double rho = 0.0;
    std::vector<double> vec;  // normalized so the largest entry is 1
    long iterations = 0;
};

namespace detail {

inline constexpr long kPowerIterationCap = 1'000'000;

// Power iteration on A + I; the shift breaks the periodicity of bipartite
// graphs so the Perron eigenvalue is strictly dominant.
inline PerronResult perron_dense(const std::vector<double>& a, int n) {
    PerronResult out;
    if (n == 1) {
        out.vec = {1.0};
        return out;
    }
    std::vector<double> v(n, 1.0), w(n);
    for (long it = 1; it <= kPowerIterationCap; ++it) {
        for (int i = 0; i < n; ++i) {
            double s = v[i];  // the +I shift
            const double* row = &a[static_cast<std::size_t>(i) * n];
            for (int j = 0; j < n; ++j) s += row[j] * v[j];
            w[i] = s;
        }
        double mx = 0.0;
        for (double x : w) mx = std::max(mx, std::abs(x));
        for (int i = 0; i < n; ++i) v[i] = w[i] / mx;
        // Rayleigh estimate of rho(A) and the residual stopping test
        double num = 0.0, den = 0.0;
        std::vector<double> av(n, 0.0);
        for (int i = 0; i < n; ++i) {
            const double* row = &a[static_cast<std::size_t>(i) * n];
            double s = 0.0;
            for (int j = 0; j < n; ++j) s += row[j] * v[j];
            av[i] = s;
            num += v[i] * s;
            den += v[i] * v[i];
        }
        double rho = num / den;
        double resid = 0.0, vmax = 0.0;
        for (int i = 0; i < n; ++i) {
            resid = std::max(resid, std::abs(av[i] - rho * v[i]));
            vmax = std::max(vmax, std::abs(v[i]));
        }
        if (resid <= tol::eig * std::max(vmax, 1.0)) {
            out.rho = rho;
            out.iterations = it;
            double top = 0.0;
            for (double x : v) top = std::max(top, x);
            out.vec.resize(n);
            for (int i = 0; i < n; ++i) out.vec[i] = v[i] / top;
            return out;
        }
    }
    throw NoConvergence(kPowerIterationCap);
}

template <class S>
std::vector<double> dense_A_double(const AmplitudeGraph<S>& g, const std::vector<int>& nodes) {
    const int m = static_cast<int>(nodes.size());
    std::vector<double> a(static_cast<std::size_t>(m) * m, 0.0);
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c)
            if (r != c) a[static_cast<std::size_t>(r) * m + c] = -scalar_traits<S>::to_double(g.at(nodes[r], nodes[c]));
    return a;
}

// Exact trichotomy of a connected integer component via the leading principal
// minors of M = 2I - A. All positive: rho < 2 (nonsingular M-matrix). First
// n-1 positive and det zero: rank is n-1, so solve for the one-dimensional
// kernel; a strictly positive kernel vector is a Perron vector for eigenvalue
// 2 and certifies rho = 2, anything else forces rho > 2 (only the Perron
// root of an irreducible nonnegative matrix has a positive eigenvector).
// Any other minor sign pattern rules out both rho < 2 and rho = 2.
inline Trichotomy exact_trichotomy_connected(std::vector<Rational> m, int n) {
    auto at = [&](int i, int j) -> Rational& { return m[static_cast<std::size_t>(i) * n + j]; };
    std::vector<Rational> orig = m;
    // plain elimination; the pivots are ratios of consecutive leading minors
    Rational minor(1);
    int zero_at = -1;
    for (int k = 0; k < n; ++k) {
        if (sgn(at(k, k)) == 0) {
            zero_at = k;
            break;
        }
        minor *= at(k, k);
        if (sgn(minor) <= 0) {
            // leading minor d_{k+1} <= 0
            if (k + 1 < n || sgn(minor) < 0) return Trichotomy::SuperCritical;
        }
        for (int i = k + 1; i < n; ++i) {
            Rational f = at(i, k) / at(k, k);
            if (sgn(f) == 0) continue;
            for (int j = k; j < n; ++j) at(i, j) -= f * at(k, j);
        }
    }
    if (zero_at < 0 && sgn(minor) > 0) return Trichotomy::SubCritical;
    if (zero_at >= 0 && zero_at < n - 1) return Trichotomy::SuperCritical;
    // d_1..d_{n-1} > 0, d_n = 0: back-substitute for the kernel vector
    // with last coordinate 1, using the eliminated rows 0..n-2.
    std::vector<Rational> x(n, Rational(0));
    x[n - 1] = 1;
    for (int i = n - 2; i >= 0; --i) {
        Rational s(0);
        for (int j = i + 1; j < n; ++j) s += at(i, j) * x[j];
        x[i] = -s / at(i, i);
    }
    for (int i = 0; i < n; ++i)
        if (sgn(x[i]) <= 0) return Trichotomy::SuperCritical;
    // sanity: x really is in the kernel of the original matrix
    for (int i = 0; i < n; ++i) {
        Rational s(0);
        for (int j = 0; j < n; ++j) s += orig[static_cast<std::size_t>(i) * n + j] * x[j];
        if (sgn(s) != 0) return Trichotomy::SuperCritical;
    }
    return Trichotomy::Critical;
}

}  // namespace detail

// Perron root and vector of the firing matrix; requires a connected graph.
template <class S>
PerronResult perron(const AmplitudeGraph<S>& g) {
    if (!g.connected()) throw NotConnected();
    std::vector<int> all(g.n());
    for (int i = 0; i < g.n(); ++i) all[i] = i;
    return detail::perron_dense(detail::dense_A_double(g, all), g.n());
}

struct ComponentClass {
    std::vector<int> nodes;   // sorted node ids of the component
    Trichotomy cls;
    bool exact = false;       // class decided by exact arithmetic
    PerronResult perron;      // float estimate, always computed
};

namespace detail {

template <class S>
bool all_integer(const AmplitudeGraph<S>& g) {
    for (const auto& v : g.amplitudes())
        if (!scalar_traits<S>::is_integer(v)) return false;
    return true;
}

template <class S>
std::vector<Rational> exact_M(const AmplitudeGraph<S>& g, const std::vector<int>& nodes) {
    const int m = static_cast<int>(nodes.size());
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(m) * m);
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c) {
            if constexpr (scalar_traits<S>::exact) {
                out.push_back(g.at(nodes[r], nodes[c]));
            } else {
                out.push_back(Rational(static_cast<long>(std::llrint(g.at(nodes[r], nodes[c])))));
            }
        }
    return out;
}

}  // namespace detail

// Classifies every connected component. Integer amplitudes are decided
// exactly; otherwise the float Perron root against the dead band around 2.
template <class S>
std::vector<ComponentClass> classify_components(const AmplitudeGraph<S>& g) {
    std::vector<ComponentClass> out;
    const bool exact_ok = detail::all_integer(g);
    for (auto& comp : g.connected_components()) {
        ComponentClass cc;
        cc.nodes = comp;
        cc.perron = detail::perron_dense(detail::dense_A_double(g, comp), static_cast<int>(comp.size()));
        if (exact_ok) {
            cc.exact = true;
            cc.cls = detail::exact_trichotomy_connected(detail::exact_M(g, comp), static_cast<int>(comp.size()));
        } else {
            double rho = cc.perron.rho;
            if (rho < 2.0 - tol::spec)
                cc.cls = Trichotomy::SubCritical;
            else if (rho > 2.0 + tol::spec)
                cc.cls = Trichotomy::SuperCritical;
            else
                cc.cls = Trichotomy::Critical;
        }
        out.push_back(std::move(cc));
    }
    return out;
}

// Worst class over components (supercritical dominates critical dominates
// subcritical).
template <class S>
Trichotomy trichotomy(const AmplitudeGraph<S>& g) {
    Trichotomy worst = Trichotomy::SubCritical;
    for (const auto& cc : classify_components(g))
        if (static_cast<int>(cc.cls) > static_cast<int>(worst)) worst = cc.cls;
    return worst;
}

struct DivergenceCertificate {
    std::vector<int> nodes;    // component carrying the certificate
    double rho = 0.0;          // Perron root, >= 2
    std::vector<double> nu;    // left==right Perron vector restricted to nodes
    double pairing = 0.0;      // nu . lambda restricted to the component, > 0
};

// A component with Perron root >= 2 and positive Perron pairing certifies
// divergence: the pairing never decreases under legal firing yet every
// terminal position would have a nonpositive pairing.
template <class S>
std::optional<DivergenceCertificate> certify_divergence(const AmplitudeGraph<S>& g,
                                                        const std::vector<S>& position) {
    for (const auto& cc : classify_components(g)) {
        if (cc.cls == Trichotomy::SubCritical) continue;
        double pairing = 0.0;
        for (std::size_t k = 0; k < cc.nodes.size(); ++k)
            pairing += cc.perron.vec[k] * scalar_traits<S>::to_double(position[cc.nodes[k]]);
        if (pairing > tol::zero) {
            DivergenceCertificate cert;
            cert.nodes = cc.nodes;
            cert.rho = cc.perron.rho;
            cert.nu = cc.perron.vec;
            cert.pairing = pairing;
            return cert;
        }
    }
    return std::nullopt;
}

// For a single cycle, the characteristic polynomial of A differs from that
// of the symmetrized cycle by the constant 2*sqrt(F*B) - F - B, where F and
// B are the products of the off-diagonal entries of A clockwise and
// anticlockwise. The shift is -(sqrt(F)-sqrt(B))^2 <= 0, so the asymmetric
// cycle has the larger Perron root, with equality only when F = B.
template <class S>
double cycle_charpoly_shift(const AmplitudeGraph<S>& g) {
    if (!g.is_cycle()) throw NotACycle();
    const int n = g.n();
    // walk the cycle from node 0
    std::vector<int> order{0};
    std::vector<char> used(n, 0);
    used[0] = 1;
    while (static_cast<int>(order.size()) < n) {
        int v = order.back();
        for (int w : g.neighbors(v)) {
            if (!used[w]) {
                used[w] = 1;
                order.push_back(w);
                break;
            }
        }
    }
    double fwd = 1.0, bwd = 1.0;
    for (int k = 0; k < n; ++k) {
        int i = order[k], j = order[(k + 1) % n];
        fwd *= -scalar_traits<S>::to_double(g.at(i, j));
        bwd *= -scalar_traits<S>::to_double(g.at(j, i));
    }
    return 2.0 * std::sqrt(fwd * bwd) - fwd - bwd;
}

}  // namespace numbersgame
