// Catalog constructors for every named graph family: the finite-type Dynkin
// diagrams, the E-Coxeter families, and both affine obstruction catalogs
// (integer-amplitude and symmetric real-amplitude variants).
//
// Frozen numbering conventions (1-based in ids, 0-based internally):
//   * paths run left to right; branch nodes come last;
//   * B_n carries M[n-1][n] = -1, M[n][n-1] = -2 on its last edge (so B2 is
//     [[2,-1],[-2,2]]); C_n is the transpose of that edge;
//   * F4 carries M[2][3] = -2, M[3][2] = -1 on its middle edge;
//   * fork families (D, affB, affD, ...) list the fork pair before the spine
//     on the left and after it on the right;
//   * the three doubly-labeled affine path variants are told apart by the
//     leaf-side amplitudes of their end edges: affBprime has (1,1), affC has
//     (1,2), affCprime has (2,2).
#pragma once

#include <cctype>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "numbersgame/errors.hpp"
#include "numbersgame/graph.hpp"

namespace numbersgame {

enum class Family {
    // finite-type Dynkin diagrams (integer amplitudes)
    A, B, C, D, E6, E7, E8, F4, G2,
    // E-Coxeter families (real amplitudes)
    CalA, CalB, CalD, CalE6, CalE7, CalE8, CalF4, CalH3, CalH4, CalI2,
    // inadmissible integer catalog
    AffA, AffB, AffBprime, AffC, AffCprime, AffCdprime, AffD,
    AffE6, AffE7, AffE8, AffF4, AffFprime4, AffG2, SmallCycle,
    // inadmissible symmetric real catalog
    AffCalA, AffCalB, AffCalC, AffCalD, AffCalE6, AffCalE7, AffCalE8,
    AffCalF4, AffCalG2, AffH3, AffH4,
};

struct CatalogId {
    Family family;
    int rank = 0;     // the subscript n where the family is parametrized
    int m = 0;        // Coxeter label for CalI2
    int variant = 0;  // AffG2 variant 1..6
    int p1 = 0, q1 = 0, p2 = 0, q2 = 0;  // SmallCycle amplitudes
};

namespace detail {

class GcmBuilder {
public:
    explicit GcmBuilder(int n) : n_(n), m_(static_cast<std::size_t>(n) * n, Rational(0)) {
        for (int i = 0; i < n; ++i) at(i, i) = 2;
    }
    Rational& at(int i, int j) { return m_[static_cast<std::size_t>(i) * n_ + j]; }
    void edge(int i, int j, long p = 1, long q = 1) {
        at(i, j) = -p;
        at(j, i) = -q;
    }
    void path(int from, int to) {
        for (int i = from; i < to; ++i) edge(i, i + 1);
    }
    GcmGraph build() { return GcmGraph::validate(n_, std::move(m_)); }

private:
    int n_;
    std::vector<Rational> m_;
};

class EgcmBuilder {
public:
    EgcmBuilder(int n, double ratio) : n_(n), r_(ratio), m_(static_cast<std::size_t>(n) * n, 0.0) {
        for (int i = 0; i < n; ++i) at(i, i) = 2.0;
    }
    double& at(int i, int j) { return m_[static_cast<std::size_t>(i) * n_ + j]; }
    // Edge with Coxeter label m; the asymmetry ratio splits the product.
    void edge(int i, int j, int label = 3) {
        double c = -symmetric_amplitude(label);
        at(i, j) = -r_ * c;
        at(j, i) = -c / r_;
    }
    void infinite_edge(int i, int j) {
        at(i, j) = -2.0 * r_;
        at(j, i) = -2.0 / r_;
    }
    void path(int from, int to) {
        for (int i = from; i < to; ++i) edge(i, i + 1);
    }
    EgcmGraph build() { return EgcmGraph::validate(n_, std::move(m_)); }

private:
    int n_;
    double r_;
    std::vector<double> m_;
};

inline void require(bool ok, const std::string& what) {
    if (!ok) throw RankOutOfRange(what);
}

}  // namespace detail

inline GcmGraph catalog_gcm(const CatalogId& id) {
    using detail::GcmBuilder;
    using detail::require;
    const int n = id.rank;
    switch (id.family) {
        case Family::A: {
            require(n >= 1, "A_n requires n >= 1");
            GcmBuilder b(n);
            b.path(0, n - 1);
            return b.build();
        }
        case Family::B: {
            require(n >= 2, "B_n requires n >= 2");
            GcmBuilder b(n);
            b.path(0, n - 2);
            b.edge(n - 2, n - 1, 1, 2);
            return b.build();
        }
        case Family::C: {
            require(n >= 3, "C_n requires n >= 3");
            GcmBuilder b(n);
            b.path(0, n - 2);
            b.edge(n - 2, n - 1, 2, 1);
            return b.build();
        }
        case Family::D: {
            require(n >= 4, "D_n requires n >= 4");
            GcmBuilder b(n);
            b.path(0, n - 3);
            b.edge(n - 3, n - 2);
            b.edge(n - 3, n - 1);
            return b.build();
        }
        case Family::E6: case Family::E7: case Family::E8: {
            int nn = id.family == Family::E6 ? 6 : id.family == Family::E7 ? 7 : 8;
            GcmBuilder b(nn);
            b.path(0, nn - 2);
            b.edge(2, nn - 1);
            return b.build();
        }
        case Family::F4: {
            GcmBuilder b(4);
            b.edge(0, 1);
            b.edge(1, 2, 2, 1);
            b.edge(2, 3);
            return b.build();
        }
        case Family::G2: {
            GcmBuilder b(2);
            b.edge(0, 1, 1, 3);
            return b.build();
        }
        case Family::AffA: {
            require(n >= 1, "affA_n requires n >= 1");
            if (n == 1) {
                GcmBuilder b(2);
                b.edge(0, 1, 2, 2);
                return b.build();
            }
            GcmBuilder b(n + 1);
            b.path(0, n);
            b.edge(n, 0);
            return b.build();
        }
        case Family::AffB: {
            require(n >= 3, "affB_n requires n >= 3");
            GcmBuilder b(n + 1);
            b.edge(0, 2);
            b.edge(1, 2);
            b.path(2, n - 1);
            b.edge(n - 1, n, 2, 1);
            return b.build();
        }
        case Family::AffBprime: {
            require(n >= 2, "affBprime_n requires n >= 2");
            GcmBuilder b(n + 1);
            b.edge(0, 1, 1, 2);
            b.path(1, n - 1);
            b.edge(n - 1, n, 2, 1);
            return b.build();
        }
        case Family::AffC: {
            require(n >= 2, "affC_n requires n >= 2");
            GcmBuilder b(n + 1);
            b.edge(0, 1, 1, 2);
            b.path(1, n - 1);
            b.edge(n - 1, n, 1, 2);
            return b.build();
        }
        case Family::AffCprime: {
            require(n >= 2, "affCprime_n requires n >= 2");
            GcmBuilder b(n + 1);
            b.edge(0, 1, 2, 1);
            b.path(1, n - 1);
            b.edge(n - 1, n, 1, 2);
            return b.build();
        }
        case Family::AffCdprime: {
            require(n >= 3, "affCdprime_n requires n >= 3");
            GcmBuilder b(n + 1);
            b.edge(0, 2);
            b.edge(1, 2);
            b.path(2, n - 1);
            b.edge(n - 1, n, 1, 2);
            return b.build();
        }
        case Family::AffD: {
            require(n >= 4, "affD_n requires n >= 4");
            GcmBuilder b(n + 1);
            b.edge(0, 2);
            b.edge(1, 2);
            b.path(2, n - 2);
            b.edge(n - 2, n - 1);
            b.edge(n - 2, n);
            return b.build();
        }
        case Family::AffE6: {
            GcmBuilder b(7);
            b.path(0, 4);
            b.edge(2, 5);
            b.edge(5, 6);
            return b.build();
        }
        case Family::AffE7: {
            GcmBuilder b(8);
            b.path(0, 6);
            b.edge(3, 7);
            return b.build();
        }
        case Family::AffE8: {
            GcmBuilder b(9);
            b.path(0, 7);
            b.edge(2, 8);
            return b.build();
        }
        case Family::AffF4: {
            GcmBuilder b(5);
            b.edge(0, 1);
            b.edge(1, 2, 2, 1);
            b.edge(2, 3);
            b.edge(3, 4);
            return b.build();
        }
        case Family::AffFprime4: {
            GcmBuilder b(5);
            b.edge(0, 1);
            b.edge(1, 2, 1, 2);
            b.edge(2, 3);
            b.edge(3, 4);
            return b.build();
        }
        case Family::AffG2: {
            require(id.variant >= 1 && id.variant <= 6, "affG2 variant must be 1..6");
            GcmBuilder b(3);
            switch (id.variant) {
                case 1: b.edge(0, 1, 1, 3); b.edge(1, 2); break;
                case 2: b.edge(0, 1, 1, 3); b.edge(1, 2, 1, 2); break;
                case 3: b.edge(0, 1, 1, 3); b.edge(1, 2, 1, 3); break;
                case 4: b.edge(0, 1, 3, 1); b.edge(1, 2); break;
                case 5: b.edge(0, 1, 1, 3); b.edge(1, 2, 2, 1); break;
                case 6: b.edge(0, 1, 1, 3); b.edge(1, 2, 3, 1); break;
            }
            return b.build();
        }
        case Family::SmallCycle: {
            require(id.p1 >= 1 && id.q1 >= 1 && id.p2 >= 1 && id.q2 >= 1,
                    "smallCycle amplitudes must be positive integers");
            require(id.p1 * id.q1 + id.p2 * id.q2 >= 3, "smallCycle with all unit products is affA2");
            // nodes: 0 = a, 1 = b, 2 = c in the (a, b, c) position convention
            GcmBuilder b(3);
            b.edge(0, 1);
            b.edge(2, 0, id.q1, id.p1);
            b.edge(2, 1, id.q2, id.p2);
            return b.build();
        }
        default:
            throw RankOutOfRange("catalog id does not name an integer GCM graph");
    }
}

inline EgcmGraph catalog_egcm(const CatalogId& id, double ratio = 1.0) {
    using detail::EgcmBuilder;
    using detail::require;
    const int n = id.rank;
    switch (id.family) {
        case Family::CalA: {
            require(n >= 1, "calA_n requires n >= 1");
            EgcmBuilder b(n, ratio);
            b.path(0, n - 1);
            return b.build();
        }
        case Family::CalB: {
            require(n >= 3, "calB_n requires n >= 3");
            EgcmBuilder b(n, ratio);
            b.path(0, n - 2);
            b.edge(n - 2, n - 1, 4);
            return b.build();
        }
        case Family::CalD: {
            require(n >= 4, "calD_n requires n >= 4");
            EgcmBuilder b(n, ratio);
            b.path(0, n - 3);
            b.edge(n - 3, n - 2);
            b.edge(n - 3, n - 1);
            return b.build();
        }
        case Family::CalE6: case Family::CalE7: case Family::CalE8: {
            int nn = id.family == Family::CalE6 ? 6 : id.family == Family::CalE7 ? 7 : 8;
            EgcmBuilder b(nn, ratio);
            b.path(0, nn - 2);
            b.edge(2, nn - 1);
            return b.build();
        }
        case Family::CalF4: {
            EgcmBuilder b(4, ratio);
            b.edge(0, 1);
            b.edge(1, 2, 4);
            b.edge(2, 3);
            return b.build();
        }
        case Family::CalH3: {
            EgcmBuilder b(3, ratio);
            b.edge(0, 1, 5);
            b.edge(1, 2);
            return b.build();
        }
        case Family::CalH4: {
            EgcmBuilder b(4, ratio);
            b.edge(0, 1, 5);
            b.path(1, 3);
            return b.build();
        }
        case Family::CalI2: {
            require(id.m >= 4, "I2(m) requires m >= 4");
            EgcmBuilder b(2, ratio);
            b.edge(0, 1, id.m);
            return b.build();
        }
        case Family::AffCalA: {
            require(n >= 1, "affcalA_n requires n >= 1");
            if (n == 1) {
                EgcmBuilder b(2, ratio);
                b.infinite_edge(0, 1);
                return b.build();
            }
            EgcmBuilder b(n + 1, ratio);
            b.path(0, n);
            b.edge(n, 0);
            return b.build();
        }
        case Family::AffCalB: {
            require(n >= 3, "affcalB_n requires n >= 3");
            EgcmBuilder b(n + 1, ratio);
            b.edge(0, 2);
            b.edge(1, 2);
            b.path(2, n - 1);
            b.edge(n - 1, n, 4);
            return b.build();
        }
        case Family::AffCalC: {
            require(n >= 2, "affcalC_n requires n >= 2");
            EgcmBuilder b(n + 1, ratio);
            b.edge(0, 1, 4);
            b.path(1, n - 1);
            b.edge(n - 1, n, 4);
            return b.build();
        }
        case Family::AffCalD: {
            require(n >= 4, "affcalD_n requires n >= 4");
            EgcmBuilder b(n + 1, ratio);
            b.edge(0, 2);
            b.edge(1, 2);
            b.path(2, n - 2);
            b.edge(n - 2, n - 1);
            b.edge(n - 2, n);
            return b.build();
        }
        case Family::AffCalE6: {
            EgcmBuilder b(7, ratio);
            b.path(0, 4);
            b.edge(2, 5);
            b.edge(5, 6);
            return b.build();
        }
        case Family::AffCalE7: {
            EgcmBuilder b(8, ratio);
            b.path(0, 6);
            b.edge(3, 7);
            return b.build();
        }
        case Family::AffCalE8: {
            EgcmBuilder b(9, ratio);
            b.path(0, 7);
            b.edge(2, 8);
            return b.build();
        }
        case Family::AffCalF4: {
            EgcmBuilder b(5, ratio);
            b.edge(0, 1);
            b.edge(1, 2, 4);
            b.edge(2, 3);
            b.edge(3, 4);
            return b.build();
        }
        case Family::AffCalG2: {
            EgcmBuilder b(3, ratio);
            b.edge(0, 1, 6);
            b.edge(1, 2);
            return b.build();
        }
        case Family::AffH3: {
            EgcmBuilder b(4, ratio);
            b.edge(0, 1);
            b.edge(1, 2, 5);
            b.edge(2, 3);
            return b.build();
        }
        case Family::AffH4: {
            EgcmBuilder b(5, ratio);
            b.edge(0, 1, 5);
            b.path(1, 4);
            return b.build();
        }
        default:
            throw RankOutOfRange("catalog id does not name a real-amplitude graph");
    }
}

using CatalogGraph = std::variant<GcmGraph, EgcmGraph>;

namespace detail {

inline std::string normalize_id(const std::string& raw) {
    std::string s;
    for (char c : raw) {
        if (c == '~' || std::isspace(static_cast<unsigned char>(c))) continue;
        s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    return s;
}

inline bool eat(std::string& s, const std::string& prefix) {
    if (s.rfind(prefix, 0) != 0) return false;
    s.erase(0, prefix.size());
    return true;
}

inline bool parse_int(const std::string& s, int& out) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    out = std::stoi(s);
    return true;
}

// "(a,b,...)" -> list of ints
inline bool parse_arglist(const std::string& s, std::vector<int>& out) {
    if (s.size() < 3 || s.front() != '(' || s.back() != ')') return false;
    std::string body = s.substr(1, s.size() - 2);
    std::size_t pos = 0;
    while (pos <= body.size()) {
        std::size_t comma = body.find(',', pos);
        std::string tok = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        int v;
        if (!parse_int(tok, v)) return false;
        out.push_back(v);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return !out.empty();
}

}  // namespace detail

// Parses a catalog id string like "B4", "I2(7)", "affC3", "affcalB4",
// "affG2v3", or "smallCycle(1,2,1,1)". Ids are case-insensitive and may
// carry a decorative '~' after "aff".
inline CatalogId parse_catalog_id(const std::string& raw) {
    using namespace detail;
    std::string s = normalize_id(raw);
    auto fixed = [&](const std::string& name, Family f, int rank) -> std::optional<CatalogId> {
        if (s == name) return CatalogId{f, rank};
        return std::nullopt;
    };
    // fixed-rank names first
    struct FixedEntry { const char* name; Family f; int rank; };
    static const FixedEntry fixed_table[] = {
        {"e6", Family::E6, 6}, {"e7", Family::E7, 7}, {"e8", Family::E8, 8},
        {"f4", Family::F4, 4}, {"g2", Family::G2, 2},
        {"cale6", Family::CalE6, 6}, {"cale7", Family::CalE7, 7}, {"cale8", Family::CalE8, 8},
        {"calf4", Family::CalF4, 4}, {"h3", Family::CalH3, 3}, {"calh3", Family::CalH3, 3},
        {"h4", Family::CalH4, 4}, {"calh4", Family::CalH4, 4},
        {"affe6", Family::AffE6, 6}, {"affe7", Family::AffE7, 7}, {"affe8", Family::AffE8, 8},
        {"afff4", Family::AffF4, 4}, {"afffprime4", Family::AffFprime4, 4},
        {"affcale6", Family::AffCalE6, 6}, {"affcale7", Family::AffCalE7, 7},
        {"affcale8", Family::AffCalE8, 8}, {"affcalf4", Family::AffCalF4, 4},
        {"affcalg2", Family::AffCalG2, 2}, {"affh3", Family::AffH3, 3}, {"affh4", Family::AffH4, 4},
    };
    for (const auto& e : fixed_table)
        if (auto id = fixed(e.name, e.f, e.rank)) return *id;

    if (eat(s, "i2")) {
        std::vector<int> args;
        if (parse_arglist(s, args) && args.size() == 1) return CatalogId{Family::CalI2, 2, args[0]};
        throw UnknownCatalogId(raw);
    }
    if (eat(s, "smallcycle")) {
        std::vector<int> args;
        if (parse_arglist(s, args) && args.size() == 4)
            return CatalogId{Family::SmallCycle, 3, 0, 0, args[0], args[1], args[2], args[3]};
        throw UnknownCatalogId(raw);
    }
    if (eat(s, "affg2v")) {
        int v;
        if (parse_int(s, v)) return CatalogId{Family::AffG2, 2, 0, v};
        throw UnknownCatalogId(raw);
    }
    struct RankedEntry { const char* prefix; Family f; };
    static const RankedEntry ranked_table[] = {
        // longest prefixes first
        {"affcala", Family::AffCalA}, {"affcalb", Family::AffCalB}, {"affcalc", Family::AffCalC},
        {"affcald", Family::AffCalD},
        {"affbprime", Family::AffBprime}, {"affcprime", Family::AffCprime},
        {"affcdprime", Family::AffCdprime},
        {"affa", Family::AffA}, {"affb", Family::AffB}, {"affc", Family::AffC}, {"affd", Family::AffD},
        {"cala", Family::CalA}, {"calb", Family::CalB}, {"cald", Family::CalD},
        {"a", Family::A}, {"b", Family::B}, {"c", Family::C}, {"d", Family::D},
    };
    for (const auto& e : ranked_table) {
        std::string t = s;
        if (eat(t, e.prefix)) {
            int rank;
            if (parse_int(t, rank)) return CatalogId{e.f, rank};
        }
    }
    throw UnknownCatalogId(raw);
}

inline bool is_gcm_family(Family f) {
    switch (f) {
        case Family::A: case Family::B: case Family::C: case Family::D:
        case Family::E6: case Family::E7: case Family::E8: case Family::F4: case Family::G2:
        case Family::AffA: case Family::AffB: case Family::AffBprime:
        case Family::AffC: case Family::AffCprime: case Family::AffCdprime:
        case Family::AffD: case Family::AffE6: case Family::AffE7: case Family::AffE8:
        case Family::AffF4: case Family::AffFprime4: case Family::AffG2: case Family::SmallCycle:
            return true;
        default:
            return false;
    }
}

inline CatalogGraph catalog(const CatalogId& id, double ratio = 1.0) {
    if (is_gcm_family(id.family)) return catalog_gcm(id);
    return catalog_egcm(id, ratio);
}

inline CatalogGraph catalog(const std::string& id, double ratio = 1.0) {
    return catalog(parse_catalog_id(id), ratio);
}

struct CatalogEntry {
    std::string id;       // example or pattern
    std::string mode;     // "gcm" or "egcm"
    std::string summary;
};

inline std::vector<CatalogEntry> catalog_list() {
    return {
        {"A<n>", "gcm", "path, n >= 1"},
        {"B<n>", "gcm", "path with (1,2) last edge, n >= 2"},
        {"C<n>", "gcm", "path with (2,1) last edge, n >= 3"},
        {"D<n>", "gcm", "path with a fork, n >= 4 (fork nodes last)"},
        {"E6 E7 E8", "gcm", "exceptional tripods"},
        {"F4", "gcm", "path of 4 with (2,1) middle edge"},
        {"G2", "gcm", "two nodes, product 3"},
        {"calA<n> calB<n> calD<n> calE6..8 calF4", "egcm", "symmetric E-Coxeter families"},
        {"H3 H4", "egcm", "pentagonal families (m=5 edge first)"},
        {"I2(m)", "egcm", "dihedral family, 4 <= m"},
        {"affA<n>", "gcm", "cycle of n+1 nodes (affA1 = double bond)"},
        {"affB<n> affBprime<n>", "gcm", "inadmissible integer B-type variants"},
        {"affC<n> affCprime<n> affCdprime<n>", "gcm", "inadmissible integer C-type variants"},
        {"affD<n> affE6..8 affF4 affFprime4", "gcm", "inadmissible integer catalogs"},
        {"affG2v1..affG2v6", "gcm", "three-node variants with a product-3 edge"},
        {"smallCycle(p1,q1,p2,q2)", "gcm", "labeled 3-cycle, unit edge between a and b"},
        {"affcalA<n> affcalB<n> affcalC<n> affcalD<n>", "egcm", "symmetric affine families"},
        {"affcalE6..8 affcalF4 affcalG2 affH3 affH4", "egcm", "symmetric affine families"},
    };
}

}  // namespace numbersgame
