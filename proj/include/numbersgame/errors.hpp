// Error types for the numbers-game library.
#pragma once

#include <stdexcept>
#include <string>

namespace numbersgame {

struct Error : std::runtime_error {
    explicit Error(std::string code, const std::string& what)
        : std::runtime_error(what), code(std::move(code)) {}
    std::string code;
};

// graph validation
struct DiagonalNotTwo : Error {
    explicit DiagonalNotTwo(int i)
        : Error("DiagonalNotTwo", "diagonal entry at node " + std::to_string(i) + " is not 2"), i(i) {}
    int i;
};
struct PositiveOffDiagonal : Error {
    PositiveOffDiagonal(int i, int j)
        : Error("PositiveOffDiagonal",
                "positive off-diagonal entry at (" + std::to_string(i) + "," + std::to_string(j) + ")"),
          i(i), j(j) {}
    int i, j;
};
struct AsymmetricZeroPattern : Error {
    AsymmetricZeroPattern(int i, int j)
        : Error("AsymmetricZeroPattern",
                "zero pattern not symmetric at (" + std::to_string(i) + "," + std::to_string(j) + ")"),
          i(i), j(j) {}
    int i, j;
};
struct NonIntegerGcmEntry : Error {
    NonIntegerGcmEntry(int i, int j)
        : Error("NonIntegerGcmEntry",
                "non-integer entry at (" + std::to_string(i) + "," + std::to_string(j) + ") in gcm mode"),
          i(i), j(j) {}
    int i, j;
};
struct IllegalAmplitudeProduct : Error {
    IllegalAmplitudeProduct(int i, int j, double product)
        : Error("IllegalAmplitudeProduct",
                "amplitude product " + std::to_string(product) + " on edge {" + std::to_string(i) + "," +
                    std::to_string(j) + "} is not 4cos^2(pi/k) for k in 3..1000 and not >= 4"),
          i(i), j(j), product(product) {}
    int i, j;
    double product;
};
struct RankOutOfRange : Error {
    explicit RankOutOfRange(const std::string& what) : Error("RankOutOfRange", what) {}
};
struct UnknownCatalogId : Error {
    explicit UnknownCatalogId(const std::string& id) : Error("UnknownCatalogId", "unknown catalog id: " + id) {}
};
struct EmptySubset : Error {
    EmptySubset() : Error("EmptySubset", "induced subgraph requires a nonempty node subset") {}
};

// engine
struct IllegalFiring : Error {
    explicit IllegalFiring(int node)
        : Error("IllegalFiring", "node " + std::to_string(node) + " is not strictly positive"), node(node) {}
    int node;
};
struct IllegalFiringAt : Error {
    IllegalFiringAt(int step, int node)
        : Error("IllegalFiringAt",
                "illegal firing of node " + std::to_string(node) + " at step " + std::to_string(step)),
          step(step), node(node) {}
    int step, node;
};
struct NotATree : Error {
    NotATree() : Error("NotATree", "graph is not a connected acyclic graph") {}
};
struct NotSubcritical : Error {
    NotSubcritical() : Error("NotSubcritical", "spectral radius of the firing matrix is not below 2") {}
};

// spectral
struct NotConnected : Error {
    NotConnected() : Error("NotConnected", "operation requires a connected graph") {}
};
struct NoConvergence : Error {
    explicit NoConvergence(long limit)
        : Error("NoConvergence", "power iteration did not converge within " + std::to_string(limit) + " steps") {}
};
struct NotACycle : Error {
    NotACycle() : Error("NotACycle", "graph is not a single cycle") {}
};

// classify / coxeter
struct BudgetExceeded : Error {
    explicit BudgetExceeded(const std::string& what) : Error("BudgetExceeded", what) {}
};
struct NotFiniteType : Error {
    NotFiniteType() : Error("NotFiniteType", "graph does not classify as finite type") {}
};
struct CapExceeded : Error {
    explicit CapExceeded(long cap)
        : Error("CapExceeded", "orbit enumeration exceeded cap " + std::to_string(cap) +
                                   " although classification says finite"),
          cap(cap) {}
    long cap;
};
struct DedupCollision : Error {
    explicit DedupCollision(const std::string& what) : Error("DedupCollision", what) {}
};

// poset
struct CycleDetected : Error {
    CycleDetected() : Error("CycleDetected", "cover relation contains a directed cycle") {}
};
struct NotRanked : Error {
    NotRanked(int s, int t)
        : Error("NotRanked", "no rank function: witness cover " + std::to_string(s) + " -> " + std::to_string(t)),
          s(s), t(t) {}
    int s, t;
};
struct ColorOutOfRange : Error {
    explicit ColorOutOfRange(int color)
        : Error("ColorOutOfRange", "edge color " + std::to_string(color) + " outside declared index set"),
          color(color) {}
    int color;
};
struct ComponentNotRanked : Error {
    explicit ComponentNotRanked(int color)
        : Error("ComponentNotRanked", "a color-" + std::to_string(color) + " component is not ranked"),
          color(color) {}
    int color;
};
struct IndexMismatch : Error {
    IndexMismatch(int poset_n, int graph_n)
        : Error("IndexMismatch", "poset colored by " + std::to_string(poset_n) + " colors but graph has " +
                                     std::to_string(graph_n) + " nodes") {}
};
struct StructureNotVerified : Error {
    explicit StructureNotVerified(const std::string& what) : Error("StructureNotVerified", what) {}
};
struct DescentFailed : Error {
    explicit DescentFailed(int step)
        : Error("DescentFailed", "no mirrored-rank element at descent step " + std::to_string(step)), step(step) {}
    int step;
};

}  // namespace numbersgame
