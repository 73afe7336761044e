#include <doctest.h>

#include "numbersgame/catalog.hpp"
#include "numbersgame/graph.hpp"

using namespace numbersgame;

namespace {

GcmGraph gcm(int n, std::vector<long> entries) {
    std::vector<Rational> m;
    for (long v : entries) m.emplace_back(v);
    return GcmGraph::validate(n, std::move(m));
}

}  // namespace

TEST_CASE("validation rejects malformed matrices") {
    CHECK_THROWS_AS(gcm(2, {1, -1, -1, 2}), DiagonalNotTwo);
    CHECK_THROWS_AS(gcm(2, {2, 1, -1, 2}), PositiveOffDiagonal);
    CHECK_THROWS_AS(gcm(2, {2, -1, 0, 2}), AsymmetricZeroPattern);
    CHECK_THROWS_AS(GcmGraph::validate(2, {Rational(2), Rational(-1, 2), Rational(-2), Rational(2)}),
                    NonIntegerGcmEntry);
    // product 3.5 is neither >= 4 nor on the 4cos^2(pi/k) ladder
    CHECK_THROWS_AS(EgcmGraph::validate(2, {2.0, -3.5, -1.0, 2.0}), IllegalAmplitudeProduct);
    CHECK_NOTHROW(EgcmGraph::validate(2, {2.0, -4.5, -1.0, 2.0}));
}

TEST_CASE("edges, components, induced subgraphs") {
    auto b3 = catalog_gcm(parse_catalog_id("B3"));
    CHECK(b3.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
    CHECK(b3.connected());
    CHECK(b3.is_tree());

    auto sub = b3.induced_subgraph({1, 2});
    auto b2 = catalog_gcm(parse_catalog_id("B2"));
    CHECK(sub.amplitudes() == b2.amplitudes());

    auto two = gcm(2, {2, 0, 0, 2});
    CHECK(two.connected_components().size() == 2);
    CHECK_FALSE(two.connected());
    CHECK_THROWS_AS(two.induced_subgraph({}), EmptySubset);
}

TEST_CASE("coxeter labels") {
    CHECK(catalog_gcm(parse_catalog_id("A2")).coxeter_label(0, 1) == 3);
    CHECK(catalog_gcm(parse_catalog_id("B2")).coxeter_label(0, 1) == 4);
    CHECK(catalog_gcm(parse_catalog_id("G2")).coxeter_label(0, 1) == 6);
    CHECK(catalog_gcm(parse_catalog_id("affA1")).coxeter_label(0, 1) == kInfiniteLabel);
    CHECK(gcm(2, {2, 0, 0, 2}).coxeter_label(0, 1) == 2);

    auto i27 = catalog_egcm(parse_catalog_id("I2(7)"));
    CHECK(i27.coxeter_label(0, 1) == 7);
    CHECK(i27.coxeter_label(1, 0) == 7);
    // labels survive an asymmetric amplitude split
    auto skew = catalog_egcm(parse_catalog_id("I2(7)"), 1.7);
    CHECK(skew.coxeter_label(0, 1) == 7);
}

TEST_CASE("tree and cycle predicates") {
    CHECK(catalog_gcm(parse_catalog_id("D4")).is_tree());
    auto cyc = catalog_gcm(parse_catalog_id("affA2"));
    CHECK(cyc.is_cycle());
    CHECK_FALSE(cyc.is_tree());
    CHECK_FALSE(catalog_gcm(parse_catalog_id("A3")).is_cycle());
}

TEST_CASE("gcm to approx conversion") {
    auto g = to_approx(catalog_gcm(parse_catalog_id("G2")));
    CHECK(g.kind() == Kind::Egcm);
    CHECK(g.coxeter_label(0, 1) == 6);
}
