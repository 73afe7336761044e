#include <doctest.h>

#include "numbersgame/json_io.hpp"

using namespace numbersgame;

TEST_CASE("graph json round trip") {
    auto b2 = catalog_gcm(parse_catalog_id("B2"));
    auto j = graph_to_json(b2);
    CHECK(j["kind"] == "gcm");
    CHECK(j["amplitudes"][1][0] == "-2");
    CHECK(gcm_from_json(j).amplitudes() == b2.amplitudes());

    auto h3 = catalog_egcm(parse_catalog_id("H3"));
    auto je = graph_to_json(h3);
    CHECK(je["kind"] == "egcm");
    CHECK(egcm_from_json(je).amplitudes() == h3.amplitudes());
}

TEST_CASE("graph json validation errors propagate") {
    json j{{"kind", "gcm"}, {"n", 2}, {"amplitudes", {{2, 1}, {1, 2}}}};
    CHECK_THROWS_AS(gcm_from_json(j), PositiveOffDiagonal);
    auto half = json::parse(R"({"kind":"gcm","n":2,"amplitudes":[["2","-1/2"],["-1","2"]]})");
    CHECK_THROWS_AS(gcm_from_json(half), NonIntegerGcmEntry);
}

TEST_CASE("position json") {
    auto pos = rational_position_from_json(json::parse("[\"1/2\", -3, \"7\"]"), 3);
    CHECK(pos[0] == Rational(1, 2));
    CHECK(pos[1] == Rational(-3));
    CHECK(position_to_json(pos)[0] == "1/2");
    CHECK_THROWS(rational_position_from_json(json::parse("[1]"), 2));
}

TEST_CASE("poset json") {
    json j{{"n", 2}, {"elements", {0, 1, 2}}, {"covers", {{0, 1, 1}, {1, 2, 2}}}};
    auto p = poset_from_json(j);
    CHECK(p.n_colors() == 2);
    CHECK(p.covers()[0].color == 0);
    CHECK(p.weight(0) == std::vector<long>{-1, 0});
    json dup{{"n", 1}, {"elements", {4, 4}}, {"covers", json::array()}};
    CHECK_THROWS(poset_from_json(dup));
}
