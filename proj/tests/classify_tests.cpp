#include <doctest.h>

#include <string>
#include <vector>

#include "numbersgame/catalog.hpp"
#include "numbersgame/classify.hpp"

using namespace numbersgame;

TEST_CASE("recognizer names every finite catalog entry") {
    for (const char* id : {"A1", "A2", "A7", "B2", "B5", "C3", "C6", "D4", "D7", "E6", "E7", "E8",
                           "F4", "G2"}) {
        auto rec = recognize(catalog_gcm(parse_catalog_id(id)));
        CHECK(rec.admissible);
        REQUIRE(rec.components.size() == 1);
        CHECK(rec.components[0].name == id);
    }
    for (const char* id : {"calA1", "calA5", "calB3", "calB6", "calD4", "calE6", "calE7", "calE8",
                           "calF4", "H3", "H4", "I2(4)", "I2(5)", "I2(11)"}) {
        auto rec = recognize(catalog_egcm(parse_catalog_id(id)));
        CHECK(rec.admissible);
        CHECK(rec.components[0].name == id);
    }
    // recognition sees through asymmetric amplitude splits
    auto rec = recognize(catalog_egcm(parse_catalog_id("H3"), 1.3));
    CHECK(rec.components[0].name == "H3");
}

TEST_CASE("recognizer rejects every inadmissible catalog entry") {
    for (const char* id : {"affA1", "affA3", "affB3", "affBprime2", "affC2", "affCprime4",
                           "affCdprime3", "affD5", "affE6", "affE7", "affE8", "affF4", "affFprime4",
                           "affG2v1", "affG2v2", "affG2v3", "affG2v4", "affG2v5", "affG2v6",
                           "smallCycle(1,2,1,1)", "smallCycle(3,1,2,2)"})
        CHECK_FALSE(recognize(catalog_gcm(parse_catalog_id(id))).all_finite);
    for (const char* id : {"affcalA2", "affcalB3", "affcalC2", "affcalD4", "affcalE6", "affcalE7",
                           "affcalE8", "affcalF4", "affcalG2", "affH3", "affH4"})
        CHECK_FALSE(recognize(catalog_egcm(parse_catalog_id(id))).all_finite);
}

TEST_CASE("disconnected graphs are never admissible") {
    std::vector<Rational> m{Rational(2), Rational(0), Rational(0), Rational(2)};
    auto g = GcmGraph::validate(2, std::move(m));
    auto rec = recognize(g);
    CHECK(rec.all_finite);
    CHECK_FALSE(rec.connected);
    CHECK_FALSE(rec.admissible);
    CHECK(longest_length(rec) == 2);  // two A1 factors
}

TEST_CASE("longest element lengths") {
    CHECK(longest_length(Family::A, 4) == 10);
    CHECK(longest_length(Family::B, 2) == 4);
    CHECK(longest_length(Family::C, 5) == 25);
    CHECK(longest_length(Family::D, 4) == 12);
    CHECK(longest_length(Family::E8, 8) == 120);
    CHECK(longest_length(Family::F4, 4) == 24);
    CHECK(longest_length(Family::G2, 2) == 6);
    CHECK(longest_length(Family::CalH3, 3) == 15);
    CHECK(longest_length(Family::CalH4, 4) == 60);
    CHECK(longest_length(Family::CalI2, 2, 9) == 9);
    CHECK_THROWS_AS(longest_length(recognize(catalog_gcm(parse_catalog_id("affA2")))), NotFiniteType);
}

TEST_CASE("cross validation agrees structurally and spectrally") {
    for (const char* id : {"A5", "B4", "E7", "G2", "affA2", "affG2v3", "affE8",
                           "smallCycle(1,1,2,1)"}) {
        for (const auto& cv : cross_validate(catalog_gcm(parse_catalog_id(id)))) CHECK(cv.agree);
    }
    for (const char* id : {"H4", "I2(7)", "affcalC3", "affH3"}) {
        for (const auto& cv : cross_validate(catalog_egcm(parse_catalog_id(id)))) CHECK(cv.agree);
    }
}
