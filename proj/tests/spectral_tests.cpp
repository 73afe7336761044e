#include <doctest.h>

#include <cmath>

#include "numbersgame/catalog.hpp"
#include "numbersgame/engine.hpp"
#include "numbersgame/spectral.hpp"

using namespace numbersgame;

TEST_CASE("firing matrix") {
    auto a = firing_matrix(catalog_gcm(parse_catalog_id("B2")));
    CHECK(a == std::vector<Rational>{Rational(0), Rational(1), Rational(2), Rational(0)});
}

TEST_CASE("exact trichotomy on the integer catalogs") {
    for (const char* id : {"A1", "A5", "B2", "B6", "C3", "D4", "E6", "E7", "E8", "F4", "G2"})
        CHECK(trichotomy(catalog_gcm(parse_catalog_id(id))) == Trichotomy::SubCritical);
    for (const char* id : {"affA1", "affA4", "affB3", "affBprime2", "affC2", "affC5", "affCprime3",
                           "affCdprime3", "affD4", "affE6", "affE7", "affE8", "affF4", "affFprime4",
                           "affG2v1", "affG2v4"})
        CHECK(trichotomy(catalog_gcm(parse_catalog_id(id))) == Trichotomy::Critical);
    for (const char* id : {"affG2v2", "affG2v3", "affG2v5", "affG2v6", "smallCycle(1,2,1,1)",
                           "smallCycle(2,2,1,1)", "smallCycle(3,3,3,3)"})
        CHECK(trichotomy(catalog_gcm(parse_catalog_id(id))) == Trichotomy::SuperCritical);
}

TEST_CASE("trichotomy handles disconnected graphs by worst component") {
    // A1 plus an affA1 component
    std::vector<Rational> m{Rational(2), Rational(0),  Rational(0),
                            Rational(0), Rational(2),  Rational(-2),
                            Rational(0), Rational(-2), Rational(2)};
    auto g = GcmGraph::validate(3, std::move(m));
    auto comps = classify_components(g);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].cls == Trichotomy::SubCritical);
    CHECK(comps[1].cls == Trichotomy::Critical);
    CHECK(trichotomy(g) == Trichotomy::Critical);
    CHECK_THROWS_AS(perron(g), NotConnected);
}

TEST_CASE("integer-valued approx graphs use the exact override") {
    auto g = to_approx(catalog_gcm(parse_catalog_id("affF4")));
    auto comps = classify_components(g);
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].exact);
    CHECK(comps[0].cls == Trichotomy::Critical);
    CHECK(comps[0].perron.rho == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("perron data on small graphs") {
    auto a2 = perron(catalog_gcm(parse_catalog_id("A2")));
    CHECK(a2.rho == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(a2.vec[0] == doctest::Approx(1.0));
    CHECK(a2.vec[1] == doctest::Approx(1.0));
    auto g2 = perron(catalog_gcm(parse_catalog_id("G2")));
    CHECK(g2.rho == doctest::Approx(std::sqrt(3.0)).epsilon(1e-10));
    auto v3 = perron(catalog_gcm(parse_catalog_id("affG2v3")));
    CHECK(v3.rho == doctest::Approx(std::sqrt(6.0)).epsilon(1e-10));
    auto one = perron(catalog_gcm(parse_catalog_id("A1")));
    CHECK(one.rho == 0.0);
    CHECK(one.vec == std::vector<double>{1.0});
}

TEST_CASE("affine marks: spot checks") {
    auto f4 = perron(catalog_egcm(parse_catalog_id("affcalF4")));
    std::vector<double> marks{2, 4, 3 * std::sqrt(2.0), 2 * std::sqrt(2.0), std::sqrt(2.0)};
    CHECK(f4.rho == doctest::Approx(2.0).epsilon(1e-9));
    for (int i = 0; i < 5; ++i)
        CHECK(f4.vec[i] == doctest::Approx(marks[i] / marks[2]).epsilon(1e-8));
    auto b4 = perron(catalog_egcm(parse_catalog_id("affcalB4")));
    std::vector<double> bm{1, 1, 2, 2, std::sqrt(2.0)};
    for (int i = 0; i < 5; ++i) CHECK(b4.vec[i] == doctest::Approx(bm[i] / 2.0).epsilon(1e-8));
    for (const char* id : {"affH3", "affH4"})
        CHECK(trichotomy(catalog_egcm(parse_catalog_id(id))) == Trichotomy::SuperCritical);
}

TEST_CASE("divergence certificates") {
    auto e8 = catalog_gcm(parse_catalog_id("affE8"));
    Position<Rational> omega1(e8.n(), Rational(0));
    omega1[0] = 1;
    auto cert = certify_divergence(e8, omega1);
    REQUIRE(cert.has_value());
    CHECK(cert->rho == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(cert->pairing > 0.0);
    CHECK(cert->nodes.size() == 9);

    auto a2 = catalog_gcm(parse_catalog_id("A2"));
    Position<Rational> ones(2, Rational(1));
    CHECK_FALSE(certify_divergence(a2, ones).has_value());

    // nonpositive pairing on a critical component yields no certificate
    Position<Rational> neg(e8.n(), Rational(-1));
    CHECK_FALSE(certify_divergence(e8, neg).has_value());
}

TEST_CASE("cycle characteristic polynomial shift") {
    CHECK(cycle_charpoly_shift(catalog_gcm(parse_catalog_id("affA2"))) ==
          doctest::Approx(0.0).epsilon(1e-12));
    // smallCycle(1,2,1,1): forward product 2, backward product 1
    auto sc = catalog_gcm(parse_catalog_id("smallCycle(1,2,1,1)"));
    CHECK(cycle_charpoly_shift(sc) == doctest::Approx(2.0 * std::sqrt(2.0) - 3.0).epsilon(1e-12));
    CHECK(cycle_charpoly_shift(sc) <= 0.0);
    CHECK_THROWS_AS(cycle_charpoly_shift(catalog_gcm(parse_catalog_id("A3"))), NotACycle);
}
