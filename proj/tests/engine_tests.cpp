#include <doctest.h>

#include <random>

#include "numbersgame/catalog.hpp"
#include "numbersgame/classify.hpp"
#include "numbersgame/engine.hpp"

using namespace numbersgame;

namespace {

Position<Rational> rat(std::vector<long> v) {
    Position<Rational> out;
    for (long x : v) out.emplace_back(x);
    return out;
}

}  // namespace

TEST_CASE("firing flips the fired node and pushes along edges") {
    auto b2 = catalog_gcm(parse_catalog_id("B2"));
    auto pos = fire(b2, rat({1, 1}), 0);
    CHECK(pos == rat({-1, 2}));
    CHECK_THROWS_AS(fire(b2, pos, 0), IllegalFiring);
    CHECK(legal_moves(b2, pos) == std::vector<int>{1});
}

TEST_CASE("both maximal B2 games from (1,1)") {
    auto b2 = catalog_gcm(parse_catalog_id("B2"));
    std::vector<Position<Rational>> left{rat({1, 1}), rat({-1, 2}), rat({3, -2}), rat({-3, 1}),
                                         rat({-1, -1})};
    std::vector<Position<Rational>> right{rat({1, 1}), rat({3, -1}), rat({-3, 2}), rat({1, -2}),
                                          rat({-1, -1})};
    std::vector<int> fire_left{0, 1, 0, 1}, fire_right{1, 0, 1, 0};
    for (int game = 0; game < 2; ++game) {
        const auto& steps = game == 0 ? left : right;
        const auto& seq = game == 0 ? fire_left : fire_right;
        auto pos = steps[0];
        for (int k = 0; k < 4; ++k) {
            fire_in_place(b2, pos, seq[k]);
            CHECK(pos == steps[k + 1]);
        }
        CHECK(is_terminal(b2, pos));
    }
}

TEST_CASE("play with the lowest policy") {
    auto b2 = catalog_gcm(parse_catalog_id("B2"));
    PlayOptions opt;
    auto res = play(b2, rat({1, 1}), opt);
    CHECK(res.status == PlayStatus::Converged);
    CHECK(res.steps == 4);
    CHECK(res.final_position == rat({-1, -1}));
    CHECK(res.firing_sequence == std::vector<int>{0, 1, 0, 1});
}

TEST_CASE("play reports divergence with a certificate") {
    auto aff = catalog_gcm(parse_catalog_id("affA1"));
    PlayOptions opt;
    auto res = play(aff, rat({1, 0}), opt);
    CHECK(res.status == PlayStatus::Diverged);
    REQUIRE(res.certificate.has_value());
    CHECK(res.certificate->pairing > 0.0);

    // without certification the game hits the limit, then certifies
    opt.certify = false;
    opt.limit = 50;
    auto blind = play(aff, rat({1, 0}), opt);
    CHECK(blind.status == PlayStatus::LimitReached);
    CHECK(blind.steps == 50);
}

TEST_CASE("replay legality") {
    auto a2 = catalog_gcm(parse_catalog_id("A2"));
    auto pos = replay(a2, rat({1, 1}), {0, 1, 0});
    CHECK(pos == rat({-1, -1}));
    CHECK_THROWS_AS(replay(a2, rat({1, 1}), {0, 0}), IllegalFiringAt);
    CHECK_FALSE(try_replay(a2, rat({1, 1}), {0, 0}).has_value());
    CHECK_FALSE(try_replay(a2, rat({1, 1}), {5}).has_value());
}

TEST_CASE("strong convergence across random policies") {
    auto d4 = catalog_gcm(parse_catalog_id("D4"));
    PlayOptions opt;
    auto ref = play(d4, rat({2, 1, 3, 1}), opt);
    REQUIRE(ref.status == PlayStatus::Converged);
    for (unsigned long seed = 0; seed < 20; ++seed) {
        auto res = play(d4, rat({2, 1, 3, 1}), opt, random_policy(seed));
        CHECK(res.status == PlayStatus::Converged);
        CHECK(res.steps == ref.steps);
        CHECK(res.final_position == ref.final_position);
    }
}

TEST_CASE("conserved form on B2 matches the hand computation") {
    auto b2 = catalog_gcm(parse_catalog_id("B2"));
    auto cf = conserved_form(b2);
    CHECK(cf.D == std::vector<Rational>{Rational(1), Rational(2)});
    CHECK(cf.Q == std::vector<Rational>{Rational(-1), Rational(-1), Rational(-1), Rational(-2)});
    // symmetric, and -Q positive definite on this subcritical tree
    CHECK(cf.Q[1] == cf.Q[2]);
    CHECK(cf.evaluate(rat({1, 0})) == Rational(-1));

    auto a1 = catalog_gcm(parse_catalog_id("A1"));
    CHECK(conserved_form(a1).Q == std::vector<Rational>{Rational(-1, 2)});
}

TEST_CASE("conserved form is invariant along games") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> coef(1, 9);
    for (const char* id : {"A4", "B3", "D4", "G2"}) {
        auto g = catalog_gcm(parse_catalog_id(id));
        auto cf = conserved_form(g);
        Position<Rational> start;
        for (int i = 0; i < g.n(); ++i) start.emplace_back(coef(rng));
        Rational q0 = cf.evaluate(start);
        auto pos = start;
        while (!is_terminal(g, pos)) {
            fire_in_place(g, pos, legal_moves(g, pos).front());
            CHECK(cf.evaluate(pos) == q0);
        }
    }
}

TEST_CASE("conserved form requires a tree") {
    CHECK_THROWS_AS(conserved_form(catalog_gcm(parse_catalog_id("affA2"))), NotATree);
}
