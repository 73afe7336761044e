#include <doctest.h>

#include "numbersgame/catalog.hpp"
#include "numbersgame/poset.hpp"

using namespace numbersgame;

namespace {

// x0 -1-> x1 -2-> x2, the rank-2 chain carrying an A2 M-structure
EdgeColoredPoset a2_chain() {
    return EdgeColoredPoset::validate(2, {0, 1, 2}, {{0, 1, 0}, {1, 2, 1}});
}

}  // namespace

TEST_CASE("validate computes ranks and rejects bad input") {
    auto p = a2_chain();
    CHECK(p.rank(0) == 0);
    CHECK(p.rank(2) == 2);
    CHECK(p.top_rank() == 2);
    CHECK_THROWS_AS(EdgeColoredPoset::validate(2, {0, 1}, {{0, 1, 0}, {1, 0, 1}}), CycleDetected);
    CHECK_THROWS_AS(EdgeColoredPoset::validate(2, {0, 1}, {{0, 1, 5}}), ColorOutOfRange);
    // N-shape plus a rank-skipping direct cover
    CHECK_THROWS_AS(EdgeColoredPoset::validate(
                        1, {0, 1, 2, 3},
                        {{0, 1, 0}, {0, 2, 0}, {2, 3, 0}, {1, 3, 0}, {0, 3, 0}}),
                    NotRanked);
    // a transitive edge always breaks the rank function
    CHECK_THROWS_AS(EdgeColoredPoset::validate(1, {0, 1, 2}, {{0, 1, 0}, {1, 2, 0}, {0, 2, 0}}),
                    NotRanked);
}

TEST_CASE("color components") {
    auto p = a2_chain();
    CHECK(p.i_components(0) == std::vector<std::vector<int>>{{0, 1}, {2}});
    CHECK(p.i_components(1) == std::vector<std::vector<int>>{{0}, {1, 2}});
    CHECK(p.j_components({0, 1}) == std::vector<std::vector<int>>{{0, 1, 2}});
    CHECK(p.j_components({}) == std::vector<std::vector<int>>{{0}, {1}, {2}});
}

TEST_CASE("weights on the A2 chain") {
    auto p = a2_chain();
    CHECK(p.weight(0) == std::vector<long>{-1, 0});
    CHECK(p.weight(1) == std::vector<long>{1, -1});
    CHECK(p.weight(2) == std::vector<long>{0, 1});
    // parity invariant: m_i(x) and l_i(x) have the same parity
    for (int x = 0; x < 3; ++x)
        for (int i = 0; i < 2; ++i) {
            for (const auto& comp : p.i_components(i)) {
                if (std::find(comp.begin(), comp.end(), x) == comp.end()) continue;
                long l = static_cast<long>(comp.size()) - 1;
                CHECK(((p.weight(x)[i] - l) % 2) == 0);
            }
        }
}

TEST_CASE("m-structure check on the A2 chain") {
    auto g = catalog_gcm(parse_catalog_id("A2"));
    auto rep = check_m_structure(a2_chain(), g);
    CHECK(rep.ok);
    CHECK(rep.fully_surjective);
    CHECK(rep.sufficiently_surjective);
    CHECK(rep.colors_used == std::vector<int>{0, 1});

    // recoloring both edges to color 1 violates at both edges
    auto both1 = EdgeColoredPoset::validate(2, {0, 1, 2}, {{0, 1, 0}, {1, 2, 0}});
    auto bad = check_m_structure(both1, g);
    CHECK_FALSE(bad.ok);
    CHECK(bad.violations.size() == 2);
    CHECK_FALSE(bad.fully_surjective);

    // deleting the second cover leaves one localized violation
    auto cut = EdgeColoredPoset::validate(2, {0, 1, 2}, {{0, 1, 0}});
    auto cut_rep = check_m_structure(cut, g);
    CHECK_FALSE(cut_rep.ok);
    REQUIRE(cut_rep.violations.size() == 1);
    CHECK(cut_rep.violations[0].s == 0);
    CHECK(cut_rep.violations[0].t == 1);
    CHECK(cut_rep.violations[0].expected == std::vector<long>{1, -1});
    CHECK(cut_rep.violations[0].actual == std::vector<long>{1, 0});

    CHECK_THROWS_AS(check_m_structure(a2_chain(), catalog_gcm(parse_catalog_id("A3"))),
                    IndexMismatch);
}

TEST_CASE("finite type inference with descent") {
    auto g = catalog_gcm(parse_catalog_id("A2"));
    auto inf = infer_finite_type(a2_chain(), g);
    CHECK(inf.classification.admissible);
    CHECK(inf.classification.components[0].name == "A2");
    CHECK(inf.descent_chain == std::vector<int>{2, 1, 0});
    CHECK(inf.fired_colors == std::vector<int>{1, 0});
}

TEST_CASE("inference on an A1 chain") {
    auto p = EdgeColoredPoset::validate(1, {0, 1, 2}, {{0, 1, 0}, {1, 2, 0}});
    auto g = catalog_gcm(parse_catalog_id("A1"));
    CHECK(p.weight(2) == std::vector<long>{2});
    auto inf = infer_finite_type(p, g);
    CHECK(inf.classification.components[0].name == "A1");
    CHECK(inf.descent_chain.front() == 2);
    CHECK(inf.descent_chain.back() == 0);
}

TEST_CASE("inference demands sufficient surjectivity") {
    // chain colored only with color 1 against a two-component graph
    std::vector<Rational> m{Rational(2), Rational(0), Rational(0), Rational(2)};
    auto g = GcmGraph::validate(2, std::move(m));
    auto p = EdgeColoredPoset::validate(2, {0, 1, 2}, {{0, 1, 0}, {1, 2, 0}});
    auto rep = check_m_structure(p, g);
    CHECK(rep.ok);
    CHECK_FALSE(rep.sufficiently_surjective);
    CHECK_THROWS_AS(infer_finite_type(p, g), StructureNotVerified);
}
