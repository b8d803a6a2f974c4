#include <doctest.h>

#include <cmath>
#include <map>
#include <set>

#include "mopkit/generate.hpp"
#include "oracles.hpp"

using namespace mopkit;

TEST_CASE("enumeration counts match the recursive oracle")
{
    CHECK(enumerate_mops(3).size() == 1);
    CHECK(enumerate_mops(5).size() == 5);
    CHECK(enumerate_mops(6).size() == 14);
    for (int n = 3; n <= 11; ++n) {
        const auto all = enumerate_mops(n);
        CHECK(all.size() == oracle::catalan_polygons(n));
        std::set<std::vector<Edge>> distinct;
        for (const Mop& m : all) distinct.insert(m.diagonals());
        CHECK(distinct.size() == all.size());
    }
}

TEST_CASE("enumeration order starts from the apex on {0, n-1}")
{
    const auto all = enumerate_mops(5);
    // Apex 1 first: the rest is the quadrilateral 1..4.
    CHECK(all.front().is_diagonal({1, 4}));
    CHECK(all.back().is_diagonal({0, 3}));
    CHECK(enumerate_mops(5) == all);
}

TEST_CASE("enumeration bounds")
{
    CHECK_THROWS_AS(enumerate_mops(2), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_mops(14), std::invalid_argument);
    CHECK(enumerate_mops(7, 7).size() == 42);
}

TEST_CASE("random mops are valid and deterministic")
{
    CHECK_THROWS_AS(random_mop(2, Seed{1}), std::invalid_argument);
    for (std::uint64_t s = 0; s < 50; ++s) {
        const Mop m = random_mop(40, Seed{s});
        CHECK_FALSE(validate(m.order(), m.diagonals()));
        CHECK(random_mop(40, Seed{s}) == m);
    }
    CHECK(random_mop(3, Seed{9}).diagonals().empty());
}

TEST_CASE("random mops of order 6 are uniform")
{
    constexpr int kSamples = 14000;
    const auto all = enumerate_mops(6);
    std::map<std::vector<Edge>, int> hits;
    for (const Mop& m : all) hits[m.diagonals()] = 0;
    for (int i = 0; i < kSamples; ++i) {
        const Mop m = random_mop(6, Seed{static_cast<std::uint64_t>(i) * 7919 + 13});
        REQUIRE(hits.count(m.diagonals()) == 1);
        ++hits[m.diagonals()];
    }
    const double p = 1.0 / 14;
    const double sigma = std::sqrt(kSamples * p * (1 - p));
    for (const auto& [diagonals, count] : hits) CHECK(std::abs(count - kSamples * p) <= 3 * sigma);
}

TEST_CASE("family shapes")
{
    struct Case
    {
        Family f;
        int param, n, n2;
    };
    const Case cases[] = {
        {Family::Gt, 4, 20, 4},      {Family::Ht, 4, 20, 8},  {Family::Bt, 2, 30, 10},
        {Family::A15, 0, 15, 5},     {Family::Gt, 2, 10, 2},  {Family::Ht, 3, 15, 6},
        {Family::MaxDeg2, 5, 10, 5}, {Family::MinDeg2, 9, 9, 2}, {Family::Fan, 7, 7, 2},
    };
    for (const Case& c : cases) {
        CAPTURE(family_name(c.f));
        CAPTURE(c.param);
        const Mop m = build_family({c.f, c.param});
        CHECK_FALSE(validate(m.order(), m.diagonals()));
        CHECK(m.order() == c.n);
        CHECK(static_cast<int>(degree_two_vertices(m).size()) == c.n2);
        const auto shape = expected_shape({c.f, c.param});
        REQUIRE(shape);
        CHECK(shape->n == c.n);
        CHECK(shape->n2 == c.n2);
    }
}

TEST_CASE("every family instance matches its stated shape")
{
    for (Family f : {Family::Fan, Family::Gt, Family::Ht, Family::A15, Family::Bt, Family::MaxDeg2, Family::MinDeg2}) {
        for (int p = 2; p <= 9; ++p) {
            const FamilySpec spec{f, p};
            Mop m = fan(3);
            try {
                m = build_family(spec);
            } catch (const std::invalid_argument&) {
                continue;
            }
            const auto shape = expected_shape(spec);
            REQUIRE(shape);
            CHECK(m.order() == shape->n);
            CHECK(static_cast<int>(degree_two_vertices(m).size()) == shape->n2);
        }
    }
}

TEST_CASE("family parameter ranges")
{
    CHECK_THROWS_AS(build_family({Family::Fan, 2}), std::invalid_argument);
    CHECK_THROWS_AS(build_family({Family::Gt, 1}), std::invalid_argument);
    CHECK_THROWS_AS(build_family({Family::Ht, 1}), std::invalid_argument);
    CHECK_THROWS_AS(build_family({Family::Bt, 1}), std::invalid_argument);
    CHECK_THROWS_AS(build_family({Family::MaxDeg2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(build_family({Family::MinDeg2, 3}), std::invalid_argument);
    CHECK(parse_family("Ht") == Family::Ht);
    CHECK_FALSE(parse_family("ht"));
    CHECK(family_name(Family::MaxDeg2) == "MaxDeg2");
}

TEST_CASE("sharpness families reach both ends of the degree-2 range")
{
    for (int p = 3; p <= 8; ++p) {
        const Mop m = build_family({Family::MaxDeg2, p});
        CHECK(2 * static_cast<int>(degree_two_vertices(m).size()) == m.order());
    }
    for (int n = 4; n <= 16; ++n) CHECK(degree_two_vertices(build_family({Family::MinDeg2, n})).size() == 2);
}
