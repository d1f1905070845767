#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "stanley/errors.hpp"
#include "stanley/rng.hpp"
#include "stanley/seed_set.hpp"

using namespace stanley;
using i64 = std::int64_t;
using vec = std::vector<i64>;

namespace {

// Exhaustive pair scan, independent of the binary-search path in covered_by.
bool covered_brute(i64 x, const vec& set) {
    for (std::size_t i = 0; i < set.size(); ++i)
        for (std::size_t j = i + 1; j < set.size(); ++j)
            if (set[j] < x && 2 * set[j] - set[i] == x) return true;
    return false;
}

} // namespace

TEST_CASE("is_three_free on known sets") {
    CHECK(is_three_free(vec{0, 1, 3, 4}));
    CHECK_FALSE(is_three_free(vec{0, 1, 2}));
    CHECK(is_three_free(vec{0, 1, 7, 8, 10}));
    CHECK_FALSE(is_three_free(vec{0, 4, 8}));
    CHECK(is_three_free(vec{0}));
    CHECK(is_three_free(vec{}));
}

TEST_CASE("is_three_free rejects malformed input") {
    CHECK_THROWS_AS(is_three_free(vec{1, 0}), input_error);
    CHECK_THROWS_AS(is_three_free(vec{0, 0, 1}), input_error);
    CHECK_THROWS_AS(is_three_free(vec{-1, 0, 1}), input_error);
}

TEST_CASE("covered_by examples") {
    CHECK(covered_by(2, vec{0, 1}));
    CHECK(covered_by(9, vec{0, 1, 7, 8}));
    CHECK_FALSE(covered_by(8, vec{0, 1, 7}));
    CHECK_FALSE(covered_by(0, vec{}));
}

TEST_CASE("jointly_covered is ordered") {
    CHECK(jointly_covered(4, vec{0}, vec{2}));
    CHECK_FALSE(jointly_covered(4, vec{2}, vec{0}));
    CHECK(jointly_covered(23, vec{1}, vec{12}));
}

TEST_CASE("covered_by matches brute force and equals self-joint coverage") {
    SplitMix64 rng(0xc0ffee);
    for (int trial = 0; trial < 200; ++trial) {
        vec set;
        i64 v = static_cast<i64>(rng.below(4));
        while (set.size() < 12) {
            set.push_back(v);
            v += 1 + static_cast<i64>(rng.below(9));
        }
        for (i64 x = -2; x < set.back() + 12; ++x) {
            const bool brute = covered_brute(x, set);
            CHECK(covered_by(x, set) == brute);
            CHECK(jointly_covered(x, set, set) == brute);
        }
    }
}

TEST_CASE("jointly_covered handles negative translated sets") {
    // Translated blocks may dip below zero; the pair logic must not assume
    // nonnegative values.
    vec s{-7, -3, 2};
    vec t{-5, 1, 4};
    // y=-7, z=-5 -> 2z-y = -3
    CHECK(jointly_covered(-3, s, t));
    CHECK_FALSE(jointly_covered(-6, s, t));
}

TEST_CASE("SeedSet validation") {
    CHECK_NOTHROW(SeedSet({0}));
    CHECK_NOTHROW(SeedSet({0, 1, 7}));
    CHECK_THROWS_AS(SeedSet(vec{}), input_error);
    CHECK_THROWS_AS(SeedSet(vec{1, 2}), input_error);
    CHECK_THROWS_AS(SeedSet(vec{0, 1, 2}), input_error);
    CHECK_THROWS_AS(SeedSet(vec{0, 2, 1}), input_error);
}

TEST_CASE("SeedSet parse round trip") {
    SeedSet s = SeedSet::parse("0,1,7");
    CHECK(s.elements()[2] == 7);
    CHECK(s.str() == "0,1,7");
    CHECK_THROWS_AS(SeedSet::parse("0,x"), input_error);
    CHECK_THROWS_AS(SeedSet::parse(""), input_error);
}
