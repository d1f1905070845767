#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "stanley/construct.hpp"
#include "stanley/errors.hpp"
#include "stanley/oracle.hpp"

using namespace stanley;
using i64 = std::int64_t;
using vec = std::vector<i64>;

namespace {

struct Certified {
    GeneratedSequence seq;
    IndependenceCertificate cert;
};

Certified certified(const SeedSet& seed, std::size_t horizon = 512) {
    GeneratedSequence seq = generate(seed, horizon);
    auto cert = certify(seq);
    REQUIRE(cert.has_value());
    return {std::move(seq), *cert};
}

vec elements(const SeedSet& s) { return vec(s.elements().begin(), s.elements().end()); }

} // namespace

TEST_CASE("product with A={0}, k=0 is the identity on B") {
    auto a = certified(SeedSet({0}));
    const SeedSet b({0, 1, 7});
    CHECK(product(a.seq, a.cert, 0, b) == b);
}

TEST_CASE("product with A={0}, k=2, B={0,1} is the first 8 terms of S(0)") {
    auto a = certified(SeedSet({0}));
    SeedSet p = product(a.seq, a.cert, 2, SeedSet({0, 1}));
    CHECK(elements(p) == vec{0, 1, 3, 4, 9, 10, 12, 13});
}

TEST_CASE("product rejects k below kappa") {
    auto a = certified(SeedSet({0, 1, 7}));
    CHECK_THROWS_AS(product(a.seq, a.cert, 1, SeedSet({0, 1})), precondition_error);
}

TEST_CASE("product scaling factors multiply exactly") {
    auto a017 = certified(SeedSet({0, 1, 7}));
    SeedSet p = product(a017.seq, a017.cert, 2, SeedSet({0, 1, 7}));
    auto rep = oracle::validate_construction(p, 100, Triadic::make(100, 4), 512);
    CHECK(rep.pass);

    auto a09 = certified(SeedSet({0, 9}));
    SeedSet q = product(a09.seq, a09.cert, 3, SeedSet({0, 1, 7}));
    auto measured = certify(generate(q, 1024));
    REQUIRE(measured.has_value());
    CHECK(measured->alpha == Triadic::make(10, 2)); // 1 * 10/9
}

TEST_CASE("iterated {0,1,7} products reach (10/9)^n") {
    auto a = certified(SeedSet({0, 1, 7}));
    SeedSet b1 = product(a.seq, a.cert, 2, SeedSet({0, 1, 7}));
    auto c1 = certified(b1, 512);
    CHECK(c1.cert.alpha == Triadic::make(100, 4));
    SeedSet b2 = product(c1.seq, c1.cert, c1.cert.kappa, SeedSet({0, 1, 7}));
    auto c2 = certify(generate(b2, 512));
    REQUIRE(c2.has_value());
    CHECK(c2->alpha == Triadic::make(1000, 6));
}

TEST_CASE("admissible d ranges from {0}") {
    auto a = certified(SeedSet({0}));
    auto r2 = admissible_d_range(a.seq, a.cert, 2);
    CHECK(r2.low == 0);
    CHECK(r2.high == 9);
    auto r3 = admissible_d_range(a.seq, a.cert, 3);
    CHECK(r3.low == 0);
    CHECK(r3.high == 27);
    CHECK_THROWS_AS(admissible_d_range(a.seq, a.cert, 0), precondition_error);
}

TEST_CASE("adk at A={0}, k=2 matches the worked examples") {
    auto a = certified(SeedSet({0}));

    auto d0 = adk(a.seq, a.cert, 2, 0);
    CHECK(elements(d0.seed) ==
          vec{0, 1, 3, 4, 9, 10, 12, 13, 63, 64, 66, 67, 72, 73, 75, 76});
    CHECK(d0.predicted_rho == 90);
    CHECK(d0.predicted_alpha == Triadic::make(10, 2));

    auto d2 = adk(a.seq, a.cert, 2, 2);
    CHECK(elements(d2.seed) ==
          vec{0, 1, 3, 4, 9, 10, 12, 13, 61, 62, 64, 65, 70, 71, 73, 74});
    CHECK(d2.predicted_rho == 88);
    CHECK(d2.predicted_alpha == Triadic::make(88, 4));

    auto d6 = adk(a.seq, a.cert, 2, 6);
    CHECK(d6.predicted_alpha == Triadic::make(28, 3)); // 84/81 reduced

    CHECK_THROWS_AS(adk(a.seq, a.cert, 2, 10), precondition_error);
    CHECK_THROWS_AS(adk(a.seq, a.cert, 2, -1), precondition_error);
}

TEST_CASE("adk endpoints coincide with the bracketing products") {
    auto a = certified(SeedSet({0}));
    // d = 0 is the product by {0,1,7,8}.
    CHECK(adk(a.seq, a.cert, 2, 0).seed == product(a.seq, a.cert, 2, SeedSet({0, 1, 7, 8})));
    // d = c (admissible here since lambda = 0) is the product by {0,1,6,7}.
    CHECK(adk(a.seq, a.cert, 2, 9).seed == product(a.seq, a.cert, 2, SeedSet({0, 1, 6, 7})));
}

TEST_CASE("adk seeds are 3-free and certify to their predictions") {
    auto a = certified(SeedSet({0}));
    for (i64 d : {0, 2, 5, 9}) {
        auto made = adk(a.seq, a.cert, 2, d);
        CAPTURE(d);
        CHECK(is_three_free(made.seed.elements()));
        auto rep = oracle::validate_construction(made.seed, made.predicted_rho,
                                                 made.predicted_alpha, 256);
        CHECK(rep.pass);
    }
}

TEST_CASE("repeat intervals from {0}") {
    auto a = certified(SeedSet({0}));
    auto r2 = repeat_interval(a.seq, a.cert, 2);
    REQUIRE(r2.size() == 10);
    CHECK(r2.front() == 81);
    CHECK(r2.back() == 90);
    auto r3 = repeat_interval(a.seq, a.cert, 3);
    CHECK(r3.front() == 243);
    CHECK(r3.back() == 270);
}

TEST_CASE("target_scaling trivial and single-step cases") {
    auto one = target_scaling(Triadic(1));
    CHECK(one.steps.empty());
    CHECK(one.final_seed == SeedSet({0}));

    auto ten9 = target_scaling(Triadic::make(10, 2));
    CHECK(ten9.depth() == 1);
    REQUIRE(ten9.steps.size() == 1);
    CHECK(ten9.steps[0].kind == ConstructionStep::Kind::adk);
    CHECK(ten9.steps[0].d == 0);
    auto rep = oracle::validate_construction(ten9.final_seed, ten9.steps[0].predicted_rho,
                                             Triadic::make(10, 2), 512);
    CHECK(rep.pass);
}

TEST_CASE("target_scaling 28/27 is one adk step with 3^k(10-9a') = d") {
    auto chain = target_scaling(Triadic::make(28, 3));
    REQUIRE(chain.steps.size() == 1);
    const auto& step = chain.steps[0];
    CHECK(step.kind == ConstructionStep::Kind::adk);
    CHECK(step.predicted_alpha == Triadic::make(28, 3));
    // d = 3^k (10*1 - 9*28/27) = 2*3^{k-1}
    CHECK(Triadic(step.d) == Triadic(2).times_pow3(step.k - 1));
    auto rep = oracle::validate_construction(chain.final_seed, step.predicted_rho,
                                             Triadic::make(28, 3), 512);
    CHECK(rep.pass);
}

TEST_CASE("target_scaling reaches a composite target exactly") {
    ConstructionCache cache;
    auto chain = target_scaling(Triadic::make(100, 4), SearchLimits{}, &cache);
    CHECK(chain.depth() <= 8);
    auto cert = certify(generate(chain.final_seed, 1024));
    REQUIRE(cert.has_value());
    CHECK(cert->alpha == Triadic::make(100, 4));
}

TEST_CASE("target_scaling rejects targets below one") {
    CHECK_THROWS_AS(target_scaling(Triadic::make(1, 1)), precondition_error);
}

TEST_CASE("target_scaling reports unreachable targets as a resource cap") {
    SearchLimits tight;
    tight.max_depth = 1;
    CHECK_THROWS_AS(target_scaling(Triadic(2), tight), resource_error);
}

TEST_CASE("chain replay reproduces final seeds bit for bit") {
    ConstructionCache cache;
    for (const char* text : {"10/9", "28/27", "88/81", "100/81"}) {
        auto target = Triadic::parse(text);
        REQUIRE(target.has_value());
        auto chain = target_scaling(*target, SearchLimits{}, &cache);
        CAPTURE(text);
        CHECK(replay_chain(chain) == chain.final_seed);
    }
}

TEST_CASE("target_repeat base cases") {
    auto one = target_repeat(1);
    CHECK(one.steps.empty());

    auto r88 = target_repeat(88);
    REQUIRE(r88.steps.size() == 1);
    CHECK(r88.steps[0].k == 2);
    CHECK(r88.steps[0].d == 2);
    auto cert = certify(generate(r88.final_seed, 512));
    REQUIRE(cert.has_value());
    CHECK(cert->rho == 88);

    auto r85 = target_repeat(85);
    REQUIRE(r85.steps.size() == 1);
    CHECK(r85.steps[0].d == 5);
    auto cert85 = certify(generate(r85.final_seed, 512));
    REQUIRE(cert85.has_value());
    CHECK(cert85->rho == 85);
}

TEST_CASE("target_repeat reports gaps as inconclusive resource errors") {
    SearchLimits limits;
    limits.max_step_executions = 120;
    CHECK_THROWS_AS(target_repeat(100, limits), resource_error);
}

TEST_CASE("ConstructionStep predictions survive a two-step chain") {
    // Build on top of an adk result: certify it, then adk again.
    auto a = certified(SeedSet({0}));
    auto first = adk(a.seq, a.cert, 2, 2); // alpha 88/81, rho 88
    auto b = certified(first.seed, 1024);
    CHECK(b.cert.rho == 88);
    auto range = admissible_d_range(b.seq, b.cert, b.cert.kappa + 1);
    CHECK_FALSE(range.empty());
    auto second = adk(b.seq, b.cert, b.cert.kappa + 1, range.low);
    auto rep = oracle::validate_construction(second.seed, second.predicted_rho,
                                             second.predicted_alpha, 2048);
    CHECK(rep.pass);
}
