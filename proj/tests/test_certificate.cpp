#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "stanley/certificate.hpp"
#include "stanley/errors.hpp"

using namespace stanley;

TEST_CASE("check_independence_at on S(0)") {
    auto seq = generate(SeedSet({0}), 16);
    auto r = check_independence_at(seq, 1, -1);
    REQUIRE(r.has_value());
    CHECK(r->lambda == 0);
    CHECK(r->proven); // a_1 = 1 >= 0 + (-1)
}

TEST_CASE("check_independence_at fails for S(0,4) at k=1") {
    auto seq = generate(SeedSet({0, 4}), 16);
    CHECK_FALSE(check_independence_at(seq, 1, obstruction_set(SeedSet({0, 4})).omega).has_value());
}

TEST_CASE("check_independence_at on S(0,1,7) at k=2 and k=3") {
    const SeedSet seed({0, 1, 7});
    auto seq = generate(seed, 64);
    const std::int64_t omega = obstruction_set(seed).omega; // 6
    CHECK(seq.term(4) == 10);

    auto at2 = check_independence_at(seq, 2, omega);
    REQUIRE(at2.has_value());
    CHECK(at2->lambda == 7); // 2*8 + 1 - 10
    CHECK_FALSE(at2->proven); // a_3 = 8 < lambda + omega = 13

    auto at3 = check_independence_at(seq, 3, omega);
    REQUIRE(at3.has_value());
    CHECK(at3->lambda == 7);
    CHECK(at3->proven); // a_7 = 18 >= 13
}

TEST_CASE("check_independence_at demands enough terms") {
    auto seq = generate(SeedSet({0}), 8);
    try {
        check_independence_at(seq, 3, -1);
        FAIL("expected needs_more_terms_error");
    } catch (const needs_more_terms_error& e) {
        CHECK(e.required_terms() == 16);
    }
}

TEST_CASE("certify S(0)") {
    auto cert = certify(generate(SeedSet({0}), 256));
    REQUIRE(cert.has_value());
    CHECK(cert->kappa == 0);
    CHECK(cert->lambda == 0);
    CHECK(cert->rho == 1);
    CHECK(cert->alpha == Triadic(1));
    CHECK(cert->proven);
}

TEST_CASE("certify S(0,9)") {
    auto cert = certify(generate(SeedSet({0, 9}), 256));
    REQUIRE(cert.has_value());
    CHECK(cert->rho == 27);
    CHECK(cert->alpha == Triadic(1));
    CHECK(cert->kappa == 3);
}

TEST_CASE("certify S(0,1,7)") {
    auto cert = certify(generate(SeedSet({0, 1, 7}), 512));
    REQUIRE(cert.has_value());
    CHECK(cert->kappa == 2);
    CHECK(cert->lambda == 7);
    CHECK(cert->rho == 10);
    CHECK(cert->alpha == Triadic::make(10, 2));
    CHECK(cert->proven);
    CHECK(cert->proven_at_k == 3);
}

TEST_CASE("certify returns nothing for S(0,4)") {
    CHECK_FALSE(certify(generate(SeedSet({0, 4}), 1024)).has_value());
}

TEST_CASE("certificate soundness and kappa minimality on a small corpus") {
    for (const char* seed_text : {"0", "0,1,7", "0,9", "0,2", "0,3", "0,6"}) {
        const SeedSet seed = SeedSet::parse(seed_text);
        auto seq = generate(seed, 1024);
        auto cert = certify(seq);
        CAPTURE(seed_text);
        REQUIRE(cert.has_value());
        const std::int64_t omega = obstruction_set(seed).omega;
        // Soundness: both conditions hold with the certified lambda at every
        // testable k >= kappa.
        for (int k = cert->kappa; (std::size_t{2} << k) <= seq.size() && k <= 9; ++k) {
            auto check = check_independence_at(seq, k, omega);
            REQUIRE(check.has_value());
            CHECK(check->lambda == cert->lambda);
        }
        // rho and alpha tie together exactly.
        CHECK(cert->alpha.times_pow3(cert->kappa) == Triadic(cert->rho));
        CHECK(cert->rho == seq.term(std::size_t{1} << cert->kappa));
        // Minimality: kappa-1 fails outright or with a different lambda.
        if (cert->kappa > 0) {
            auto below = check_independence_at(seq, cert->kappa - 1, omega);
            CHECK((!below.has_value() || below->lambda != cert->lambda));
        }
    }
}

TEST_CASE("certify respects the horizon cap on scanned k") {
    auto seq = generate(SeedSet({0, 1, 7}), 4096);
    CertifyOptions opts;
    opts.k_max = 12; // horizon only admits k <= 10
    auto cert = certify(seq, opts);
    REQUIRE(cert.has_value());
    CHECK(cert->alpha == Triadic::make(10, 2));
    CHECK(cert->horizon == 4096);
}
