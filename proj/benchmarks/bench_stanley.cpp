#include <benchmark/benchmark.h>

#include "stanley/certificate.hpp"
#include "stanley/oracle.hpp"

using namespace stanley;

static void BM_generate_s0(benchmark::State& state) {
    const SeedSet seed({0});
    const auto count = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        auto seq = generate(seed, count);
        benchmark::DoNotOptimize(seq.terms().back());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_generate_s0)->Range(1 << 8, 1 << 14);

static void BM_generate_chaotic(benchmark::State& state) {
    const SeedSet seed({0, 4});
    const auto count = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        auto seq = generate(seed, count);
        benchmark::DoNotOptimize(seq.terms().back());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_generate_chaotic)->Range(1 << 8, 1 << 12);

static void BM_naive_generate(benchmark::State& state) {
    const SeedSet seed({0});
    const auto count = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        auto terms = oracle::naive_generate(seed, count);
        benchmark::DoNotOptimize(terms.back());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_naive_generate)->Range(1 << 8, 1 << 11);

static void BM_s0_term(benchmark::State& state) {
    std::int64_t n = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(s0_term(n & 0xffff));
        ++n;
    }
}
BENCHMARK(BM_s0_term);

static void BM_certify(benchmark::State& state) {
    auto seq = generate(SeedSet({0, 1, 7}), static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        auto cert = certify(seq);
        benchmark::DoNotOptimize(cert->rho);
    }
}
BENCHMARK(BM_certify)->Range(1 << 8, 1 << 12);

BENCHMARK_MAIN();
