#include "nullcs/codebook.hpp"
#include "nullcs/construct.hpp"
#include "nullcs/papr.hpp"
#include "nullcs/seqcore.hpp"

#include <benchmark/benchmark.h>

using namespace nullcs;

namespace {

ComplementarySet family_set(int m, std::size_t b) {
    return concat_cs(Theorem2Params::zeros(2, m, 1), b);
}

}  // namespace

static void BM_CorrelationSum(benchmark::State& state) {
    const auto set = family_set(static_cast<int>(state.range(0)), 1);
    for (auto _ : state) {
        for (long u = 1; u < static_cast<long>(set.length()); u += 7)
            benchmark::DoNotOptimize(correlation_sum(set, set, u));
    }
    state.SetLabel("L=" + std::to_string(set.length()));
}
BENCHMARK(BM_CorrelationSum)->DenseRange(5, 8);

static void BM_IsComplementarySet(benchmark::State& state) {
    const auto set = family_set(static_cast<int>(state.range(0)), 3);
    for (auto _ : state) benchmark::DoNotOptimize(is_complementary_set(set));
}
BENCHMARK(BM_IsComplementarySet)->DenseRange(5, 8);

static void BM_SetPapr(benchmark::State& state) {
    const auto set = family_set(static_cast<int>(state.range(0)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(set_papr(set));
}
BENCHMARK(BM_SetPapr)->DenseRange(5, 8);

static void BM_EnumerateC2(benchmark::State& state) {
    CodebookSpec spec;
    spec.q = 2;
    spec.m = static_cast<int>(state.range(0));
    spec.v = 1;
    spec.variant = CodebookVariant::c2;
    for (auto _ : state) benchmark::DoNotOptimize(enumerate(spec).size());
}
BENCHMARK(BM_EnumerateC2)->DenseRange(3, 5);

static void BM_MinHammingDistanceC3(benchmark::State& state) {
    CodebookSpec spec;
    spec.q = 2;
    spec.m = static_cast<int>(state.range(0));
    spec.v = 1;
    spec.b = 1;
    spec.variant = CodebookVariant::c3;
    const auto book = enumerate(spec);
    for (auto _ : state) benchmark::DoNotOptimize(min_hamming_distance(book));
    state.SetLabel("|C|=" + std::to_string(book.size()));
}
BENCHMARK(BM_MinHammingDistanceC3)->DenseRange(3, 6);
BENCHMARK_MAIN();
