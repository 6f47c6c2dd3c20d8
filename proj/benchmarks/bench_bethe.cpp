#include <benchmark/benchmark.h>

#include "bethe/bounds.hpp"
#include "bethe/oracle.hpp"
#include "bethe/recursion.hpp"

namespace {

using namespace bethe;

void BM_FloatRatioStep(benchmark::State& state) {
    const Precision prec{state.range(0)};
    FloatRatioIterator it(ModelParams::critical(2), prec);
    for (auto _ : state) {
        it.advance();
        benchmark::DoNotOptimize(it.current().gap.raw());
    }
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_FloatRatioStep)->Arg(64)->Arg(128)->Arg(256)->Arg(1024)->Arg(4096);

void BM_FloatRatioStepByDegree(benchmark::State& state) {
    FloatRatioIterator it(ModelParams::critical(static_cast<int>(state.range(0))), kDefaultPrecision);
    for (auto _ : state) {
        it.advance();
        benchmark::DoNotOptimize(it.current().gap.raw());
    }
}
BENCHMARK(BM_FloatRatioStepByDegree)->Arg(2)->Arg(3)->Arg(10)->Arg(100);

void BM_ExactRatioPrefix(benchmark::State& state) {
    const ModelParams params = ModelParams::critical(2);
    const auto n_max = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(iterate_ratio_exact(params, n_max).back().value.get_den_mpz_t());
}
BENCHMARK(BM_ExactRatioPrefix)->DenseRange(8, 16, 4)->Unit(benchmark::kMicrosecond);

void BM_OracleEnumeration(benchmark::State& state) {
    const ModelParams params = ModelParams::critical(static_cast<int>(state.range(0)));
    const int n = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(root_magnetization_exact(params, n).get_num_mpz_t());
}
BENCHMARK(BM_OracleEnumeration)->Args({2, 2})->Args({2, 3})->Args({3, 2})->Unit(benchmark::kMillisecond);

void BM_LowerStepPolynomial(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(lower_step_polynomial(d).degree());
}
BENCHMARK(BM_LowerStepPolynomial)->Arg(10)->Arg(50)->Arg(200)->Unit(benchmark::kMicrosecond);

void BM_FactorPositivity(benchmark::State& state) {
    const IntPolynomial p = lower_step_polynomial(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(factor_positivity_check(p).passed());
}
BENCHMARK(BM_FactorPositivity)->Arg(10)->Arg(50)->Arg(200)->Unit(benchmark::kMicrosecond);

void BM_RatioThreshold(benchmark::State& state) {
    const BigFloat k(0.75, kDefaultPrecision);
    std::uint64_t n = 2;
    for (auto _ : state) {
        benchmark::DoNotOptimize(ratio_threshold(static_cast<int>(state.range(0)), n, k).raw());
        n = n % 100'000 + 2;
    }
}
BENCHMARK(BM_RatioThreshold)->Arg(2)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
