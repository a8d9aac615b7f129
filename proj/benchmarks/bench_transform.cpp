#include "dyadica/refine.hpp"
#include "dyadica/wft.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace dyadica;

namespace {

StepFunction random_step(int rank, int support_exp, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-8, 8);
    std::size_t n = std::size_t{1} << (rank + support_exp);
    std::vector<ExactScalar> v(n);
    for (auto& x : v) x = ExactScalar(Rational(num(rng), 8));
    return StepFunction(rank, support_exp, std::move(v));
}

void BM_wft_fast(benchmark::State& state) {
    StepFunction f = random_step(static_cast<int>(state.range(0)), 2, 42);
    for (auto _ : state) benchmark::DoNotOptimize(wft(f));
    state.SetComplexityN(1 << (state.range(0) + 2));
}
BENCHMARK(BM_wft_fast)->DenseRange(2, 10)->Complexity(benchmark::oNLogN);

void BM_wft_direct(benchmark::State& state) {
    StepFunction f = random_step(static_cast<int>(state.range(0)), 2, 42);
    for (auto _ : state) benchmark::DoNotOptimize(wft_direct(f));
    state.SetComplexityN(1 << (state.range(0) + 2));
}
BENCHMARK(BM_wft_direct)->DenseRange(2, 8)->Complexity(benchmark::oNSquared);

void BM_cascade(benchmark::State& state) {
    Mask m({ExactScalar(Rational(1, 2)), ExactScalar(Rational(1, 2)),
            ExactScalar(Rational(1, 2)), ExactScalar(Rational(1, 2))});
    for (auto _ : state)
        benchmark::DoNotOptimize(
            cascade(m, StepFunction::unit_indicator(), static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_cascade)->DenseRange(4, 12, 4);

}  // namespace

BENCHMARK_MAIN();
