#include <benchmark/benchmark.h>

#include <random>

#include "lp2/corpus.hpp"
#include "lp2/homalg.hpp"
#include "lp2/linalg.hpp"
#include "lp2/oricalc.hpp"
#include "lp2/windows.hpp"

using namespace lp2;

namespace {

QMatrix random_matrix(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> d(-5, 5);
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = Rational(d(rng), 1 + (d(rng) + 5) % 3);
    return m;
}

Representation big_sum(int copies) {
    auto r = point_module({1, 2, 3}, 1, 0);
    for (int i = 1; i < copies; ++i) r = direct_sum(r, point_module({1, Rational(i), Rational(-i, 2)}, i, 0));
    return r;
}

}  // namespace

static void BM_RankBareiss(benchmark::State& st) {
    const auto m = random_matrix(static_cast<std::size_t>(st.range(0)), 7);
    for (auto _ : st) benchmark::DoNotOptimize(rank_bareiss(m));
}
BENCHMARK(BM_RankBareiss)->Arg(8)->Arg(16)->Arg(32);

static void BM_RankModP(benchmark::State& st) {
    const auto m = random_matrix(static_cast<std::size_t>(st.range(0)), 7);
    for (auto _ : st) benchmark::DoNotOptimize(rank_mod_p(m, kDefaultPrime));
}
BENCHMARK(BM_RankModP)->Arg(8)->Arg(16)->Arg(32);

static void BM_ExtDimsY(benchmark::State& st) {
    const auto m = big_sum(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(ext_dims_Y(m, m));
}
BENCHMARK(BM_ExtDimsY)->Arg(1)->Arg(2)->Arg(4);

static void BM_ExtDimsYPrime(benchmark::State& st) {
    const auto m = big_sum(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(ext_dims_Y(m, m, PrimeMode{kDefaultPrime}));
}
BENCHMARK(BM_ExtDimsYPrime)->Arg(1)->Arg(2)->Arg(4);

static void BM_TwistUp(benchmark::State& st) {
    const auto f = pushforward_module(static_cast<int>(st.range(0)), 0);
    for (auto _ : st) benchmark::DoNotOptimize(twist_up(f));
}
BENCHMARK(BM_TwistUp)->Arg(1)->Arg(2)->Arg(3);

static void BM_Theorem3(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(verify_theorem3(-8, 8));
}
BENCHMARK(BM_Theorem3);

BENCHMARK_MAIN();
