#include <benchmark/benchmark.h>

#include "lipcoh/module_map.hpp"
#include "lipcoh/rng.hpp"
#include "lipcoh/slant.hpp"

using namespace lipcoh;

namespace {

void BM_SmithNormalForm(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Rng rng(12);
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = Int(rng.range(-9, 9));
    for (auto _ : state) {
        auto s = smith_normal_form(m);
        benchmark::DoNotOptimize(s.rank);
    }
}
BENCHMARK(BM_SmithNormalForm)->Arg(8)->Arg(16)->Arg(32);

void BM_BallEnumeration(benchmark::State& state) {
    GroupSpec spec = GroupSpec::free_group(2);
    const int radius = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto b = ball(spec, radius);
        benchmark::DoNotOptimize(b.size());
    }
}
BENCHMARK(BM_BallEnumeration)->Arg(4)->Arg(6);

void BM_TorusSlantGenerator(benchmark::State& state) {
    Rng rng(5);
    GroupSpec spec = GroupSpec::free_abelian(2);
    auto ctx = SlantContext::translation(spec, SupportCocycle::generic(2, rng), 3);
    InvariantChain z = ctx->space()->generator_cycle(0, 0);
    BarTuple t{GroupElement::identity(spec), GroupElement::generator(spec, 1)};
    for (auto _ : state) {
        auto v = slant_eval(*ctx, z, {t});
        benchmark::DoNotOptimize(v.is_zero());
    }
}
BENCHMARK(BM_TorusSlantGenerator);

void BM_StaircaseEnumeration(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto pieces = staircase_pieces({k, k});
        benchmark::DoNotOptimize(pieces.size());
    }
}
BENCHMARK(BM_StaircaseEnumeration)->Arg(3)->Arg(5);

void BM_CoinvariantsRank(benchmark::State& state) {
    GroupSpec spec = GroupSpec::free_group(2);
    const int radius = static_cast<int>(state.range(0));
    for (auto _ : state) {
        int r = coinvariants_rank_at(spec, 1, radius);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_CoinvariantsRank)->Arg(2)->Arg(3);

} // namespace

BENCHMARK_MAIN();
