#include <benchmark/benchmark.h>

#include "delsub/codes.hpp"
#include "delsub/error_balls.hpp"
#include "delsub/reconstruct.hpp"
#include "delsub/verify.hpp"

using namespace delsub;

namespace {

void BM_DsBall(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::uint64_t v = 0x5A5A5A5A5A5A5A5Aull;
    for (auto _ : state) {
        benchmark::DoNotOptimize(ds_ball(Word(n, v & ((std::uint64_t{1} << n) - 1))));
        v = v * 6364136223846793005ull + 1442695040888963407ull;
    }
}
BENCHMARK(BM_DsBall)->Arg(8)->Arg(16)->Arg(32)->Arg(63);

void BM_BallIntersection(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Word x(n, 0x2D2D2D2D2D2D2D2Dull & ((std::uint64_t{1} << n) - 1));
    const Word y = x.flipped(n / 2);
    for (auto _ : state) benchmark::DoNotOptimize(ball_intersection(x, y, BallKind::DS));
}
BENCHMARK(BM_BallIntersection)->Arg(12)->Arg(32);

void BM_EngineAllPairs(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const PairEngine engine(n);
    const std::size_t count = engine.word_count();
    for (auto _ : state) {
        std::size_t best = 0;
        for (std::size_t i = 0; i < count; ++i)
            for (std::size_t j = i + 1; j < count; ++j) best = std::max(best, engine.total(i, j));
        benchmark::DoNotOptimize(best);
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * count * (count - 1) / 2));
}
BENCHMARK(BM_EngineAllPairs)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_DecodeCl(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const CodeSpec spec = best_coset(CodeFamily::Cl, n);
    const Word x = members(spec).back();
    const ReadBundle reads = collect_reads(x, 7, kDefaultSeed);
    for (auto _ : state) benchmark::DoNotOptimize(decode(spec, 7, reads));
}
BENCHMARK(BM_DecodeCl)->Arg(10)->Arg(12);

void BM_VerifyIntersectionBounds(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(verify_intersection_bounds(n));
}
BENCHMARK(BM_VerifyIntersectionBounds)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
