// Serial reference paths against their OpenMP counterparts.

#include "tourpack/fpt.hpp"
#include "tourpack/random.hpp"
#include "tourpack/sparse.hpp"

#include <benchmark/benchmark.h>

using namespace tourpack;

namespace {

Execution mode(const benchmark::State& state)
{
    return state.range(0) == 0 ? Execution::serial : Execution::parallel;
}

// Every triangle uses (13,0) or (12,1), so k = 3 fails and all trials run.
void BM_FptNoInstance(benchmark::State& state)
{
    std::vector<Arc> back{{13, 0}, {12, 1}};
    auto t = LinearTournament::from_backward_arcs(14, back);
    for (auto _ : state)
        benchmark::DoNotOptimize(fpt::decide(t, 3, 0.05, 1, mode(state)));
    state.SetLabel(state.range(0) == 0 ? "serial" : "parallel");
}
BENCHMARK(BM_FptNoInstance)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_SparseSolver(benchmark::State& state)
{
    Rng rng(5);
    // Many free vertices give many independent segments.
    auto t = random_sparse_tournament(4000, rng, 0.8);
    for (auto _ : state)
        benchmark::DoNotOptimize(sparse::max_triangle_packing_sparse(t, mode(state)));
    state.SetLabel(state.range(0) == 0 ? "serial" : "parallel");
}
BENCHMARK(BM_SparseSolver)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
