#include "movdom/graph_io.hpp"
#include "movdom/harness.hpp"

#include <benchmark/benchmark.h>

using namespace movdom;

static void BM_TotalDominating(benchmark::State& state)
{
    const auto g = random_connected(static_cast<VertexId>(state.range(0)), 0.3, 7);
    std::uint64_t bits = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(is_total_dominating(g, VertexSet::from_bits(g.order(), bits)));
        bits = bits * 6364136223846793005ULL + 1442695040888963407ULL;
        bits &= VertexSet::full_mask(g.order());
    }
}
BENCHMARK(BM_TotalDominating)->Arg(16)->Arg(64);

static void BM_Is2Movable(benchmark::State& state)
{
    const auto g = corona(family(Family::cycle, 4), family(Family::path, 3)).graph;
    const auto t = solve(g, InvariantKind::gamma_mt2).witness(g.order());
    for (auto _ : state)
        benchmark::DoNotOptimize(is_2movable_set(g, t));
}
BENCHMARK(BM_Is2Movable);

static void BM_Solve(benchmark::State& state)
{
    const auto kind = static_cast<InvariantKind>(state.range(1));
    const auto g = random_connected(static_cast<VertexId>(state.range(0)), 0.35, 11);
    for (auto _ : state)
        benchmark::DoNotOptimize(solve(g, kind));
    state.SetLabel(std::string(to_string(kind)));
}
BENCHMARK(BM_Solve)->ArgsProduct({{8, 12, 16}, {0, 1, 2, 3}});

static void BM_SolveNaive(benchmark::State& state)
{
    const auto g = random_connected(static_cast<VertexId>(state.range(0)), 0.35, 11);
    for (auto _ : state)
        benchmark::DoNotOptimize(solve_naive(g, InvariantKind::gamma_mt2));
}
BENCHMARK(BM_SolveNaive)->Arg(8)->Arg(12);

static void BM_SweepOracle(benchmark::State& state)
{
    FamilySpec f;
    f.min_order = 1;
    f.max_order = static_cast<VertexId>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(sweep(Theorem::oracle, f));
}
BENCHMARK(BM_SweepOracle)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_Graph6RoundTrip(benchmark::State& state)
{
    const auto g = random_graph(62, 0.5, 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(parse_graph6(write_graph6(g)));
}
BENCHMARK(BM_Graph6RoundTrip);
BENCHMARK_MAIN();
