#include <homcount/generators.hpp>
#include <homcount/hom_count.hpp>

#include <benchmark/benchmark.h>

using namespace homcount;

namespace {

constexpr std::uint64_t kSeed = 7;
constexpr unsigned kOutDegree = 3;

void dtd(benchmark::State &state, const Graph &pattern)
{
    Pattern p(pattern);
    auto plan = make_dtd_plan(p);
    auto g = bench_host(static_cast<std::size_t>(state.range(0)), kOutDegree, kSeed);
    auto gdir = OrientedGraph::orient(g, degeneracy_order(g).order);
    for (auto _ : state)
        benchmark::DoNotOptimize(count_homs_dtd(gdir, plan));
    state.counters["edges"] = static_cast<double>(g.edge_count());
    state.SetComplexityN(static_cast<std::int64_t>(g.edge_count()));
}

void BM_DtdC5(benchmark::State &state) { dtd(state, cycle_graph(5)); }
void BM_DtdBull(benchmark::State &state) { dtd(state, bull_graph()); }
void BM_DtdK4(benchmark::State &state) { dtd(state, complete_graph(4)); }

void BM_BruteC5(benchmark::State &state)
{
    Pattern p(cycle_graph(5));
    auto g = bench_host(static_cast<std::size_t>(state.range(0)), kOutDegree, kSeed);
    for (auto _ : state)
        benchmark::DoNotOptimize(count_homs_brute(g, p));
}

void BM_Degeneracy(benchmark::State &state)
{
    auto g = bench_host(static_cast<std::size_t>(state.range(0)), kOutDegree, kSeed);
    for (auto _ : state)
        benchmark::DoNotOptimize(degeneracy_order(g));
    state.SetComplexityN(static_cast<std::int64_t>(g.edge_count()));
}

void BM_DirectTriangles(benchmark::State &state)
{
    auto g = bench_host(static_cast<std::size_t>(state.range(0)), kOutDegree, kSeed);
    for (auto _ : state)
        benchmark::DoNotOptimize(count_triangles_direct(g));
}

} // namespace

BENCHMARK(BM_DtdC5)->RangeMultiplier(10)->Range(1'000, 100'000)->Unit(benchmark::kMillisecond)->Complexity();
BENCHMARK(BM_DtdBull)->RangeMultiplier(10)->Range(1'000, 100'000)->Unit(benchmark::kMillisecond)->Complexity();
BENCHMARK(BM_DtdK4)->RangeMultiplier(10)->Range(1'000, 100'000)->Unit(benchmark::kMillisecond)->Complexity();
BENCHMARK(BM_BruteC5)->Arg(1'000)->Arg(3'000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Degeneracy)->RangeMultiplier(10)->Range(10'000, 1'000'000)->Unit(benchmark::kMillisecond)->Complexity();
BENCHMARK(BM_DirectTriangles)->RangeMultiplier(10)->Range(10'000, 1'000'000)->Unit(benchmark::kMillisecond);
