#include "sec/conflict.hpp"
#include "sec/density.hpp"
#include "sec/discharging.hpp"
#include "sec/generate.hpp"
#include "sec/oracle.hpp"
#include "sec/reducer.hpp"
#include "sec/solver.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace sec;

Instance sparse(std::int64_t n) {
    return generate({.family = Family::SparseMad3, .vertices = static_cast<std::uint32_t>(n),
                     .max_degree = 4, .seed = 11});
}

Instance planar(std::int64_t n) {
    return generate({.family = Family::PlanarGirth7, .vertices = static_cast<std::uint32_t>(n),
                     .delta_cap = 5, .seed = 11});
}

void BM_ConflictIndex(benchmark::State& state) {
    const auto g = sparse(state.range(0)).graph;
    for (auto _ : state) {
        ConflictIndex idx(g);
        benchmark::DoNotOptimize(idx);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ConflictIndex)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

void BM_Mad(benchmark::State& state) {
    const auto g = sparse(state.range(0)).graph;
    for (auto _ : state) {
        benchmark::DoNotOptimize(mad(g));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Mad)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

void BM_FindReducibleMad(benchmark::State& state) {
    const auto g = sparse(state.range(0)).graph;
    for (auto _ : state) {
        benchmark::DoNotOptimize(find_reducible_mad(g));
    }
}
BENCHMARK(BM_FindReducibleMad)->RangeMultiplier(4)->Range(16, 1024);

void BM_SolveMad3(benchmark::State& state) {
    const auto g = sparse(state.range(0)).graph;
    const auto lists = ColorLists::uniform(g.edge_count(), 3 * static_cast<std::uint32_t>(g.max_degree()) + 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_mad3(g, lists));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SolveMad3)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

void BM_SolveGirth7(benchmark::State& state) {
    const auto g = planar(state.range(0)).graph;
    const auto lists = ColorLists::uniform(g.edge_count(), 15);
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_girth7(g, lists, 5));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SolveGirth7)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

void BM_AuditGirth7(benchmark::State& state) {
    const auto inst = planar(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(audit(inst.graph, inst.embedding, RuleSet::Girth7, 5));
    }
}
BENCHMARK(BM_AuditGirth7)->RangeMultiplier(4)->Range(16, 1024);

void BM_ExactIndex(benchmark::State& state) {
    const auto g = generate({.family = Family::Cycle, .vertices = static_cast<std::uint32_t>(state.range(0))}).graph;
    for (auto _ : state) {
        benchmark::DoNotOptimize(strong_chromatic_index_exact(g));
    }
}
BENCHMARK(BM_ExactIndex)->DenseRange(7, 19, 4);

} // namespace

BENCHMARK_MAIN();
