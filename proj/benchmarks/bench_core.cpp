#include <benchmark/benchmark.h>

#include "steinerline/corpus.hpp"
#include "steinerline/line_graph.hpp"
#include "steinerline/oracle.hpp"
#include "steinerline/transform.hpp"

namespace sl = steinerline;

namespace {

sl::Graph complete_graph(int n) {
    std::vector<std::pair<sl::VertexId, sl::VertexId>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    return sl::build_graph(n, pairs);
}

void BM_LineGraph(benchmark::State& state) {
    sl::Graph g = complete_graph(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(sl::line_graph(g));
}
BENCHMARK(BM_LineGraph)->Arg(6)->Arg(8);

void BM_EnumerateMinimalTrees(benchmark::State& state) {
    sl::Graph g = sl::random_connected_graph(8, 0.5, 42, 16);
    sl::TerminalSet s = sl::make_terminal_set({0, 3, 7});
    for (auto _ : state) benchmark::DoNotOptimize(sl::enumerate_minimal_steiner_trees(g, s));
}
BENCHMARK(BM_EnumerateMinimalTrees);

void BM_MaxPackingEdge(benchmark::State& state) {
    sl::Graph g = complete_graph(static_cast<int>(state.range(0)));
    sl::TerminalSet s = sl::make_terminal_set({0, 1, 2});
    for (auto _ : state)
        benchmark::DoNotOptimize(sl::max_disjoint_packing(g, s, sl::DisjointMode::EdgeDisjoint));
}
BENCHMARK(BM_MaxPackingEdge)->Arg(5)->Arg(6);

void BM_PairConnectivitySweep(benchmark::State& state) {
    sl::Graph g = complete_graph(5);
    sl::LineGraphMap lm = sl::line_graph(g);
    sl::SizeLimits limits{12, 40, 12};
    for (auto _ : state)
        benchmark::DoNotOptimize(
            sl::tree_connectivity(lm.line_graph, 2, sl::DisjointMode::InternallyDisjoint, limits));
}
BENCHMARK(BM_PairConnectivitySweep);

void BM_TheoremCheck(benchmark::State& state) {
    sl::Graph g = sl::random_connected_graph(6, 0.5, 7, 9);
    sl::SizeLimits limits{12, 40, 12};
    for (auto _ : state) benchmark::DoNotOptimize(sl::theorem_check(g, 3, limits));
}
BENCHMARK(BM_TheoremCheck);

} // namespace

BENCHMARK_MAIN();
