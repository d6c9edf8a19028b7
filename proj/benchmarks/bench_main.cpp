#include <benchmark/benchmark.h>

#include "linkroots/canonical.hpp"
#include "linkroots/construct.hpp"
#include "linkroots/generators.hpp"
#include "linkroots/incidence.hpp"
#include "linkroots/partition.hpp"
#include "linkroots/search.hpp"

using namespace linkroots;

namespace {

// A fixed cyclic multigraph with a few parallel edges.
Multigraph sample(std::size_t n) {
    Multigraph g = make_cycle(n);
    for (std::size_t i = 0; i + 2 < n; i += 3) {
        g.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(i + 2));
        g.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(i + 1));
    }
    return g;
}

void BM_LinkGraph(benchmark::State& state) {
    Multigraph g = sample(12);
    auto l = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(link_graph(g, l).graph.edge_count());
    }
}
BENCHMARK(BM_LinkGraph)->DenseRange(1, 4);

void BM_CanonicalForm(benchmark::State& state) {
    Multigraph g = link_graph(sample(12), static_cast<std::size_t>(state.range(0))).graph;
    state.counters["n"] = static_cast<double>(g.vertex_count());
    for (auto _ : state) {
        benchmark::DoNotOptimize(canonical_form(g));
    }
}
BENCHMARK(BM_CanonicalForm)->DenseRange(1, 3);

void BM_Census(benchmark::State& state) {
    PartitionedLinkGraph p = partitioned_link_graph(sample(12), static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(count_cyclic_components(p.partitioned).cyclic_count);
    }
}
BENCHMARK(BM_Census)->DenseRange(1, 4);

void BM_IncidenceTree(benchmark::State& state) {
    Multigraph t = subdivision(make_star(static_cast<std::size_t>(state.range(0))), 5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(incidence_report(t, 7).subgraph.graph.vertex_count());
    }
}
BENCHMARK(BM_IncidenceTree)->RangeMultiplier(4)->Range(4, 256);

void BM_CycleRootSearch(benchmark::State& state) {
    Multigraph h = make_cycle(static_cast<std::size_t>(state.range(0)));
    SearchOptions options;
    options.threads = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(minimal_link_roots(h, 2, options).roots.size());
    }
}
BENCHMARK(BM_CycleRootSearch)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
