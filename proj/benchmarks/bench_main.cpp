#include <benchmark/benchmark.h>

#include "graphsym/permutation.hpp"
#include "graphsym/serialize.hpp"
#include "graphsym/spectral.hpp"
#include "graphsym/tasks.hpp"

using namespace graphsym;

namespace {

Graph dense_graph(int n, std::uint64_t seed) {
  RngStream rng(seed);
  std::vector<Edge> edges;
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) {
      if (rng.uniform() < 0.3) edges.push_back({u, v, std::nullopt});
    }
  }
  return Graph(n, false, edges);
}

void BM_RenderParse(benchmark::State& state) {
  const Graph g = dense_graph(static_cast<int>(state.range(0)), 1);
  EncodingSpec spec = erdos_baseline();
  spec.replicate_undirected = true;
  for (auto _ : state) {
    const auto block = render(g, spec);
    benchmark::DoNotOptimize(parse(block.text));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(g.edge_count()));
}
BENCHMARK(BM_RenderParse)->Arg(20)->Arg(50)->Arg(100);

void BM_Relabel(benchmark::State& state) {
  const Graph g = dense_graph(static_cast<int>(state.range(0)), 2);
  RngStream rng(3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(relabel(g, random_permutation(g.node_count(), rng)));
  }
}
BENCHMARK(BM_Relabel)->Arg(20)->Arg(100);

void BM_Eigensym(benchmark::State& state) {
  const Matrix a = adjacency_matrix(dense_graph(static_cast<int>(state.range(0)), 4));
  for (auto _ : state) benchmark::DoNotOptimize(eigensym(a));
}
BENCHMARK(BM_Eigensym)->Arg(10)->Arg(20)->Arg(40)->Arg(80);

void BM_SpectralSuiteGraph(benchmark::State& state) {
  const Graph g = dense_graph(20, 5);
  for (auto _ : state) {
    for (SpectralTask t : all_spectral_tasks()) benchmark::DoNotOptimize(spectral_truth(t, g));
  }
}
BENCHMARK(BM_SpectralSuiteGraph);

void BM_Solve(benchmark::State& state, const char* task) {
  const TaskSpec& spec = find_task(task);
  const auto instances = generate_instances(spec, 8, 6);
  for (auto _ : state) {
    for (const auto& inst : instances) {
      benchmark::DoNotOptimize(solve(spec, inst.graph, inst.params));
    }
  }
}
BENCHMARK_CAPTURE(BM_Solve, shortest_path, "shortest_path");
BENCHMARK_CAPTURE(BM_Solve, betweenness, "betweenness_centrality");
BENCHMARK_CAPTURE(BM_Solve, pagerank, "pagerank");
BENCHMARK_CAPTURE(BM_Solve, maximal_flow, "maximal_flow");

void BM_Reference(benchmark::State& state, const char* task) {
  const TaskSpec& spec = find_task(task);
  const auto instances = generate_instances(spec, 4, 7);
  for (auto _ : state) {
    for (const auto& inst : instances) {
      benchmark::DoNotOptimize(reference_answer(spec, inst.graph, inst.params));
    }
  }
}
BENCHMARK_CAPTURE(BM_Reference, vertex_cover, "min_vertex_cover");
BENCHMARK_CAPTURE(BM_Reference, tsp, "traveling_salesman_problem");

}  // namespace

BENCHMARK_MAIN();
