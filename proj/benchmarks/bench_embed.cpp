#include <benchmark/benchmark.h>

#include "pdgrid/pdgrid.hpp"

using namespace pdgrid;

namespace {

PlanarGraph triangulation(std::size_t n) {
  GenSpec spec;
  spec.n = n;
  spec.seed = 1;
  return random_graph(spec);
}

// Primal vertices; the radial graph has about three times as many.
void BM_EmbedOffset(benchmark::State& state) {
  const PlanarGraph g = triangulation(static_cast<std::size_t>(state.range(0)));
  const QuadGraph q = select_outer_quad(build_quad(g, false), BendOn::primal);
  const CanonicalLabeling c = compute_labeling(q);
  for (auto _ : state) benchmark::DoNotOptimize(embed(q, c, Engine::offset));
  state.SetComplexityN(static_cast<benchmark::IterationCount>(q.size()));
}
BENCHMARK(BM_EmbedOffset)->RangeMultiplier(4)->Range(256, 65536)->Complexity(benchmark::oN);

void BM_EmbedReference(benchmark::State& state) {
  const PlanarGraph g = triangulation(static_cast<std::size_t>(state.range(0)));
  const QuadGraph q = select_outer_quad(build_quad(g, false), BendOn::primal);
  const CanonicalLabeling c = compute_labeling(q);
  for (auto _ : state) benchmark::DoNotOptimize(embed(q, c, Engine::reference));
  state.SetComplexityN(static_cast<benchmark::IterationCount>(q.size()));
}
BENCHMARK(BM_EmbedReference)->RangeMultiplier(4)->Range(256, 4096);

void BM_Labeling(benchmark::State& state) {
  const PlanarGraph g = triangulation(static_cast<std::size_t>(state.range(0)));
  const QuadGraph q = select_outer_quad(build_quad(g, false), BendOn::primal);
  for (auto _ : state) benchmark::DoNotOptimize(compute_labeling(q));
  state.SetComplexityN(static_cast<benchmark::IterationCount>(q.size()));
}
BENCHMARK(BM_Labeling)->RangeMultiplier(4)->Range(256, 65536)->Complexity(benchmark::oNLogN);

void BM_Pipeline(benchmark::State& state) {
  const PlanarGraph g = triangulation(static_cast<std::size_t>(state.range(0)));
  EmbedOptions opts;
  opts.check_three_connectivity = false;
  for (auto _ : state) benchmark::DoNotOptimize(embed_graph(g, opts));
}
BENCHMARK(BM_Pipeline)->Arg(8335)->Arg(33335)->Unit(benchmark::kMillisecond);

void BM_Verify(benchmark::State& state) {
  const Embedding e = embed_graph(triangulation(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(verify_drawing(e.quad, e.drawing));
}
BENCHMARK(BM_Verify)->Arg(20)->Arg(60)->Arg(120);

}  // namespace
BENCHMARK_MAIN();
