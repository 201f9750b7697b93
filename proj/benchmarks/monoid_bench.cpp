#include <benchmark/benchmark.h>

#include "gridmatch/explorer.hpp"
#include "gridmatch/monoid.hpp"
#include "gridmatch/random_graph.hpp"
#include "gridmatch/reductions.hpp"

namespace gm = gridmatch;

namespace {

gm::MonoidElement random_element(gm::Rng& rng, int width) {
  gm::RandomGraphOptions o;
  o.width = width;
  o.length = 3;
  o.full_boundary = true;
  o.boundary_verticals = false;
  o.edge_percent = 60;
  return gm::element_of(gm::random_graph(rng, o));
}

void BM_Compose(benchmark::State& state) {
  gm::Rng rng(7);
  const int width = static_cast<int>(state.range(0));
  const gm::MonoidElement a = random_element(rng, width);
  const gm::MonoidElement b = random_element(rng, width);
  for (auto _ : state) benchmark::DoNotOptimize(gm::compose(a, b));
}
BENCHMARK(BM_Compose)->DenseRange(2, 8, 2);

void BM_ElementOfParityGraph(benchmark::State& state) {
  const gm::GridGraph g = gm::parity_to_graph(std::string(static_cast<std::size_t>(state.range(0)), '1'));
  for (auto _ : state) benchmark::DoNotOptimize(gm::element_of(g));
}
BENCHMARK(BM_ElementOfParityGraph)->Arg(8)->Arg(64);

void BM_Discovery(benchmark::State& state) {
  const int width = static_cast<int>(state.range(0));
  const auto pool = gm::default_pool(width, 1);
  gm::DiscoveryOptions o;
  o.budget = 2'000;
  for (auto _ : state) benchmark::DoNotOptimize(gm::discover_certificate(width, pool, o));
}
BENCHMARK(BM_Discovery)->Arg(3)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace
