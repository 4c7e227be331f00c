#include <benchmark/benchmark.h>

#include "zf/families.hpp"
#include "zf/forcing.hpp"
#include "zf/functigraph.hpp"
#include "zf/path_cover.hpp"
#include "zf/random_graphs.hpp"

namespace {

void BM_ZeroForcingPetersen(benchmark::State& state) {
  const auto g = zf::petersen_graph();
  for (auto _ : state) benchmark::DoNotOptimize(zf::zero_forcing_number(g).z);
}
BENCHMARK(BM_ZeroForcingPetersen);

void BM_ZeroForcingCycleMod(benchmark::State& state) {
  const auto fg = zf::named_construction("cycle-mod", static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(zf::zero_forcing_number(fg.whole).z);
}
BENCHMARK(BM_ZeroForcingCycleMod)->Arg(3)->Arg(4);

void BM_ZeroForcingGrid(benchmark::State& state) {
  const int s = static_cast<int>(state.range(0));
  const auto g = zf::cartesian_product(zf::path_graph(s), zf::path_graph(s));
  for (auto _ : state) benchmark::DoNotOptimize(zf::zero_forcing_number(g).z);
}
BENCHMARK(BM_ZeroForcingGrid)->DenseRange(3, 5);

void BM_ClosureRandom(benchmark::State& state) {
  zf::Rng rng(1);
  const auto g = zf::random_connected(static_cast<int>(state.range(0)), 0.1, rng);
  const zf::VertexSet s{0, 1, 2};
  for (auto _ : state) benchmark::DoNotOptimize(zf::closure(g, s).black);
}
BENCHMARK(BM_ClosureRandom)->Arg(32)->Arg(128);

void BM_PathCoverGrid(benchmark::State& state) {
  const int s = static_cast<int>(state.range(0));
  const auto g = zf::cartesian_product(zf::path_graph(s), zf::path_graph(4));
  for (auto _ : state) benchmark::DoNotOptimize(zf::path_cover_number(g).p);
}
BENCHMARK(BM_PathCoverGrid)->DenseRange(2, 4);

void BM_CompleteSweep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto base = zf::complete_graph(n);
  const auto functions = zf::enumerate_functions(n, zf::FunctionFilter::everything());
  for (auto _ : state)
    for (const auto& f : functions) benchmark::DoNotOptimize(zf::zero_forcing_number(zf::build_functigraph(base, f).whole).z);
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(functions.size()));
}
BENCHMARK(BM_CompleteSweep)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
