#include <benchmark/benchmark.h>

#include "polycirc/coset_graph.hpp"
#include "polycirc/engine.hpp"
#include "polycirc/families.hpp"

using namespace polycirc;

namespace {

void BM_DirectSearchPraegerXu(benchmark::State& state) {
  PXParams px{2, static_cast<std::uint64_t>(state.range(0)), 1};
  auto g = praeger_xu(px).graph;
  auto group = praeger_xu_group(px);
  group.chain();
  SearchConfig cfg;
  cfg.routes = {Method::kDirectSearch};
  for (auto _ : state) benchmark::DoNotOptimize(find_semiregular(g, group, cfg));
}
BENCHMARK(BM_DirectSearchPraegerXu)->Arg(4)->Arg(6)->Arg(8);

void BM_ElusiveM11(benchmark::State& state) {
  auto k = k12_m11();
  k.group.chain();
  for (auto _ : state) benchmark::DoNotOptimize(find_semiregular(k.graph, k.group));
}
BENCHMARK(BM_ElusiveM11);

void BM_CosetGraph(benchmark::State& state) {
  auto p = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    auto l = lemma33_instance(p, 1);
    benchmark::DoNotOptimize(l.bundle.graph().order());
  }
}
BENCHMARK(BM_CosetGraph)->Arg(7)->Arg(13)->Arg(31);

}  // namespace
