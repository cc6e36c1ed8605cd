#include <benchmark/benchmark.h>

#include <numeric>
#include <random>

#include "polycirc/families.hpp"
#include "polycirc/group_ops.hpp"

using namespace polycirc;

namespace {

PermGroup symmetric(std::size_t n) {
  std::vector<Point> all(n);
  std::iota(all.begin(), all.end(), 0);
  return PermGroup(n, {Permutation::from_cycles(n, {{0, 1}}), Permutation::from_cycles(n, {all})});
}

void BM_ChainSymmetric(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    PermGroup g = symmetric(n);
    benchmark::DoNotOptimize(g.order());
  }
}
BENCHMARK(BM_ChainSymmetric)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_ChainPSL2(benchmark::State& state) {
  auto p = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    PermGroup g = psl2_action(p);
    benchmark::DoNotOptimize(g.order());
  }
}
BENCHMARK(BM_ChainPSL2)->Arg(11)->Arg(31)->Arg(61);

void BM_ChainPraegerXu(benchmark::State& state) {
  PXParams px{2, static_cast<std::uint64_t>(state.range(0)), 2};
  for (auto _ : state) {
    PermGroup g = praeger_xu_group(px);
    benchmark::DoNotOptimize(g.order());
  }
}
BENCHMARK(BM_ChainPraegerXu)->Arg(4)->Arg(8)->Arg(16);

void BM_Sift(benchmark::State& state) {
  PermGroup g = symmetric(static_cast<std::size_t>(state.range(0)));
  const auto& chain = g.chain();
  std::mt19937_64 rng(1);
  std::vector<Permutation> xs;
  for (int i = 0; i < 256; ++i) xs.push_back(chain.random_element(rng));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(chain.contains(xs[i++ % xs.size()]));
}
BENCHMARK(BM_Sift)->Arg(16)->Arg(64);

}  // namespace
