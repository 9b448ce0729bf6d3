#include <benchmark/benchmark.h>

#include <vector>

#include "secres/bott.hpp"
#include "secres/characters.hpp"
#include "secres/weyman.hpp"

using namespace secres;

static void BM_CharacterTable(benchmark::State& state) {
  const auto t = static_cast<int>(state.range(0));
  for (auto _ : state) {
    CharacterTable tab(t);
    benchmark::DoNotOptimize(tab.order());
  }
}
BENCHMARK(BM_CharacterTable)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_Kronecker(benchmark::State& state) {
  const auto ps = partitions_of(static_cast<int>(state.range(0)));
  static_cast<void>(character_table(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    for (const auto& l : ps) benchmark::DoNotOptimize(kronecker(l, ps[ps.size() / 2], ps[ps.size() / 3]));
  }
}
BENCHMARK(BM_Kronecker)->Arg(8)->Arg(12);

static void BM_LrProduct(benchmark::State& state) {
  const Partition l{6, 4, 3, 1}, m{5, 3, 2, 2};
  for (auto _ : state) benchmark::DoNotOptimize(lr_product(l, m, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_LrProduct)->Arg(4)->Arg(8);

static void BM_ExtPower(benchmark::State& state) {
  const std::vector<int> dims{2, 4, 4};
  for (auto _ : state) benchmark::DoNotOptimize(ext_power_tensor(static_cast<int>(state.range(0)), dims));
}
BENCHMARK(BM_ExtPower)->Arg(4)->Arg(8)->Unit(benchmark::kMicrosecond);

static void BM_Bott(benchmark::State& state) {
  const GrassmannianFactor g(3, 7);
  const BundleWeight w(std::vector<Partition::Part>{5, 2, -4, 6, 3, 0, -2}, g);
  const bool reflections = state.range(0) != 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(reflections ? bott_cohomology_by_reflections(w) : bott_cohomology(w));
  }
}
BENCHMARK(BM_Bott)->Arg(0)->Arg(1);

static void BM_LascouxComplex(benchmark::State& state) {
  const SubspaceConfig c({2, 2, 4}, {2, 2, 2});
  for (auto _ : state) benchmark::DoNotOptimize(weyman_complex(FiberModule::unit(3), c));
}
BENCHMARK(BM_LascouxComplex)->Unit(benchmark::kMicrosecond);

static void BM_LiftChainStep(benchmark::State& state) {
  const auto start = weyman_complex(FiberModule::unit(3), SubspaceConfig({2, 2, 4}, {2, 2, 2}));
  const std::vector<int> target{2, 4, 4};
  for (auto _ : state) {
    benchmark::DoNotOptimize(lift_resolution(start, target, {LiftStrategy::Stepwise, static_cast<unsigned>(state.range(0)), 0}));
  }
}
BENCHMARK(BM_LiftChainStep)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
