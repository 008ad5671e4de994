#include <benchmark/benchmark.h>

#include "cmkit/families.hpp"
#include "cmkit/permgroup.hpp"

using namespace cmkit;

static void BM_BsgsSym16(benchmark::State& state) {
  std::vector<int> cycle(16);
  for (int i = 0; i < 16; ++i) cycle[i] = i;
  std::vector<Perm> gens = {Perm::from_cycles(16, {cycle}),
                            Perm::from_cycles(16, {{0, 1}})};
  for (auto _ : state) {
    GeneratedGroup GG(gens);
    benchmark::DoNotOptimize(GG.order());
  }
}
BENCHMARK(BM_BsgsSym16);

static void BM_PCompField5(benchmark::State& state) {
  FiniteGroup f5 = mk_cyclic(5);
  for (auto _ : state) {
    auto GG = p_comp(f5);
    benchmark::DoNotOptimize(GG.order());
  }
}
BENCHMARK(BM_PCompField5);

static void BM_Membership(benchmark::State& state) {
  std::vector<int> cycle(16);
  for (int i = 0; i < 16; ++i) cycle[i] = i;
  GeneratedGroup GG({Perm::from_cycles(16, {cycle}), Perm::from_cycles(16, {{0, 1}})});
  Perm probe = Perm::from_cycles(16, {{3, 7, 11}, {2, 5}});
  for (auto _ : state) benchmark::DoNotOptimize(GG.contains(probe));
}
BENCHMARK(BM_Membership);

static void BM_PrimitivityCheck(benchmark::State& state) {
  FiniteGroup c4 = mk_cyclic(4);
  GeneratedGroup GG({regular_rep(c4, 1, Side::right)});
  for (auto _ : state) benchmark::DoNotOptimize(GG.is_primitive());
}
BENCHMARK(BM_PrimitivityCheck);

BENCHMARK_MAIN();
