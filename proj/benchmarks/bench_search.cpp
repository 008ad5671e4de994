#include <benchmark/benchmark.h>

#include "cmkit/families.hpp"
#include "cmkit/search.hpp"

using namespace cmkit;

static void BM_EnumerateCyclic7(benchmark::State& state) {
  FiniteGroup g = mk_cyclic(7);
  for (auto _ : state) {
    auto res = enumerate_cms(g, {}, nullptr);
    benchmark::DoNotOptimize(res.count);
  }
}
BENCHMARK(BM_EnumerateCyclic7);

static void BM_EnumerateField8(benchmark::State& state) {
  FiniteGroup g = mk_elementary_abelian(2, 3);
  for (auto _ : state) {
    auto res = enumerate_cms(g, {}, nullptr);
    benchmark::DoNotOptimize(res.count);
  }
}
BENCHMARK(BM_EnumerateField8);

static void BM_CensusCyclic9(benchmark::State& state) {
  FiniteGroup g = mk_cyclic(9);
  for (auto _ : state) {
    auto census = count_by_parity(g);
    benchmark::DoNotOptimize(census.even);
  }
}
BENCHMARK(BM_CensusCyclic9);

static void BM_RandomCmField16(benchmark::State& state) {
  FiniteGroup g = mk_elementary_abelian(2, 4);
  std::uint64_t seed = 1;
  for (auto _ : state) {
    SearchBudget budget;
    budget.seed = seed++;
    auto res = random_cm(g, nullptr, budget);
    benchmark::DoNotOptimize(res.witness);
  }
}
BENCHMARK(BM_RandomCmField16);

static void BM_LiftThroughWitness(benchmark::State& state) {
  auto w = theta_transversal_witness(Sd32Variant::i2);
  FiniteGroup h = subgroup_as_group(w.group, w.subgroup);
  Perm cm = collect_cms(h, 1)[0];
  for (auto _ : state) {
    Perm lifted = lift_cm(w, cm);
    benchmark::DoNotOptimize(lifted);
  }
}
BENCHMARK(BM_LiftThroughWitness);

BENCHMARK_MAIN();
