#include <benchmark/benchmark.h>

#include <numeric>
#include <random>

#include "cmkit/constructions.hpp"
#include "cmkit/latin.hpp"
#include "cmkit/perm.hpp"

using namespace cmkit;

namespace {

Perm shuffled_perm(int degree, std::mt19937_64& rng) {
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  std::shuffle(img.begin(), img.end(), rng);
  return Perm(std::move(img));
}

}  // namespace

static void BM_ParityByCycles(benchmark::State& state) {
  std::mt19937_64 rng(1);
  Perm p = shuffled_perm(static_cast<int>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(parity_by_cycles(p));
}
BENCHMARK(BM_ParityByCycles)->Arg(16)->Arg(64)->Arg(256);

static void BM_InversionCount(benchmark::State& state) {
  std::mt19937_64 rng(1);
  int n = static_cast<int>(state.range(0));
  Perm p = shuffled_perm(n, rng);
  TotalOrder ord = TotalOrder::by_index(n);
  for (auto _ : state) benchmark::DoNotOptimize(inversion_count(p, ord));
}
BENCHMARK(BM_InversionCount)->Arg(16)->Arg(64)->Arg(256);

static void BM_SdInversionSweep(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Perm g = sd_orthomorphism(n);
  TotalOrder ord = sd_exponent_order(n);
  for (auto _ : state) benchmark::DoNotOptimize(inversion_count(g, ord));
}
BENCHMARK(BM_SdInversionSweep)->Arg(6)->Arg(8)->Arg(10);

static void BM_LatinParities(benchmark::State& state) {
  FiniteGroup g = mk_small16(11);
  LatinSquare a = cayley_square(g);
  for (auto _ : state) benchmark::DoNotOptimize(parities(a));
}
BENCHMARK(BM_LatinParities);

BENCHMARK_MAIN();
