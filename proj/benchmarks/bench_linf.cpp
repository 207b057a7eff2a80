#include <samples.hpp>

#include <jumploci/defjump/defjump.hpp>
#include <jumploci/linf/checker.hpp>
#include <jumploci/linf/formality.hpp>
#include <jumploci/linf/retract.hpp>
#include <jumploci/linf/transfer.hpp>
#include <jumploci/linf/trees.hpp>

#include <benchmark/benchmark.h>

#include <random>

using namespace jl;

namespace {

void BM_TreeEnumeration(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_trees(n));
}
BENCHMARK(BM_TreeEnumeration)->DenseRange(4, 10, 2);

void BM_TransferRandomDgla(benchmark::State& state) {
  int cap = static_cast<int>(state.range(0));
  std::mt19937 rng(1);
  LInfinityAlgebra L = samples::random_dgla(rng, cap);
  HomotopyRetract r = build_retract(underlying_complex(L));
  for (auto _ : state) benchmark::DoNotOptimize(transfer_algebra(L, r, cap, false));
}
BENCHMARK(BM_TransferRandomDgla)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_CheckAlgebra(benchmark::State& state) {
  std::mt19937 rng(1);
  LInfinityAlgebra L = samples::random_dgla(rng, 4);
  LInfinityAlgebra T = transfer_algebra(L, build_retract(underlying_complex(L)), 4, false);
  for (auto _ : state) benchmark::DoNotOptimize(check_algebra(T, 4));
}
BENCHMARK(BM_CheckAlgebra)->Unit(benchmark::kMillisecond);

void BM_TransferDglPair(benchmark::State& state) {
  std::mt19937 rng(2);
  LInfinityPair P = samples::random_dgl_pair(rng, 4);
  for (auto _ : state) benchmark::DoNotOptimize(transfer_pair(P, 4, false));
}
BENCHMARK(BM_TransferDglPair)->Unit(benchmark::kMillisecond);

void BM_PartialFormality(benchmark::State& state) {
  int cap = static_cast<int>(state.range(0));
  std::mt19937 rng(3);
  LInfinityPair P = samples::random_admissible_pair(rng, cap);
  for (auto _ : state) benchmark::DoNotOptimize(partial_formality(P, cap));
}
BENCHMARK(BM_PartialFormality)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_UniversalMatrix(benchmark::State& state) {
  int order = static_cast<int>(state.range(0));
  std::mt19937 rng(3);
  LInfinityPair P = samples::random_admissible_pair(rng, 5);
  for (auto _ : state) benchmark::DoNotOptimize(universal_matrix(P, order));
}
BENCHMARK(BM_UniversalMatrix)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

}  // namespace
