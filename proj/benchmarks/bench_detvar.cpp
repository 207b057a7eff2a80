#include <jumploci/bn/brillnoether.hpp>
#include <jumploci/detvar/hankel.hpp>
#include <jumploci/detvar/kgeneric.hpp>
#include <jumploci/detvar/oracles.hpp>
#include <jumploci/detvar/report.hpp>

#include <benchmark/benchmark.h>

using namespace jl;

namespace {

void BM_MaximalMinors(benchmark::State& state) {
  int a = static_cast<int>(state.range(0));
  PolyMatrix m = generic_matrix(a, a + 1);
  for (auto _ : state) benchmark::DoNotOptimize(minors(m, a));
}
BENCHMARK(BM_MaximalMinors)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_HilbertOracleGeneric(benchmark::State& state) {
  int a = static_cast<int>(state.range(0)), k = static_cast<int>(state.range(1));
  PolyMatrix m = generic_matrix(a, a);
  auto gens = minors(m, a - k + 1);
  int n = static_cast<int>(m.vars().size());
  for (auto _ : state) benchmark::DoNotOptimize(hilbert_multiplicity_oracle(gens, n));
}
BENCHMARK(BM_HilbertOracleGeneric)->Args({2, 1})->Args({3, 1})->Args({3, 2})->Unit(benchmark::kMillisecond);

void BM_HilbertOracleHankel(benchmark::State& state) {
  int a = static_cast<int>(state.range(0)), b = static_cast<int>(state.range(1));
  PolyMatrix m = hankel_matrix(a, b);
  auto gens = minors(m, a);
  int n = static_cast<int>(m.vars().size());
  for (auto _ : state) benchmark::DoNotOptimize(hilbert_multiplicity_oracle(gens, n));
}
BENCHMARK(BM_HilbertOracleHankel)->Args({2, 2})->Args({2, 3})->Args({3, 4})->Unit(benchmark::kMillisecond);

void BM_GenericReport(benchmark::State& state) {
  int a = static_cast<int>(state.range(0));
  GenericReportOptions opt{Rational(2), 3, 1, a};
  for (auto _ : state) benchmark::DoNotOptimize(generic_invariants({a, a, 1}, opt).to_json());
}
BENCHMARK(BM_GenericReport)->DenseRange(2, 6, 2);

void BM_OneGenericHankel(benchmark::State& state) {
  int a = static_cast<int>(state.range(0));
  PolyMatrix m = hankel_matrix(a, a + 1);
  for (auto _ : state) benchmark::DoNotOptimize(is_k_generic(m, 1));
}
BENCHMARK(BM_OneGenericHankel)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_HyperellipticReport(benchmark::State& state) {
  int g = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hyperelliptic_report(g, g - 1, 1, 2).to_json());
}
BENCHMARK(BM_HyperellipticReport)->DenseRange(5, 9, 2)->Unit(benchmark::kMillisecond);

}  // namespace
