#include "weylkit/catalog.hpp"
#include "weylkit/kernel.hpp"
#include "weylkit/lie.hpp"

#include <benchmark/benchmark.h>

using namespace weylkit;

static void BM_Compose(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const WeylOperator a = catalog("O", n), b = catalog("D_s", n) * catalog("X_s", n);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_Compose)->DenseRange(1, 3);

static void BM_Commutator(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const WeylOperator a = catalog("Delta", n), b = catalog("r2", n);
  for (auto _ : state) benchmark::DoNotOptimize(commutator(a, b));
}
BENCHMARK(BM_Commutator)->DenseRange(1, 3);

static void BM_SpClosure(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto gens = sp_realization_first(n);
  for (auto _ : state) benchmark::DoNotOptimize(span_closure(gens, false));
}
BENCHMARK(BM_SpClosure)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_Su12Signature(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const StructureConstants q = quotient_center(span_closure(su12_generators(n), true));
    benchmark::DoNotOptimize(killing_signature(rescale(q, real_form_rescale(q).scalars)));
  }
}
BENCHMARK(BM_Su12Signature)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_KernelRank(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const auto model = state.range(1) ? SpinorModel::GaussianWeighted : SpinorModel::Plain;
  for (auto _ : state) benchmark::DoNotOptimize(monogenic_dims(2, k, 4, model));
}
BENCHMARK(BM_KernelRank)->ArgsProduct({{2, 4}, {0, 1}})->Unit(benchmark::kMillisecond);

static void BM_Hermite(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(hermite_eigenspaces(3, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Hermite)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
