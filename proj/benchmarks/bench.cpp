#include <benchmark/benchmark.h>

#include "semistar/sample.hpp"
#include "semistar/starop.hpp"

using namespace sst;

static void BM_HnfReduce(benchmark::State& state) {
  const Domain* Zi = Registry::get().quadratic_order(-1, 1);
  auto elems = sample_elements(Zi, 64, 1);
  for (auto _ : state) {
    Lattice L = lattice_from_elems(Zi->field, elems);
    benchmark::DoNotOptimize(L);
  }
}
BENCHMARK(BM_HnfReduce);

static void BM_IdealColon(benchmark::State& state) {
  const Domain* Z3i = Registry::get().quadratic_order(-1, 3);
  auto pool = sample_ideals(Z3i, 32, 2);
  FractionalIdeal unit = unit_ideal(Z3i);
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ideal_colon(unit, pool[i++ % pool.size()]));
  }
}
BENCHMARK(BM_IdealColon);

static void BM_DivisorialClosure(benchmark::State& state) {
  const Domain* Z3i = Registry::get().quadratic_order(-1, 3);
  SemistarOp v = make_divisorial(Z3i);
  auto pool = sample_ideals(Z3i, 32, 3);
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(closure(v, pool[i++ % pool.size()]));
  }
}
BENCHMARK(BM_DivisorialClosure);

static void BM_SpectralClosure(benchmark::State& state) {
  const Domain* Z = Registry::get().integers();
  std::vector<PrimeIdeal> delta = primes_above(Z, 2);
  for (const auto& P : primes_above(Z, 3)) delta.push_back(P);
  SemistarOp sp = make_spectral(Z, delta);
  auto pool = sample_ideals(Z, 32, 4);
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(closure(sp, pool[i++ % pool.size()]));
  }
}
BENCHMARK(BM_SpectralClosure);

static void BM_Invertibility(benchmark::State& state) {
  const Domain* Z23 = Registry::get().localized_integers({2, 3});
  SemistarOp d = make_identity(Z23);
  auto pool = sample_ideals(Z23, 16, 5);
  size_t i = 0;
  for (auto _ : state) {
    FractionalIdeal& I = pool[i++ % pool.size()];
    FractionalIdeal J = ideal_combine(CombineMode::PRODUCT, I,
                                      ideal_colon(unit_ideal(Z23), I));
    benchmark::DoNotOptimize(set_equal(closure(d, J), unit_ideal(Z23)));
  }
}
BENCHMARK(BM_Invertibility);

BENCHMARK_MAIN();
