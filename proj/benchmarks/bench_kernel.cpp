#include <benchmark/benchmark.h>

#include <random>

#include "qcp2/verify.hpp"

using namespace qcp2;

namespace {

TruncatedSeries random_series(std::mt19937& rng, int order, int n_terms) {
  static const Var pool[] = {Var::y1, Var::y2, Var::y3, Var::y4, Var::y5};
  std::uniform_int_distribution<int> exp_dist(0, 3);
  std::uniform_int_distribution<long> num(-99, 99);
  std::uniform_int_distribution<long> den(1, 99);
  TruncatedSeries s(order);
  for (int i = 0; i < n_terms; ++i) {
    Monomial m;
    for (Var v : pool) m = m.times(Monomial::var(v, exp_dist(rng)));
    s.add_term(m, Rational(num(rng), den(rng)));
  }
  return s;
}

void BM_CharNumberChain(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const BaseStore base = default_base();
  for (auto _ : state) {
    CharNumEngine eng(base);  // cold memo each round
    benchmark::DoNotOptimize(eng.value({d, 3 * d - 1, 0, 0}));
  }
}
BENCHMARK(BM_CharNumberChain)->DenseRange(4, 8);

void BM_CharNumberFullDegree(benchmark::State& state) {
  // all determinable characteristic numbers of one degree (c = 0 row)
  const int d = static_cast<int>(state.range(0));
  const BaseStore base = default_base();
  for (auto _ : state) {
    CharNumEngine eng(base);
    Rational acc(0);
    for (int a = 3; a <= 3 * d - 1; ++a) {
      const auto outcome = eng.try_value({d, a, 3 * d - 1 - a, 0});
      if (outcome.value) acc += *outcome.value;
    }
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_CharNumberFullDegree)->DenseRange(3, 6);

void BM_KontsevichDirect(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kontsevich_direct(d));
}
BENCHMARK(BM_KontsevichDirect)->Arg(6)->Arg(10)->Arg(14);

void BM_SeriesMul(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  std::mt19937 rng(1234);
  const TruncatedSeries f = random_series(rng, order, 60);
  const TruncatedSeries g = random_series(rng, order, 60);
  for (auto _ : state) benchmark::DoNotOptimize(f * g);
}
BENCHMARK(BM_SeriesMul)->DenseRange(4, 10, 2);

void BM_SeriesExp(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  std::mt19937 rng(99);
  TruncatedSeries f =
      random_series(rng, order, 30) * TruncatedSeries::variable(Var::y1, order);
  for (auto _ : state) benchmark::DoNotOptimize(f.exp());
}
BENCHMARK(BM_SeriesExp)->DenseRange(4, 10, 2);

void BM_BuildQuantumPotential(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  const BaseStore base = default_base();
  for (auto _ : state) {
    CharNumEngine eng(base);
    benchmark::DoNotOptimize(build_quantum_potential(order, eng));
  }
}
BENCHMARK(BM_BuildQuantumPotential)->DenseRange(4, 8);

void BM_ContactAssociativity(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  const BaseStore base = default_base();
  for (auto _ : state) {
    CharNumEngine eng(base);
    benchmark::DoNotOptimize(verify_contact_associativity(order, eng));
  }
}
BENCHMARK(BM_ContactAssociativity)->DenseRange(5, 8);

void BM_PdeExtract(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const BaseStore base = default_base();
  for (auto _ : state) {
    CharNumEngine eng(base);
    benchmark::DoNotOptimize(
        pde_extract_charnum({d, 3 * d - 1, 0, 0}, eng));
  }
}
BENCHMARK(BM_PdeExtract)->DenseRange(2, 4);

}  // namespace

BENCHMARK_MAIN();
