#include <benchmark/benchmark.h>

#include <random>

#include "nalg/catalog.hpp"
#include "nalg/degeneration.hpp"
#include "nalg/invariants.hpp"
#include "nalg/witnesses.hpp"

namespace {

using namespace nalg;

RatFunc sample_ratfunc(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> c(-9, 9);
  auto poly = [&] { return Polynomial(std::vector<Rational>{c(rng), c(rng), c(rng), Rational(1)}); };
  return {poly(), poly()};
}

void BM_RatFuncArithmetic(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto a = sample_ratfunc(rng);
  const auto b = sample_ratfunc(rng);
  for (auto _ : state) {
    auto x = a * b + a / b - b;
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_RatFuncArithmetic);

void BM_Rref(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<int> c(-5, 5);
  Matrix<Rational> m(n * n, n * n);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = c(rng);
  }
  for (auto _ : state) benchmark::DoNotOptimize(rref(m).rank);
}
BENCHMARK(BM_Rref)->Arg(3)->Arg(4)->Arg(5);

void BM_DerivationDimension(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = catalog::make("L4", n, Rational(1, 4));
  for (auto _ : state) benchmark::DoNotOptimize(derivation_dimension(a));
}
BENCHMARK(BM_DerivationDimension)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

void BM_Fingerprint(benchmark::State& state) {
  const auto a = catalog::make("n52", static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(fingerprint(a));
}
BENCHMARK(BM_Fingerprint)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

void BM_Transport(benchmark::State& state) {
  const auto a = catalog::make("n3minus_lambda2", 5);
  const auto fam = witness::n3minus_lambda2_family();
  for (auto _ : state) benchmark::DoNotOptimize(limit_algebra(transport(a, fam)));
}
BENCHMARK(BM_Transport)->Unit(benchmark::kMillisecond);

void BM_LemmaDegenerate(benchmark::State& state) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> c(-3, 3);
  AlgebraQ a(5);
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = 0; j < 5; ++j) {
      for (std::size_t k = 0; k < 5; ++k) a.set(i, j, k, c(rng));
    }
  }
  a.set(0, 0, 2, 1);
  a.set(0, 1, 2, 1);
  a.set(1, 0, 2, 0);
  a.set(1, 1, 2, 2);
  for (auto _ : state) benchmark::DoNotOptimize(lemma_degenerate(a, 0, 1, 2).label);
}
BENCHMARK(BM_LemmaDegenerate);

}  // namespace

BENCHMARK_MAIN();
