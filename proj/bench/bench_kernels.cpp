// Serial vs OpenMP kernels on Macaulay-style matrices and symbolic minors.

#include <benchmark/benchmark.h>

#include <random>

#include "divcert/kernels.hpp"

using namespace divcert;

namespace {

RationalMatrix random_matrix(std::size_t rows, std::size_t cols, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> coef(-9, 9), sparse(0, 3);
  RationalMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (sparse(rng) == 0) m(r, c) = Rational(coef(rng)) / (1 + sparse(rng));
  return m;
}

PolynomialMatrix linear_matrix(const RingPtr& ring, int rows, int cols, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> coef(-3, 3);
  PolynomialMatrix m(static_cast<std::size_t>(rows));
  for (auto& row : m)
    for (int c = 0; c < cols; ++c) {
      Polynomial p(ring);
      for (int v = 0; v < ring->num_variables(); ++v) p += Polynomial::constant(ring, coef(rng)) * Polynomial::variable(ring, v);
      row.push_back(p);
    }
  return m;
}

template <EchelonForm (*Kernel)(RationalMatrix)>
void BM_Rref(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  RationalMatrix m = random_matrix(n, n + n / 2, 17);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(m));
}

template <std::vector<Polynomial> (*Kernel)(const PolynomialMatrix&, const RingPtr&, int)>
void BM_Minors(benchmark::State& state) {
  RingPtr ring = Ring::make({"x", "y", "z", "w"});
  const int n = static_cast<int>(state.range(0));
  PolynomialMatrix m = linear_matrix(ring, n, n + 1, 23);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(m, ring, 3));
}

}  // namespace

BENCHMARK(BM_Rref<rref_serial>)->Name("rref/serial")->Arg(40)->Arg(80)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Rref<rref_parallel>)->Name("rref/parallel")->Arg(40)->Arg(80)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Minors<minors_serial>)->Name("minors/serial")->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Minors<minors_parallel>)->Name("minors/parallel")->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
