// OpenMP kernels against their serial references.

#include "invsub/exterior.hpp"
#include "invsub/invariant_search.hpp"
#include "invsub/pluecker.hpp"
#include "invsub/problem.hpp"

#include <benchmark/benchmark.h>

#include <fstream>
#include <random>
#include <sstream>

using namespace invsub;

namespace {

RatMatrix random_matrix(std::size_t n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(-9, 9);
  RatMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = entry(rng);
  return m;
}

Multivector random_multivector(int n, int d, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(-5, 5);
  RatVector coords(binomial(n, d));
  for (auto& x : coords) x = entry(rng);
  return Multivector::from_rational(n, d, coords);
}

MatrixSet load(const std::string& name) {
  std::ifstream in(std::string(INVSUB_DATA_DIR) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  const auto p = parse_problem(ss.str());
  return MatrixSet{p.matrices, p.shift ? *p.shift : choose_shift(p.matrices)};
}

void BM_ExteriorPower(benchmark::State& state) {
  const auto m = random_matrix(static_cast<std::size_t>(state.range(0)), 1);
  const int d = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(exterior_power(m, d));
}

void BM_ExteriorPowerSerial(benchmark::State& state) {
  const auto m = random_matrix(static_cast<std::size_t>(state.range(0)), 1);
  const int d = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(exterior_power_serial(m, d));
}

void BM_PlueckerRelations(benchmark::State& state) {
  const auto v = random_multivector(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(pluecker_relations(v));
}

void BM_PlueckerRelationsSerial(benchmark::State& state) {
  const auto v = random_multivector(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(pluecker_relations_serial(v));
}

void BM_LatticeScanExample1(benchmark::State& state) {
  const auto ms = load("example1.txt");
  for (auto _ : state) benchmark::DoNotOptimize(full_lattice_scan(ms));
}

void kernel_sizes(benchmark::internal::Benchmark* b) {
  b->Args({6, 3})->Args({8, 4})->Args({9, 4})->Unit(benchmark::kMillisecond);
}

}  // namespace

BENCHMARK(BM_ExteriorPower)->Apply(kernel_sizes);
BENCHMARK(BM_ExteriorPowerSerial)->Apply(kernel_sizes);
BENCHMARK(BM_PlueckerRelations)->Apply(kernel_sizes);
BENCHMARK(BM_PlueckerRelationsSerial)->Apply(kernel_sizes);
BENCHMARK(BM_LatticeScanExample1)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
