#include <benchmark/benchmark.h>

#include <cmath>
#include <random>

#include "toricq/lattice_geometry.hpp"
#include "toricq/monoid.hpp"
#include "toricq/qubit_toric.hpp"
#include "toricq/segre.hpp"
#include "toricq/toric_ideal.hpp"

using namespace toricq;

static void BM_DualCone(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  std::mt19937 rng(1);
  std::uniform_int_distribution<long> entry(-5, 5);
  IntMatrix gens;
  for (std::size_t k = 0; k < 2 * n; ++k) {
    IntVector g;
    for (std::size_t i = 0; i < n; ++i) g.emplace_back(entry(rng));
    gens.push_back(g);
  }
  const LatticeCone c(n, gens);
  for (auto _ : state) benchmark::DoNotOptimize(dual_cone(c));
}
BENCHMARK(BM_DualCone)->DenseRange(2, 6);

static void BM_NormalFanCube(benchmark::State& state) {
  const auto p = multiqubit_polytope(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(normal_fan(p));
}
BENCHMARK(BM_NormalFanCube)->DenseRange(2, 4);

static void BM_HilbertBasis(benchmark::State& state) {
  const long h = state.range(0);
  const LatticeCone c(3, {make_int_vector({1, 0, 0}), make_int_vector({0, 1, 0}), make_int_vector({1, 1, h})});
  for (auto _ : state) benchmark::DoNotOptimize(hilbert_basis(c));
}
BENCHMARK(BM_HilbertBasis)->Arg(3)->Arg(9)->Arg(27);

static void BM_ToricIdealQubits(benchmark::State& state) {
  const std::size_t m = static_cast<std::size_t>(state.range(0));
  const MonomialMap map(m, parameterization(m).exponents);
  for (auto _ : state) benchmark::DoNotOptimize(toric_ideal_binomials(map, 2));
}
BENCHMARK(BM_ToricIdealQubits)->Arg(3)->Arg(4);

static void BM_SegreMinors(benchmark::State& state) {
  const SystemShape s(std::vector<std::size_t>(static_cast<std::size_t>(state.range(0)), 2));
  for (auto _ : state) benchmark::DoNotOptimize(segre_minors(s));
}
BENCHMARK(BM_SegreMinors)->DenseRange(2, 6);

static void BM_IsSeparable(benchmark::State& state) {
  const std::size_t m = static_cast<std::size_t>(state.range(0));
  std::mt19937 rng(2);
  std::normal_distribution<double> g;
  std::vector<Amplitude> a(std::size_t{1} << m);
  for (auto& x : a) x = Amplitude(g(rng), g(rng));
  const PureState<Amplitude> s(SystemShape(std::vector<std::size_t>(m, 2)), a);
  for (auto _ : state) benchmark::DoNotOptimize(is_separable(s, 1e-10));
}
BENCHMARK(BM_IsSeparable)->DenseRange(2, 6);

BENCHMARK_MAIN();
