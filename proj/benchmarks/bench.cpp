#include <benchmark/benchmark.h>

#include <random>

#include "fixtures.hpp"
#include "twistk/algebra.hpp"
#include "twistk/builders.hpp"
#include "twistk/ktheory.hpp"
#include "twistk/twist.hpp"

using namespace twistk;

static void BM_k0_pair(benchmark::State& state) {
  auto g = make_pair_groupoid(static_cast<int>(state.range(0)));
  auto w = TwoCocycle::constant_one(g);
  for (auto _ : state) benchmark::DoNotOptimize(k0(g, w));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_k0_pair)->Arg(2)->Arg(4)->Arg(8)->Arg(12)->Complexity();

static void BM_k0_twisted_z3z3(benchmark::State& state) {
  auto g = fixtures::z3z3_groupoid();
  auto w = fixtures::clock_shift_cocycle(g, 3);
  for (auto _ : state) benchmark::DoNotOptimize(k0(g, w));
}
BENCHMARK(BM_k0_twisted_z3z3);

static void BM_convolve(benchmark::State& state) {
  auto g = make_pair_groupoid(static_cast<int>(state.range(0)));
  auto w = TwoCocycle::constant_one(g);
  std::mt19937 rng(1);
  auto f1 = fixtures::random_element(g, rng);
  auto f2 = fixtures::random_element(g, rng);
  for (auto _ : state) benchmark::DoNotOptimize(convolve(f1, f2, w));
}
BENCHMARK(BM_convolve)->Arg(4)->Arg(8)->Arg(14);

static void BM_reduced_norm(benchmark::State& state) {
  auto g = fixtures::z3z3_groupoid();
  auto w = fixtures::clock_shift_cocycle(g, 3);
  std::mt19937 rng(2);
  auto f = fixtures::random_element(g, rng);
  for (auto _ : state) benchmark::DoNotOptimize(reduced_norm(f, w));
}
BENCHMARK(BM_reduced_norm);

static void BM_sigma_build(benchmark::State& state) {
  auto g = fixtures::z2z2_groupoid();
  auto w = fixtures::clock_shift_cocycle(g, 2);
  for (auto _ : state) benchmark::DoNotOptimize(build_sigma_omega(g, w, 2));
}
BENCHMARK(BM_sigma_build);

BENCHMARK_MAIN();
