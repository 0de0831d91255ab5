#include <benchmark/benchmark.h>

#include "romp/oracle.hpp"
#include "romp/solver.hpp"

namespace {

using namespace romp;

// Staircase with `steps` foundation points touching both axes.
Pattern staircase_of(unsigned steps) {
  std::vector<LatticePoint> points;
  for (unsigned i = 0; i < steps; ++i) points.push_back({i, steps - 1 - i});
  return Pattern::from_points(points);
}

void BM_SolveTypeThree(benchmark::State& state) {
  const auto mu = random_measure(42, static_cast<unsigned>(state.range(0)), 64, Support::anywhere);
  const auto inst = generate_instance(mu, staircase_of(static_cast<unsigned>(state.range(1))));
  for (auto _ : state) benchmark::DoNotOptimize(solve_canonical(inst));
}
BENCHMARK(BM_SolveTypeThree)->ArgsProduct({{1, 6, 24}, {2, 4, 8}});

void BM_SolveTypeFour(benchmark::State& state) {
  const auto mu = random_measure(42, static_cast<unsigned>(state.range(0)), 64, Support::open);
  const auto inst = generate_instance(mu, Pattern::from_points({{1, 3}, {2, 2}, {3, 1}}));
  for (auto _ : state) benchmark::DoNotOptimize(solve_canonical(inst));
}
BENCHMARK(BM_SolveTypeFour)->Arg(1)->Arg(6)->Arg(24);

void BM_SolveAllPairs(benchmark::State& state) {
  const auto mu = random_measure(7, 6, 64, Support::anywhere);
  const auto inst = generate_instance(mu, staircase_of(static_cast<unsigned>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(solve_canonical(inst, PairMode::all_pairs));
}
BENCHMARK(BM_SolveAllPairs)->Arg(2)->Arg(4)->Arg(8);

void BM_GenerateInstance(benchmark::State& state) {
  const auto mu = random_measure(3, static_cast<unsigned>(state.range(0)), 64, Support::anywhere);
  const auto pattern = staircase_of(6);
  for (auto _ : state) benchmark::DoNotOptimize(generate_instance(mu, pattern));
}
BENCHMARK(BM_GenerateInstance)->Arg(1)->Arg(6)->Arg(24);

void BM_Verify(benchmark::State& state) {
  const auto mu = random_measure(5, static_cast<unsigned>(state.range(0)), 64, Support::anywhere);
  const auto inst = generate_instance(mu, staircase_of(4));
  for (auto _ : state) benchmark::DoNotOptimize(verify_solution(inst, mu, default_moment_bound(mu)));
}
BENCHMARK(BM_Verify)->Arg(1)->Arg(6)->Arg(24);

}  // namespace

BENCHMARK_MAIN();
