#include <benchmark/benchmark.h>

#include "vinberg/vinberg.hpp"

using namespace vinberg;

static void BM_Charpoly(benchmark::State& state) {
  Sampler rng(1);
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix a = rng.integer_matrix(n, n, 3);
  for (auto _ : state) benchmark::DoNotOptimize(charpoly(a));
}
BENCHMARK(BM_Charpoly)->Arg(4)->Arg(8)->Arg(12);

static void BM_VerifyGrading(benchmark::State& state) {
  const auto gr = build_cyclic_quiver_grading(GradedDims(std::vector<int>{2, 2, 2, 2}));
  for (auto _ : state) benchmark::DoNotOptimize(verify_grading(gr));
}
BENCHMARK(BM_VerifyGrading);

static void BM_InvariantSystem(benchmark::State& state) {
  const auto gr = build_cyclic_quiver_grading(GradedDims(std::vector<int>{3, 3, 2}));
  for (auto _ : state) benchmark::DoNotOptimize(build_invariant_system(gr, 0));
}
BENCHMARK(BM_InvariantSystem);

static void BM_InvariantEvaluate(benchmark::State& state) {
  const GradedDims d(std::vector<int>{3, 3, 2});
  const auto sys = build_invariant_system(build_cyclic_quiver_grading(d), 0);
  Sampler rng(2);
  const auto phi = random_quiver_point(d, rng);
  for (auto _ : state) benchmark::DoNotOptimize(sys.evaluate(phi));
}
BENCHMARK(BM_InvariantEvaluate);

static void BM_JacobsonMorozov(benchmark::State& state) {
  const auto z = hodge_zgrading(GradedDims(std::vector<int>{2, 2, 2, 2}));
  const Matrix e = canonical_nilpotent(z, 1, 2);
  for (auto _ : state) benchmark::DoNotOptimize(jacobson_morozov(e, z));
}
BENCHMARK(BM_JacobsonMorozov);

BENCHMARK_MAIN();
