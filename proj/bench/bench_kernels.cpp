// Serial reference vs OpenMP path for the certification kernels and seed-level runs.
#include <benchmark/benchmark.h>

#include "adapl/experiment.hpp"
#include "adapl/kernels.hpp"

using namespace adapl;

namespace {

const Problem& suite_problem(std::size_t i) {
  static const auto suite = standard_suite();
  return suite[i];
}

kernels::PointSet points(const Problem& p, std::size_t n, std::uint64_t seed) {
  RngStream rng(seed);
  return kernels::sample_box(p.test_box(), n, rng);
}

Execution exec_of(const benchmark::State& state) {
  return state.range(1) == 0 ? Execution::serial : Execution::parallel;
}

void BM_PlScan(benchmark::State& state) {
  const Problem& p = suite_problem(static_cast<std::size_t>(state.range(0)));
  const auto xs = points(p, 100'000, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::pl_ratio_scan(p, xs, kDegenerateGap, exec_of(state)));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(xs.size()));
  state.SetLabel(p.name());
}

void BM_GradientCheck(benchmark::State& state) {
  const Problem& p = suite_problem(static_cast<std::size_t>(state.range(0)));
  const auto xs = points(p, 20'000, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::gradient_check_max_error(p, xs, 1e-5, exec_of(state)));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(xs.size()));
  state.SetLabel(p.name());
}

void BM_Smoothness(benchmark::State& state) {
  const Problem& p = suite_problem(static_cast<std::size_t>(state.range(0)));
  const auto xs = points(p, 100'000, 3);
  const auto ys = points(p, 100'000, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::smoothness_ratio_max(p, xs, ys, exec_of(state)));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(xs.size()));
  state.SetLabel(p.name());
}

void BM_Seeds(benchmark::State& state) {
  ExperimentConfig cfg;
  cfg.problem.kind = "quadratic";
  cfg.problem.eigenvalues = {1.0, 4.0};
  cfg.oracle = OracleSpec{OracleKind::synthetic_noise, {1e-4}, {0.0}, 1};
  cfg.method.h.value = 0.1;
  cfg.run.iterations = 20'000;
  for (std::uint64_t s = 1; s <= 8; ++s) cfg.run.seeds.push_back(s);
  cfg.run.x0.random_box = std::make_pair(-5.0, 5.0);
  const Problem p = build_problem(cfg.problem, ".");
  for (auto _ : state) benchmark::DoNotOptimize(run_seeds(cfg, p, exec_of(state)));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(cfg.run.seeds.size()));
}

}  // namespace

// Args: {problem index in standard_suite(), 0 = serial / 1 = parallel}
BENCHMARK(BM_PlScan)->ArgsProduct({{0, 1, 2, 3}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GradientCheck)->ArgsProduct({{0, 2}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Smoothness)->ArgsProduct({{0, 2}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Seeds)->ArgsProduct({{0}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
