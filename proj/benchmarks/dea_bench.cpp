#include <benchmark/benchmark.h>

#include <random>
#include <string>

#include "uniperf/assessment.hpp"
#include "uniperf/config.hpp"
#include "uniperf/dea.hpp"
#include "uniperf/ingest.hpp"

namespace {

using namespace uniperf;

SdsDataset random_sds(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> years(0.0, 60.0), ss(1.0, 200.0);
  SdsDataset ds{"BENCH/01", {}};
  for (int i = 0; i < n; ++i) {
    auto input = DmuInput::make("U" + std::to_string(i), ds.sds_id, years(rng), years(rng),
                                years(rng) + 0.5);
    ds.dmus.push_back({input, ss(rng)});
  }
  return ds;
}

AssessmentDataset chim08() {
  InputFiles files;
  files.staff = UNIPERF_BENCH_STAFF;
  return ingest(files);
}

void BM_Chim08Assessment(benchmark::State& state) {
  const auto data = chim08();
  AssessmentConfig config;
  for (auto _ : state) benchmark::DoNotOptimize(run_assessment(data, config));
}
BENCHMARK(BM_Chim08Assessment)->Unit(benchmark::kMicrosecond);

void BM_EvaluateSds(benchmark::State& state) {
  const auto ds = random_sds(static_cast<int>(state.range(0)), 42);
  EvaluateOptions opts;
  opts.workers = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_sds(ds, CostVector{}, opts));
}
BENCHMARK(BM_EvaluateSds)
    ->ArgsProduct({{28, 64, 128, 256}, {1, 4}})
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
