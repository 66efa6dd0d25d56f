#include <benchmark/benchmark.h>

#include <random>

#include "lemni/analysis.hpp"
#include "lemni/counting.hpp"
#include "lemni/parallel.hpp"

using namespace lemni;

namespace {

const FunctionDef& ratio() {
  static const FunctionDef f = parse("z^2 * (z - 0.1)/(1 - 0.1*z) / ((z - 0.1i)/(1 + 0.1i*z))");
  return f;
}

const JordanCurve& unit() {
  static const JordanCurve c = JordanCurve::circle(0.0, 1.0, 4096);
  return c;
}

std::vector<ComplexValue> grid_points(int n) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  std::vector<ComplexValue> ws;
  while (static_cast<int>(ws.size()) < n) {
    const cplx w(u(rng), u(rng));
    if (std::abs(std::abs(w) - 1.0) > 0.05) ws.emplace_back(w);
  }
  return ws;
}

void BM_CountGrid(benchmark::State& st) {
  const auto ws = grid_points(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(count_on_grid(ratio(), unit(), ws));
  st.SetItemsProcessed(st.iterations() * st.range(0));
}

void BM_CountGridSerial(benchmark::State& st) {
  const auto ws = grid_points(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(count_on_grid_serial(ratio(), unit(), ws));
  st.SetItemsProcessed(st.iterations() * st.range(0));
}

void BM_CurveImage(benchmark::State& st) {
  const bool par = st.range(0) != 0;
  for (auto _ : st) benchmark::DoNotOptimize(CurveImage(ratio(), unit(), par).diameter());
}

void BM_Classify(benchmark::State& st) {
  ClassifyConfig cfg;
  cfg.parallel = st.range(0) != 0;
  SamplePlan plan;
  plan.seed = 3;
  for (auto _ : st) benchmark::DoNotOptimize(classify(ratio(), unit(), unit(), plan, cfg).verdict);
}

}  // namespace

BENCHMARK(BM_CountGrid)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CountGridSerial)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CurveImage)->ArgName("parallel")->Arg(1)->Arg(0)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_Classify)->ArgName("parallel")->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
