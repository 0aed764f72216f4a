#include <benchmark/benchmark.h>

#include "reeb/geodesics/flow.hpp"
#include "reeb/geodesics/search.hpp"

namespace {

void BM_FlowEllipsoid(benchmark::State& state) {
  const auto m = reeb::MetricModel::ellipsoid(1.0, 1.3, 2.0);
  const auto s = reeb::unit_state(m, reeb::SpherePoint(0.3, 0.5, 0.8), reeb::Vec3(1, 0, 0));
  for (auto _ : state) benchmark::DoNotOptimize(reeb::flow(m, s, 20.0));
}
BENCHMARK(BM_FlowEllipsoid)->Unit(benchmark::kMillisecond);

void BM_FlowConformal(benchmark::State& state) {
  reeb::HarmonicField phi(4);
  phi(2, 1) = 0.1;
  phi(4, -2) = 0.05;
  const auto m = reeb::MetricModel::conformal(phi);
  const auto s = reeb::unit_state(m, reeb::SpherePoint(0.3, 0.5, 0.8), reeb::Vec3(1, 0, 0));
  for (auto _ : state) benchmark::DoNotOptimize(reeb::flow(m, s, 20.0));
}
BENCHMARK(BM_FlowConformal)->Unit(benchmark::kMillisecond);

void BM_SystoleSearch(benchmark::State& state) {
  const auto m = reeb::MetricModel::ellipsoid(1.0, 1.3, 2.0);
  reeb::SearchOptions opts;
  opts.starts = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(reeb::find_systole_upper(m, opts));
}
BENCHMARK(BM_SystoleSearch)->Arg(32)->Unit(benchmark::kMillisecond)->Iterations(1);

}  // namespace
