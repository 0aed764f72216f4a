#include <benchmark/benchmark.h>

#include "reeb/metrics/balance.hpp"
#include "reeb/metrics/geometry.hpp"

namespace {

reeb::MetricModel bumpy() {
  reeb::HarmonicField phi(4);
  phi(2, 0) = 0.1;
  phi(4, 3) = -0.05;
  return reeb::MetricModel::conformal(phi);
}

void BM_Lambda1(benchmark::State& state) {
  const auto m = bumpy();
  const int L = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(reeb::lambda1(m, L));
}
BENCHMARK(BM_Lambda1)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_FastMarching(benchmark::State& state) {
  const reeb::MeshDistance md(reeb::MetricModel::ellipsoid(1.0, 1.3, 2.0),
                              reeb::SphereMesh::icosphere(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(md.distances_from(0));
}
BENCHMARK(BM_FastMarching)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_Diameter(benchmark::State& state) {
  const auto m = reeb::MetricModel::ellipsoid(1.0, 1.3, 2.0);
  for (auto _ : state) benchmark::DoNotOptimize(reeb::diameter(m));
}
BENCHMARK(BM_Diameter)->Unit(benchmark::kMillisecond);

void BM_Curvature(benchmark::State& state) {
  const auto m = bumpy();
  for (auto _ : state) benchmark::DoNotOptimize(reeb::curvature(m));
}
BENCHMARK(BM_Curvature)->Unit(benchmark::kMillisecond);

}  // namespace
