#include <benchmark/benchmark.h>

#include <random>

#include "reeb/sphere/green.hpp"
#include "reeb/sphere/harmonics.hpp"

namespace {

reeb::HarmonicField noise(int L) {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> n;
  reeb::HarmonicField f(L);
  for (double& c : f.coeffs()) c = n(rng);
  return f;
}

void BM_Synthesize(benchmark::State& state) {
  const int L = static_cast<int>(state.range(0));
  const reeb::SphericalTransform t(reeb::SphereGrid::for_band_limit(L), L);
  const auto f = noise(L);
  for (auto _ : state) benchmark::DoNotOptimize(t.synthesize(f));
}
BENCHMARK(BM_Synthesize)->Arg(16)->Arg(32)->Arg(64);

void BM_Analyze(benchmark::State& state) {
  const int L = static_cast<int>(state.range(0));
  const reeb::SphericalTransform t(reeb::SphereGrid::for_band_limit(L), L);
  const auto values = t.synthesize(noise(L));
  for (auto _ : state) benchmark::DoNotOptimize(t.analyze(values));
}
BENCHMARK(BM_Analyze)->Arg(16)->Arg(32)->Arg(64);

void BM_GreenIntegral(benchmark::State& state) {
  const reeb::SpherePoint p(0.2, -0.4, 0.9);
  for (auto _ : state) benchmark::DoNotOptimize(reeb::green_integral(p));
}
BENCHMARK(BM_GreenIntegral);

}  // namespace
