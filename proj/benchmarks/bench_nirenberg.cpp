#include <benchmark/benchmark.h>

#include "reeb/nirenberg/gauss_solver.hpp"
#include "reeb/nirenberg/lemmas.hpp"

namespace {

const reeb::ManufacturedField kField{{{reeb::Vec3::UnitZ(), 0.2, 0.5},
                                      {reeb::Vec3(1, 1, 0).normalized(), -0.1, 0.8}}};

void BM_GaussSolve(benchmark::State& state) {
  const auto k = reeb::PrescribedCurvature::manufactured(kField);
  reeb::GaussSolverOptions opts;
  opts.band_limit = static_cast<int>(state.range(0));
  opts.tol = 1e-8;
  for (auto _ : state) benchmark::DoNotOptimize(reeb::solve_gauss_equation(k, opts));
}
BENCHMARK(BM_GaussSolve)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_LemmaChecks(benchmark::State& state) {
  const auto k = reeb::PrescribedCurvature::manufactured(kField);
  const auto sol = reeb::solve_gauss_equation(k);
  for (auto _ : state) {
    benchmark::DoNotOptimize(reeb::check_onofri(sol.u));
    benchmark::DoNotOptimize(reeb::check_gradient_bound(sol, k));
    benchmark::DoNotOptimize(reeb::oscillation_chain(sol));
  }
}
BENCHMARK(BM_LemmaChecks)->Unit(benchmark::kMillisecond);

}  // namespace
