#include "reeb/metrics/balance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>

namespace reeb {
namespace {

// Extreme eigenvalues of g relative to g0 on the fiber over p.
Eigen::Vector2d fiber_eigenvalues(const MetricModel& metric, const SpherePoint& p) {
  const auto [e1, e2] = p.tangent_frame();
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> eig(metric.gram(p, e1, e2),
                                                     Eigen::EigenvaluesOnly);
  return eig.eigenvalues();  // ascending
}

}  // namespace

SphereGrid default_grid(const MetricModel& metric) {
  const int n = std::max(64, 2 * metric.band_limit() + 24);
  return SphereGrid(n, 2 * n);
}

FiberBalance balance(const MetricModel& metric, const SphereGrid& grid) {
  FiberBalance out;
  if (const auto* c = metric.as<ConformalMetric>()) {
    const auto ext = find_extrema([&](const SpherePoint& p) { return c->phi.value(p); }, grid,
                                  synthesize(c->phi, grid));
    out.inradius = std::exp(ext.min.value);
    out.circumradius = std::exp(ext.max.value);
    out.beta = std::exp(-2.0 * (ext.max.value - ext.min.value));
  } else if (const auto* e = metric.as<EllipsoidMetric>()) {
    out.inradius = e->a;
    out.circumradius = e->c;
    out.beta = (e->a / e->c) * (e->a / e->c);
  } else if (const auto* r = metric.as<RoundMetric>()) {
    out.inradius = r->radius;
    out.circumradius = r->radius;
    out.beta = 1.0;
  }
  return out;
}

FiberBalance balance(const MetricModel& metric) { return balance(metric, default_grid(metric)); }

FiberBalance fiber_balance_search(const MetricModel& metric, const SphereGrid& grid) {
  std::vector<double> lo(grid.size());
  std::vector<double> hi(grid.size());
  for (int k = 0; k < grid.size(); ++k) {
    const auto ev = fiber_eigenvalues(metric, grid.nodes()[k]);
    lo[k] = ev(0);
    hi[k] = ev(1);
  }
  auto smallest = [&](const SpherePoint& p) { return fiber_eigenvalues(metric, p)(0); };
  auto largest = [&](const SpherePoint& p) { return fiber_eigenvalues(metric, p)(1); };
  const double lmin = find_extrema(smallest, grid, lo).min.value;
  const double lmax = find_extrema(largest, grid, hi).max.value;
  FiberBalance out;
  out.inradius = std::sqrt(lmin);
  out.circumradius = std::sqrt(lmax);
  out.beta = lmin / lmax;
  return out;
}

std::vector<double> curvature_samples(const MetricModel& metric, const SphereGrid& grid) {
  if (const auto* c = metric.as<ConformalMetric>()) {
    // spectral Laplacian on the grid
    const auto phi = synthesize(c->phi, grid);
    const auto lap = synthesize(c->laplacian_phi, grid);
    std::vector<double> k(phi.size());
    for (std::size_t i = 0; i < k.size(); ++i) k[i] = std::exp(-2.0 * phi[i]) * (1.0 - lap[i]);
    return k;
  }
  return grid.sample([&](const SpherePoint& p) { return metric.curvature(p); });
}

CurvatureStats curvature(const MetricModel& metric, const SphereGrid& grid) {
  CurvatureStats out;
  if (const auto* r = metric.as<RoundMetric>()) {
    out.k_min = out.k_max = 1.0 / (r->radius * r->radius);
  } else {
    const auto samples = curvature_samples(metric, grid);
    const auto ext = find_extrema([&](const SpherePoint& p) { return metric.curvature(p); }, grid,
                                  samples);
    out.k_min = ext.min.value;
    out.k_max = ext.max.value;
    out.argmin = ext.min.point;
    out.argmax = ext.max.point;
  }
  out.positive = out.k_min > 0.0;
  out.delta = out.positive ? out.k_min / out.k_max : std::numeric_limits<double>::quiet_NaN();
  return out;
}

CurvatureStats curvature(const MetricModel& metric) {
  return curvature(metric, default_grid(metric));
}

}  // namespace reeb
