#include "reeb/metrics/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "reeb/error.hpp"
#include "reeb/metrics/balance.hpp"
#include "reeb/sphere/harmonics.hpp"

namespace reeb {

double area(const MetricModel& metric, const SphereGrid& grid) {
  if (const auto* r = metric.as<RoundMetric>()) {
    return 4.0 * std::numbers::pi * r->radius * r->radius;
  }
  if (const auto* c = metric.as<ConformalMetric>()) {
    auto density = synthesize(c->phi, grid);
    for (double& v : density) v = std::exp(2.0 * v);
    return grid.integrate(density);
  }
  return grid.integrate(grid.sample([&](const SpherePoint& p) { return metric.area_density(p); }));
}

double area(const MetricModel& metric) { return area(metric, default_grid(metric)); }

double total_curvature(const MetricModel& metric, const SphereGrid& grid) {
  return grid.integrate(grid.sample(
      [&](const SpherePoint& p) { return metric.curvature(p) * metric.area_density(p); }));
}

double lambda1(const MetricModel& metric, int band_limit) {
  if (band_limit < 1) {
    throw ResolutionError("lambda1: band limit " + std::to_string(band_limit) +
                          " cannot represent a nonconstant eigenfunction");
  }
  const int L = band_limit;
  const int n = harmonic_count(L);
  const int nt = 2 * L + 2 * metric.band_limit() + 16;
  const SphereGrid grid(nt, 2 * nt);
  const int N = grid.size();

  Eigen::MatrixXd values(N, n);
  Eigen::MatrixXd g1(N, n);
  Eigen::MatrixXd g2(N, n);
  Eigen::VectorXd mass_w(N);
  Eigen::VectorXd d11(N), d12(N), d22(N);
  std::vector<double> y(n);
  std::vector<Vec3> grad(n);
  for (int k = 0; k < N; ++k) {
    const SpherePoint& p = grid.nodes()[k];
    const auto [e1, e2] = p.tangent_frame();
    real_harmonics_with_gradient(L, p.vec(), y, grad);
    for (int i = 0; i < n; ++i) {
      values(k, i) = y[i];
      g1(k, i) = grad[i].dot(e1);
      g2(k, i) = grad[i].dot(e2);
    }
    // Dirichlet form density: g^{-1} sqrt(det g) in the g0-orthonormal frame.
    const Eigen::Matrix2d m = metric.gram(p, e1, e2);
    const double sq = std::sqrt(m.determinant());
    const Eigen::Matrix2d dm = m.inverse() * sq;
    const double w = grid.weights()[k];
    mass_w(k) = w * sq;
    d11(k) = w * dm(0, 0);
    d12(k) = w * dm(0, 1);
    d22(k) = w * dm(1, 1);
  }
  const Eigen::MatrixXd h1 = d11.asDiagonal() * g1 + d12.asDiagonal() * g2;
  const Eigen::MatrixXd h2 = d12.asDiagonal() * g1 + d22.asDiagonal() * g2;
  Eigen::MatrixXd stiffness = g1.transpose() * h1 + g2.transpose() * h2;
  Eigen::MatrixXd mass = values.transpose() * (mass_w.asDiagonal() * values);
  stiffness = 0.5 * (stiffness + stiffness.transpose()).eval();
  mass = 0.5 * (mass + mass.transpose()).eval();

  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> eig(stiffness, mass,
                                                                Eigen::EigenvaluesOnly);
  if (eig.info() != Eigen::Success) throw SolverError("lambda1: eigen solve failed", 0.0, 0);
  // eigenvalue 0 belongs to the constants
  return eig.eigenvalues()(1);
}

GeometryReport geometry(const MetricModel& metric, const GeometryOptions& opts) {
  GeometryReport out;
  out.area = area(metric);
  out.volume_disk_bundle = 2.0 * std::numbers::pi * out.area;
  const auto d = diameter(metric, opts.diameter);
  out.diameter = d.value;
  out.diameter_error = d.error_estimate;
  out.lambda1 = lambda1(metric, opts.lambda1_band_limit);
  return out;
}

}  // namespace reeb
