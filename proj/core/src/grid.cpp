#include "reeb/sphere/grid.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "reeb/error.hpp"

namespace reeb {

GaussLegendreRule gauss_legendre(int n) {
  if (n < 1) throw DomainError("gauss_legendre: need at least one node");
  GaussLegendreRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // Recompute the derivative at the converged node for the weight.
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

SphereGrid::SphereGrid(int n_theta, int n_phi) : n_theta_(n_theta), n_phi_(n_phi) {
  if (n_theta < 1 || n_phi < 1) {
    throw ResolutionError("SphereGrid: need positive resolution, got " + std::to_string(n_theta) +
                          "x" + std::to_string(n_phi));
  }
  const auto gl = gauss_legendre(n_theta);
  const double dphi = 2.0 * std::numbers::pi / n_phi;
  cos_theta_.resize(n_theta);
  sin_theta_.resize(n_theta);
  ring_weight_.resize(n_theta);
  nodes_.reserve(static_cast<std::size_t>(n_theta) * n_phi);
  weights_.reserve(nodes_.capacity());
  for (int i = 0; i < n_theta; ++i) {
    // theta ascending means cos(theta) descending
    const double z = gl.nodes[n_theta - 1 - i];
    cos_theta_[i] = z;
    sin_theta_[i] = std::sqrt((1.0 - z) * (1.0 + z));
    ring_weight_[i] = gl.weights[n_theta - 1 - i] * dphi;
    for (int j = 0; j < n_phi; ++j) {
      const double ph = j * dphi;
      nodes_.emplace_back(Vec3(sin_theta_[i] * std::cos(ph), sin_theta_[i] * std::sin(ph), z));
      weights_.push_back(ring_weight_[i]);
    }
  }
}

SphereGrid SphereGrid::for_band_limit(int band_limit, int extra) {
  if (band_limit < 0) throw DomainError("SphereGrid::for_band_limit: negative band limit");
  const int n_theta = band_limit + 1 + extra;
  return SphereGrid(n_theta, 2 * n_theta);
}

int SphereGrid::max_band_limit() const noexcept {
  return std::min(n_theta_ - 1, (n_phi_ - 1) / 2);
}

double SphereGrid::phi(int j) const { return 2.0 * std::numbers::pi * j / n_phi_; }

double SphereGrid::integrate(std::span<const double> values) const {
  if (values.size() != weights_.size()) {
    throw DomainError("SphereGrid::integrate: sample count does not match grid");
  }
  double acc = 0.0;
  for (std::size_t k = 0; k < weights_.size(); ++k) acc += weights_[k] * values[k];
  return acc;
}

int SphereGrid::antipodal_index(int k) const {
  if (n_phi_ % 2 != 0) throw DomainError("SphereGrid::antipodal_index: n_phi must be even");
  const int i = k / n_phi_;
  const int j = k % n_phi_;
  return index(n_theta_ - 1 - i, (j + n_phi_ / 2) % n_phi_);
}

}  // namespace reeb
