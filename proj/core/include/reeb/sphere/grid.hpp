#pragma once

#include <span>
#include <vector>

#include "reeb/sphere/point.hpp"

namespace reeb {

struct GaussLegendreRule {
  std::vector<double> nodes;    // ascending in [-1, 1]
  std::vector<double> weights;
};

GaussLegendreRule gauss_legendre(int n);

/// Gauss-Legendre nodes in cos(theta) times uniform longitude.
///
/// Ring i has polar angle theta_i (ascending), column j has phi_j = 2 pi j / n_phi.
/// Flat node index is i * n_phi + j. Weights carry the round area element, so
/// they sum to 4 pi.
class SphereGrid {
 public:
  SphereGrid(int n_theta, int n_phi);

  /// Smallest grid on which band-L fields analyze exactly, with optional oversampling.
  static SphereGrid for_band_limit(int band_limit, int extra = 0);

  int n_theta() const noexcept { return n_theta_; }
  int n_phi() const noexcept { return n_phi_; }
  int size() const noexcept { return n_theta_ * n_phi_; }

  /// Largest L for which products of two band-L fields integrate exactly.
  int max_band_limit() const noexcept;

  int index(int i, int j) const noexcept { return i * n_phi_ + j; }
  double cos_theta(int i) const { return cos_theta_[i]; }
  double sin_theta(int i) const { return sin_theta_[i]; }
  double phi(int j) const;
  double ring_weight(int i) const { return ring_weight_[i]; }

  const std::vector<SpherePoint>& nodes() const noexcept { return nodes_; }
  const std::vector<double>& weights() const noexcept { return weights_; }

  double integrate(std::span<const double> values) const;

  /// Flat index of -node(k). Requires an even n_phi.
  int antipodal_index(int k) const;

  template <class F>
  std::vector<double> sample(F&& f) const {
    std::vector<double> out(nodes_.size());
    for (std::size_t k = 0; k < nodes_.size(); ++k) out[k] = f(nodes_[k]);
    return out;
  }

 private:
  int n_theta_;
  int n_phi_;
  std::vector<double> cos_theta_;
  std::vector<double> sin_theta_;
  std::vector<double> ring_weight_;
  std::vector<SpherePoint> nodes_;
  std::vector<double> weights_;
};

}  // namespace reeb
