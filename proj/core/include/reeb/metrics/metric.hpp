#pragma once

#include <string>
#include <variant>

#include <Eigen/Core>

#include "reeb/sphere/harmonics.hpp"
#include "reeb/sphere/point.hpp"

namespace reeb {

/// g = e^{2 phi} g0.
struct ConformalMetric {
  HarmonicField phi;
  HarmonicField laplacian_phi;
};

/// Pullback of the Euclidean metric under (x, y, z) -> (a x, b y, c z); axes sorted a <= b <= c.
struct EllipsoidMetric {
  double a = 1.0;
  double b = 1.0;
  double c = 1.0;
};

/// Round sphere of radius R, i.e. g = R^2 g0.
struct RoundMetric {
  double radius = 1.0;
};

/// Riemannian metric on S^2, described relative to the round metric g0.
class MetricModel {
 public:
  using Variant = std::variant<ConformalMetric, EllipsoidMetric, RoundMetric>;

  static MetricModel conformal(HarmonicField phi);
  static MetricModel ellipsoid(double a, double b, double c);
  static MetricModel round(double radius = 1.0);

  const Variant& variant() const noexcept { return v_; }
  std::string kind() const;

  template <class T>
  const T* as() const noexcept { return std::get_if<T>(&v_); }

  /// Invariance under the antipodal map.
  bool is_antipodal(double tol = 1e-12) const;

  /// Matrix of g in a g0-orthonormal tangent frame (e1, e2) at p.
  Eigen::Matrix2d gram(const SpherePoint& p, const Vec3& e1, const Vec3& e2) const;

  /// g(v, v) for a tangent vector v at p, given as an ambient vector.
  double norm_squared(const SpherePoint& p, const Vec3& v) const;

  /// dA_g / dA_{g0}.
  double area_density(const SpherePoint& p) const;

  /// Gaussian curvature K_g(p).
  double curvature(const SpherePoint& p) const;

  /// g-length of the minor great-circle arc from p to q.
  double arc_length(const SpherePoint& p, const SpherePoint& q) const;

  /// Band limit needed to resolve the metric on a grid (0 for closed-form variants).
  int band_limit() const noexcept;

 private:
  explicit MetricModel(Variant v) : v_(std::move(v)) {}
  Variant v_;
};

/// Inradius r, circumradius R and balance beta = (r / R)^2 of the unit cosphere bundle.
struct FiberBalance {
  double inradius = 1.0;
  double circumradius = 1.0;
  double beta = 1.0;
};

struct CurvatureStats {
  double k_min = 1.0;
  double k_max = 1.0;
  bool positive = true;    // k_min > 0
  double delta = 1.0;      // k_min / k_max, NaN unless positive
  SpherePoint argmin;
  SpherePoint argmax;
};

struct GeometryReport {
  double area = 0.0;
  double volume_disk_bundle = 0.0;   // 2 pi area
  double diameter = 0.0;
  double diameter_error = 0.0;       // mesh refinement estimate
  double lambda1 = 0.0;
};

}  // namespace reeb
