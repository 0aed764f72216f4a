#pragma once

#include <algorithm>
#include <cmath>
#include <utility>

#include <Eigen/Core>
#include <Eigen/Geometry>

#include "reeb/error.hpp"

namespace reeb {

using Vec3 = Eigen::Vector3d;

/// A point of the unit sphere S^2 in R^3. Always stored normalized.
class SpherePoint {
 public:
  SpherePoint() : p_(0.0, 0.0, 1.0) {}

  explicit SpherePoint(const Vec3& v) : p_(v) {
    const double n = v.norm();
    if (!(n > 0.0) || !std::isfinite(n)) {
      throw DomainError("SpherePoint: cannot normalize a zero or non-finite vector");
    }
    p_ /= n;
  }

  SpherePoint(double x, double y, double z) : SpherePoint(Vec3(x, y, z)) {}

  static SpherePoint from_angles(double theta, double phi) {
    const double s = std::sin(theta);
    return SpherePoint(Vec3(s * std::cos(phi), s * std::sin(phi), std::cos(theta)));
  }

  const Vec3& vec() const noexcept { return p_; }
  double x() const noexcept { return p_.x(); }
  double y() const noexcept { return p_.y(); }
  double z() const noexcept { return p_.z(); }

  double theta() const { return std::acos(std::clamp(p_.z(), -1.0, 1.0)); }
  double phi() const { return std::atan2(p_.y(), p_.x()); }

  SpherePoint antipode() const { return SpherePoint(-p_); }

  /// Orthonormal tangent frame. (e_theta, e_phi) away from the poles.
  std::pair<Vec3, Vec3> tangent_frame() const {
    const double rho = std::hypot(p_.x(), p_.y());
    if (rho > 1e-9) {
      const double ct = p_.z();
      const double cp = p_.x() / rho;
      const double sp = p_.y() / rho;
      return {Vec3(ct * cp, ct * sp, -rho), Vec3(-sp, cp, 0.0)};
    }
    Vec3 e1 = Vec3::UnitX() - p_.x() * p_;
    e1.normalize();
    return {e1, p_.cross(e1)};
  }

 private:
  Vec3 p_;
};

inline Vec3 project_tangent(const SpherePoint& p, const Vec3& v) {
  return v - v.dot(p.vec()) * p.vec();
}

inline double chord_distance(const SpherePoint& a, const SpherePoint& b) {
  return (a.vec() - b.vec()).norm();
}

inline double angular_distance(const SpherePoint& a, const SpherePoint& b) {
  return std::atan2(a.vec().cross(b.vec()).norm(), a.vec().dot(b.vec()));
}

/// Round exponential map: follow the great circle through p in direction t for arclength |t|.
inline SpherePoint exp_map(const SpherePoint& p, const Vec3& t) {
  const Vec3 tan = project_tangent(p, t);
  const double s = tan.norm();
  if (s < 1e-300) return p;
  return SpherePoint(std::cos(s) * p.vec() + std::sin(s) * (tan / s));
}

}  // namespace reeb
