#include "reeb/metrics/metric.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "reeb/error.hpp"
#include "reeb/sphere/grid.hpp"

namespace reeb {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Vec3 stretch(const EllipsoidMetric& e, const Vec3& v) {
  return Vec3(e.a * v.x(), e.b * v.y(), e.c * v.z());
}

}  // namespace

MetricModel MetricModel::conformal(HarmonicField phi) {
  ConformalMetric m;
  m.laplacian_phi = laplacian(phi);
  m.phi = std::move(phi);
  return MetricModel(std::move(m));
}

MetricModel MetricModel::ellipsoid(double a, double b, double c) {
  if (!(a > 0.0) || !(b > 0.0) || !(c > 0.0)) {
    throw DomainError("ellipsoid metric: axes must be positive");
  }
  std::array<double, 3> axes{a, b, c};
  std::sort(axes.begin(), axes.end());
  return MetricModel(EllipsoidMetric{axes[0], axes[1], axes[2]});
}

MetricModel MetricModel::round(double radius) {
  if (!(radius > 0.0)) throw DomainError("round metric: radius must be positive");
  return MetricModel(RoundMetric{radius});
}

std::string MetricModel::kind() const {
  return std::visit(overloaded{[](const ConformalMetric&) { return std::string("conformal"); },
                               [](const EllipsoidMetric&) { return std::string("ellipsoid"); },
                               [](const RoundMetric&) { return std::string("round"); }},
                    v_);
}

bool MetricModel::is_antipodal(double tol) const {
  if (const auto* c = as<ConformalMetric>()) return c->phi.is_antipodal(tol);
  return true;
}

Eigen::Matrix2d MetricModel::gram(const SpherePoint& p, const Vec3& e1, const Vec3& e2) const {
  return std::visit(
      overloaded{[&](const ConformalMetric& c) -> Eigen::Matrix2d {
                   return std::exp(2.0 * c.phi.value(p)) * Eigen::Matrix2d::Identity();
                 },
                 [&](const EllipsoidMetric& e) -> Eigen::Matrix2d {
                   const Vec3 d1 = stretch(e, e1);
                   const Vec3 d2 = stretch(e, e2);
                   Eigen::Matrix2d m;
                   m << d1.dot(d1), d1.dot(d2), d1.dot(d2), d2.dot(d2);
                   return m;
                 },
                 [&](const RoundMetric& r) -> Eigen::Matrix2d {
                   return r.radius * r.radius * Eigen::Matrix2d::Identity();
                 }},
      v_);
}

double MetricModel::norm_squared(const SpherePoint& p, const Vec3& v) const {
  return std::visit(overloaded{[&](const ConformalMetric& c) {
                                 return std::exp(2.0 * c.phi.value(p)) * v.squaredNorm();
                               },
                               [&](const EllipsoidMetric& e) { return stretch(e, v).squaredNorm(); },
                               [&](const RoundMetric& r) {
                                 return r.radius * r.radius * v.squaredNorm();
                               }},
                    v_);
}

double MetricModel::area_density(const SpherePoint& p) const {
  return std::visit(
      overloaded{[&](const ConformalMetric& c) { return std::exp(2.0 * c.phi.value(p)); },
                 [&](const EllipsoidMetric& e) {
                   // |det Df| on T_p S^2 = abc |Df^{-T} p|
                   const Vec3 n(p.x() / e.a, p.y() / e.b, p.z() / e.c);
                   return e.a * e.b * e.c * n.norm();
                 },
                 [&](const RoundMetric& r) { return r.radius * r.radius; }},
      v_);
}

double MetricModel::curvature(const SpherePoint& p) const {
  return std::visit(
      overloaded{[&](const ConformalMetric& c) {
                   return std::exp(-2.0 * c.phi.value(p)) * (1.0 - c.laplacian_phi.value(p));
                 },
                 [&](const EllipsoidMetric& e) {
                   // K = 1 / (a^2 b^2 c^2 (x^2/a^2 + y^2/b^2 + z^2/c^2)^2) at f(p)
                   const double s2 = p.x() * p.x() / (e.a * e.a) + p.y() * p.y() / (e.b * e.b) +
                                     p.z() * p.z() / (e.c * e.c);
                   const double abc = e.a * e.b * e.c;
                   return 1.0 / (abc * abc * s2 * s2);
                 },
                 [&](const RoundMetric& r) { return 1.0 / (r.radius * r.radius); }},
      v_);
}

double MetricModel::arc_length(const SpherePoint& p, const SpherePoint& q) const {
  const double angle = angular_distance(p, q);
  if (angle < 1e-15) return 0.0;
  if (const auto* r = as<RoundMetric>()) return r->radius * angle;
  // unit tangent at p towards q
  const Vec3 t = project_tangent(p, q.vec()).normalized();
  static const GaussLegendreRule rule = gauss_legendre(4);
  double acc = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double s = 0.5 * angle * (rule.nodes[i] + 1.0);
    const SpherePoint x(std::cos(s) * p.vec() + std::sin(s) * t);
    const Vec3 dx = -std::sin(s) * p.vec() + std::cos(s) * t;  // unit round speed
    acc += rule.weights[i] * std::sqrt(norm_squared(x, dx));
  }
  return 0.5 * angle * acc;
}

int MetricModel::band_limit() const noexcept {
  if (const auto* c = as<ConformalMetric>()) return c->phi.band_limit();
  return 0;
}

}  // namespace reeb
