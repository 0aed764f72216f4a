#include "reeb/geodesics/flow.hpp"

#include <cmath>
#include <variant>

#include "reeb/error.hpp"

namespace reeb {
namespace {

// Phase vector layout: (x, v) on S^2 for conformal and round metrics, (X, X') on the
// ellipsoid surface for ellipsoids.
struct System {
  const MetricModel& metric;
  Vec3 axes = Vec3::Ones();  // ellipsoid semi-axes

  bool ambient() const { return metric.as<EllipsoidMetric>() != nullptr; }

  PhaseVector encode(const GeodesicState& s) const {
    PhaseVector y;
    if (ambient()) {
      y << axes.cwiseProduct(s.position.vec()), axes.cwiseProduct(s.velocity);
    } else {
      y << s.position.vec(), s.velocity;
    }
    return y;
  }

  GeodesicState decode(const PhaseVector& y) const {
    Vec3 x = y.head<3>();
    Vec3 v = y.tail<3>();
    if (ambient()) {
      x = x.cwiseQuotient(axes);
      v = v.cwiseQuotient(axes);
    }
    return {SpherePoint(x), v};
  }

  PhaseVector rhs(const PhaseVector& y) const {
    const Vec3 x = y.head<3>();
    const Vec3 v = y.tail<3>();
    PhaseVector dy;
    dy.head<3>() = v;
    if (ambient()) {
      const Vec3 inv2 = axes.cwiseProduct(axes).cwiseInverse();
      const Vec3 n = x.cwiseProduct(inv2);
      const double lambda = v.cwiseProduct(v).dot(inv2) / n.squaredNorm();
      dy.tail<3>() = -lambda * n;
      return dy;
    }
    const double v2 = v.squaredNorm();
    Vec3 acc = -v2 * x;
    if (const auto* c = metric.as<ConformalMetric>()) {
      Vec3 grad;
      c->phi.value_and_gradient(SpherePoint(x), grad);
      acc += -2.0 * grad.dot(v) * v + v2 * grad;
    }
    dy.tail<3>() = acc;
    return dy;
  }

  void project(PhaseVector& y) const {
    Vec3 x = y.head<3>();
    Vec3 v = y.tail<3>();
    if (ambient()) {
      const Vec3 inv2 = axes.cwiseProduct(axes).cwiseInverse();
      x /= std::sqrt(x.cwiseProduct(x).dot(inv2));
      const Vec3 n = x.cwiseProduct(inv2);
      v -= (v.dot(n) / n.squaredNorm()) * n;
    } else {
      x.normalize();
      v -= v.dot(x) * x;
    }
    y << x, v;
  }
};

System make_system(const MetricModel& metric) {
  System s{metric};
  if (const auto* e = metric.as<EllipsoidMetric>()) s.axes = Vec3(e->a, e->b, e->c);
  return s;
}

}  // namespace

GeodesicState unit_state(const MetricModel& metric, const SpherePoint& p, const Vec3& direction) {
  const Vec3 t = project_tangent(p, direction);
  const double n2 = metric.norm_squared(p, t);
  if (!(n2 > 0.0)) throw DomainError("unit_state: direction has no tangential component");
  return {p, t / std::sqrt(n2)};
}

GeodesicState reversed(const GeodesicState& s) { return {s.position, -s.velocity}; }

double phase_distance(const GeodesicState& a, const GeodesicState& b) {
  return std::sqrt((a.position.vec() - b.position.vec()).squaredNorm() +
                   (a.velocity - b.velocity).squaredNorm());
}

FlowResult flow(const MetricModel& metric, const GeodesicState& s0, double t,
                const FlowOptions& opts, const FlowObserver& observe) {
  const System sys = make_system(metric);
  OdeOptions ode;
  ode.rtol = opts.rtol;
  ode.atol = opts.atol;
  FlowResult out;
  out.energy_drift = std::abs(metric.norm_squared(s0.position, s0.velocity) - 1.0);
  OdeStats stats;
  const PhaseVector y = integrate_dp45(
      [&](const PhaseVector& y) { return sys.rhs(y); }, sys.encode(s0), t, ode,
      [&](PhaseVector& y) { sys.project(y); },
      [&](double time, const PhaseVector& y) {
        const GeodesicState s = sys.decode(y);
        out.energy_drift =
            std::max(out.energy_drift, std::abs(metric.norm_squared(s.position, s.velocity) - 1.0));
        if (observe) observe(time, s);
      },
      &stats);
  out.state = sys.decode(y);
  out.steps = stats.accepted;
  return out;
}

std::vector<std::pair<double, GeodesicState>> trajectory(const MetricModel& metric,
                                                         const GeodesicState& s0, double t,
                                                         const FlowOptions& opts) {
  std::vector<std::pair<double, GeodesicState>> out{{0.0, s0}};
  flow(metric, s0, t, opts, [&](double time, const GeodesicState& s) { out.emplace_back(time, s); });
  return out;
}

}  // namespace reeb
