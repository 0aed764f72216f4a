#include "reeb/geodesics/search.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>

#include <Eigen/Dense>
#include <boost/random/sobol.hpp>

#include "reeb/error.hpp"
#include "reeb/metrics/balance.hpp"

namespace reeb {

double ellipse_perimeter(double a, double b, double rel_tol) {
  if (!(a > 0.0) || !(b > 0.0)) throw DomainError("ellipse_perimeter: semi-axes must be positive");
  auto speed = [&](double t) { return std::hypot(a * std::sin(t), b * std::cos(t)); };
  int n = 8;
  double prev = 0.0;
  for (int k = 0; k < n; ++k) prev += speed(2.0 * std::numbers::pi * k / n);
  prev *= 2.0 * std::numbers::pi / n;
  for (; n < (1 << 22); n *= 2) {
    // Odd nodes of the doubled rule.
    double odd = 0.0;
    for (int k = 0; k < n; ++k) odd += speed(2.0 * std::numbers::pi * (k + 0.5) / n);
    const double next = 0.5 * (prev + odd * 2.0 * std::numbers::pi / n);
    if (std::abs(next - prev) <= rel_tol * next) return next;
    prev = next;
  }
  return prev;
}

std::array<double, 3> principal_section_lengths(const MetricModel& metric) {
  const auto* e = metric.as<EllipsoidMetric>();
  if (!e) throw DomainError("principal_section_lengths: metric is not an ellipsoid");
  return {ellipse_perimeter(e->a, e->b), ellipse_perimeter(e->a, e->c),
          ellipse_perimeter(e->b, e->c)};
}

double closure_residual(const MetricModel& metric, const GeodesicState& s, double t,
                        const FlowOptions& opts) {
  return phase_distance(s, flow(metric, s, t, opts).state);
}

std::vector<ClosedGeodesic> principal_sections(const MetricModel& metric,
                                               const FlowOptions& opts) {
  const auto lengths = principal_section_lengths(metric);
  const std::array<std::pair<Vec3, Vec3>, 3> data = {{
      {Vec3::UnitX(), Vec3::UnitY()},
      {Vec3::UnitX(), Vec3::UnitZ()},
      {Vec3::UnitY(), Vec3::UnitZ()},
  }};
  std::vector<ClosedGeodesic> out;
  for (int i = 0; i < 3; ++i) {
    const auto s = unit_state(metric, SpherePoint(data[i].first), data[i].second);
    out.push_back({s, lengths[i], closure_residual(metric, s, lengths[i], opts),
                   "principal_section"});
  }
  return out;
}

namespace {

// Start parameters: offset (u1, u2) in the tangent plane of a base point, direction angle
// alpha in a frame carried from the base point, period T.
struct ShootingProblem {
  const MetricModel& metric;
  SpherePoint base;
  Vec3 f1;
  Vec3 f2;
  FlowOptions opts;

  GeodesicState start(const Eigen::Vector4d& z) const {
    const SpherePoint p = exp_map(base, z[0] * f1 + z[1] * f2);
    const Vec3 g1 = project_tangent(p, f1).normalized();
    const Vec3 g2 = p.vec().cross(g1);
    return unit_state(metric, p, std::cos(z[2]) * g1 + std::sin(z[2]) * g2);
  }

  Eigen::Matrix<double, 6, 1> residual(const Eigen::Vector4d& z) const {
    const GeodesicState s = start(z);
    const GeodesicState e = flow(metric, s, z[3], opts).state;
    Eigen::Matrix<double, 6, 1> r;
    r << e.position.vec() - s.position.vec(), e.velocity - s.velocity;
    return r;
  }
};

struct Return {
  double time;
  double defect;
  GeodesicState state;
};

std::optional<ClosedGeodesic> polish(const MetricModel& metric, const Return& ret,
                                     const SearchOptions& opts) {
  const auto [f1, f2] = ret.state.position.tangent_frame();
  const Vec3 v = ret.state.velocity;
  ShootingProblem prob{metric, ret.state.position, f1, f2, {opts.polish_rtol, 1e-14}};
  Eigen::Vector4d z(0.0, 0.0, std::atan2(v.dot(f2), v.dot(f1)), ret.time);
  try {
    auto r = prob.residual(z);
    double mu = 1e-3;
    int stalled = 0;
    for (int it = 0; it < 30 && r.norm() >= opts.tol && stalled < 3; ++it) {
      const double before = r.norm();
      Eigen::Matrix<double, 6, 4> jac;
      for (int k = 0; k < 4; ++k) {
        const double h = 1e-7;
        Eigen::Vector4d zp = z;
        zp[k] += h;
        jac.col(k) = (prob.residual(zp) - r) / h;
      }
      const Eigen::Matrix4d jtj = jac.transpose() * jac;
      const Eigen::Vector4d jtr = jac.transpose() * r;
      bool improved = false;
      for (int tries = 0; tries < 12; ++tries) {
        Eigen::Matrix4d a = jtj;
        a.diagonal().array() += mu * (jtj.diagonal().array() + 1e-12);
        const Eigen::Vector4d step = a.ldlt().solve(-jtr);
        const Eigen::Vector4d trial = z + step;
        if (trial[3] <= 0.0) {
          mu *= 10.0;
          continue;
        }
        const auto rt = prob.residual(trial);
        if (rt.norm() < r.norm()) {
          z = trial;
          r = rt;
          mu = std::max(mu / 10.0, 1e-12);
          improved = true;
          break;
        }
        mu *= 10.0;
      }
      if (!improved) break;
      // Slow linear progress means a residual minimum that is not a closed orbit.
      stalled = r.norm() > 0.5 * before ? stalled + 1 : 0;
    }
    if (r.norm() >= opts.tol) return std::nullopt;
    return ClosedGeodesic{prob.start(z), z[3], r.norm(), "shooting_search"};
  } catch (const StiffnessError&) {
    return std::nullopt;
  } catch (const DomainError&) {
    return std::nullopt;
  }
}

bool same_orbit(const MetricModel& metric, const ClosedGeodesic& c, const Return& r) {
  if (std::abs(c.length - r.time) > 1e-3 * c.length) return false;
  // Does the known orbit pass close to this return's start, in phase space?
  double best = std::numeric_limits<double>::infinity();
  flow(metric, c.initial, c.length, {1e-8, 1e-10}, [&](double, const GeodesicState& s) {
    best = std::min(best, phase_distance(s, r.state));
  });
  return best < 0.05;
}

}  // namespace

SystoleEstimate find_systole_upper(const MetricModel& metric, const SearchOptions& opts) {
  if (opts.starts < 0 || !(opts.tol > 0.0)) {
    throw DomainError("find_systole_upper: starts must be >= 0 and tol > 0");
  }
  SystoleEstimate est;
  double best = std::numeric_limits<double>::infinity();
  auto accept = [&](const ClosedGeodesic& c) {
    est.candidates.push_back(c);
    best = std::min(best, c.length);
  };
  if (metric.as<EllipsoidMetric>()) {
    for (const auto& c : principal_sections(metric)) accept(c);
  }

  const double window = opts.window_factor * 2.0 * std::numbers::pi * balance(metric).circumradius;
  boost::random::sobol qrng(3);
  qrng.seed(opts.seed * static_cast<std::uint64_t>(std::max(opts.starts, 1)));
  const double scale = 1.0 / (static_cast<double>(qrng.max()) + 1.0);

  int polished = 0;
  std::vector<ClosedGeodesic> found;
  for (int i = 0; i < opts.starts; ++i) {
    const double u1 = qrng() * scale;
    const double u2 = qrng() * scale;
    const double u3 = qrng() * scale;
    const double z = 2.0 * u1 - 1.0;
    const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
    const SpherePoint p(Vec3(rho * std::cos(2.0 * std::numbers::pi * u2),
                             rho * std::sin(2.0 * std::numbers::pi * u2), z));
    const auto [e1, e2] = p.tangent_frame();
    const double ang = 2.0 * std::numbers::pi * u3;
    const GeodesicState s0 = unit_state(metric, p, std::cos(ang) * e1 + std::sin(ang) * e2);

    const double horizon = std::min(window, opts.prune_ratio * best);
    // Local minima of the sampled closure defect, once the orbit has left the start.
    std::vector<Return> returns;
    bool armed = false;
    double d_prev2 = 0.0, d_prev = 0.0, t_prev = 0.0;
    int samples = 0;
    try {
      flow(metric, s0, horizon, {opts.search_rtol, 1e-12}, [&](double t, const GeodesicState& s) {
        const double d = phase_distance(s0, s);
        if (!armed) {
          armed = d > opts.near_closure;
        } else if (samples >= 2 && d_prev < d_prev2 && d_prev <= d &&
                   d_prev < opts.near_closure) {
          returns.push_back({t_prev, d_prev, s0});
        }
        d_prev2 = d_prev;
        d_prev = d;
        t_prev = t;
        ++samples;
      });
    } catch (const StiffnessError&) {
      continue;
    }
    if (armed && d_prev < opts.near_closure && samples >= 2 && d_prev < d_prev2) {
      returns.push_back({t_prev, d_prev, s0});
    }

    for (const auto& ret : returns) {
      if (polished >= opts.max_polish) break;
      if (ret.time > opts.prune_ratio * best) break;
      const bool known = std::any_of(found.begin(), found.end(), [&](const ClosedGeodesic& c) {
        return same_orbit(metric, c, ret);
      });
      if (known) continue;
      ++polished;
      if (auto c = polish(metric, ret, opts)) {
        found.push_back(*c);
        accept(*c);
        break;  // shorter returns of this start were tried first
      }
    }
  }

  est.found = !est.candidates.empty();
  if (est.found) {
    std::stable_sort(est.candidates.begin(), est.candidates.end(),
                     [](const ClosedGeodesic& a, const ClosedGeodesic& b) {
                       return a.length < b.length;
                     });
    est.value = est.candidates.front().length;
    est.source = est.candidates.front().source;
  }
  return est;
}

}  // namespace reeb
