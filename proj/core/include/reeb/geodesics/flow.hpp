#pragma once

#include <functional>
#include <vector>

#include "reeb/geodesics/integrator.hpp"
#include "reeb/metrics/metric.hpp"
#include "reeb/sphere/point.hpp"

namespace reeb {

/// A point of the unit tangent bundle of (S^2, g): velocity tangent to S^2 at position,
/// given as an ambient vector, with g(v, v) = 1.
struct GeodesicState {
  SpherePoint position;
  Vec3 velocity = Vec3::Zero();
};

/// Rescales a nonzero tangent direction at p to g-unit speed.
GeodesicState unit_state(const MetricModel& metric, const SpherePoint& p, const Vec3& direction);

/// Reverses the direction of travel.
GeodesicState reversed(const GeodesicState& s);

/// Euclidean distance in R^6 between (position, velocity) pairs.
double phase_distance(const GeodesicState& a, const GeodesicState& b);

struct FlowOptions {
  double rtol = 1e-10;
  double atol = 1e-12;
};

struct FlowResult {
  GeodesicState state;
  double energy_drift = 0.0;   // max |g(v, v) - 1| over accepted steps
  long steps = 0;
};

using FlowObserver = std::function<void(double, const GeodesicState&)>;

/// Geodesic flow for time t (either sign). Conformal and round metrics integrate
/// x'' = -|v|^2 x - 2 (grad phi . v) v + |v|^2 grad phi on S^2; ellipsoids integrate the
/// constrained ambient equation on the embedded surface. Speed is never renormalized, so
/// energy_drift measures integration error.
FlowResult flow(const MetricModel& metric, const GeodesicState& s0, double t,
                const FlowOptions& opts = {}, const FlowObserver& observe = {});

/// Samples of the trajectory at every accepted step, starting with s0.
std::vector<std::pair<double, GeodesicState>> trajectory(const MetricModel& metric,
                                                         const GeodesicState& s0, double t,
                                                         const FlowOptions& opts = {});

}  // namespace reeb
