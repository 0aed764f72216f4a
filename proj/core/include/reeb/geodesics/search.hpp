#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "reeb/geodesics/flow.hpp"
#include "reeb/metrics/metric.hpp"

namespace reeb {

struct ClosedGeodesic {
  GeodesicState initial;
  double length = 0.0;            // period at unit speed
  double closure_residual = 0.0;  // phase_distance(initial, flow(initial, length))
  std::string source;             // "principal_section" or "shooting_search"
};

struct SystoleEstimate {
  double value = std::numeric_limits<double>::infinity();
  std::string kind = "upper_bound";
  std::string source;
  bool found = false;             // false: search failure, value is +inf
  std::vector<ClosedGeodesic> candidates;
};

struct SearchOptions {
  int starts = 512;               // low-discrepancy samples of the unit tangent bundle
  double tol = 1e-9;              // closure residual required for acceptance
  std::uint64_t seed = 0;         // offset into the sample sequence
  double window_factor = 3.0;     // period window (0, window_factor * 2 pi circumradius]
  int max_polish = 32;
  double near_closure = 0.5;      // sampled defect below which a return is polished
  double prune_ratio = 1.05;      // ignore returns longer than this times the best length
  double search_rtol = 1e-10;
  double polish_rtol = 1e-12;
};

/// Perimeter of the ellipse with semi-axes (a, b) by the periodic trapezoid rule, doubled
/// until the relative change is below rel_tol.
double ellipse_perimeter(double a, double b, double rel_tol = 1e-14);

/// Perimeters of the coordinate-plane sections with semi-axes (a, b), (a, c), (b, c).
/// Throws DomainError unless the metric is an ellipsoid.
std::array<double, 3> principal_section_lengths(const MetricModel& metric);

/// Principal sections as closed geodesics, residual measured by integration.
std::vector<ClosedGeodesic> principal_sections(const MetricModel& metric,
                                               const FlowOptions& opts = {1e-12, 1e-14});

/// phase_distance between s and its image under the flow for time t.
double closure_residual(const MetricModel& metric, const GeodesicState& s, double t,
                        const FlowOptions& opts = {1e-12, 1e-14});

/// Multistart shooting for closed geodesics; every accepted candidate is polished by
/// Levenberg-Marquardt on (start point, direction, period) until its residual is below tol.
/// The minimum length is an upper bound on the systole.
SystoleEstimate find_systole_upper(const MetricModel& metric, const SearchOptions& opts = {});

}  // namespace reeb
