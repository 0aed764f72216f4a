#pragma once

#include <vector>

#include "reeb/metrics/metric.hpp"
#include "reeb/sphere/extrema.hpp"
#include "reeb/sphere/grid.hpp"

namespace reeb {

/// Grid used by default for pointwise scans and quadrature of a metric.
SphereGrid default_grid(const MetricModel& metric);

/// Fiberwise inradius, circumradius and beta.
///
/// Conformal: extrema of e^phi (grid scan plus local refinement). Ellipsoid: (a, c).
/// Round: (R, R).
FiberBalance balance(const MetricModel& metric, const SphereGrid& grid);
FiberBalance balance(const MetricModel& metric);

/// Direct search: per-fiber eigenvalues of g relative to g0 at each node, extremes refined
/// locally. Independent of the closed forms used by balance().
FiberBalance fiber_balance_search(const MetricModel& metric, const SphereGrid& grid);

std::vector<double> curvature_samples(const MetricModel& metric, const SphereGrid& grid);

/// K_min, K_max and pinching from a grid scan refined by local optimization.
CurvatureStats curvature(const MetricModel& metric, const SphereGrid& grid);
CurvatureStats curvature(const MetricModel& metric);

}  // namespace reeb
