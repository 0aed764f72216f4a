#pragma once

#include <functional>
#include <span>

#include "reeb/sphere/grid.hpp"
#include "reeb/sphere/harmonics.hpp"

namespace reeb {

using SphereFunction = std::function<double(const SpherePoint&)>;

struct Extremum {
  SpherePoint point;
  double value = 0.0;
};

struct ExtremaPair {
  Extremum min;
  Extremum max;
};

struct RefineOptions {
  int candidates = 4;        // distinct grid extrema refined per sense
  int max_steps = 50;        // local Newton/gradient steps per candidate
  double position_tol = 1e-8;
};

/// Local maximization (or minimization) on S^2 from a start point.
Extremum refine_extremum(const SphereFunction& f, const SpherePoint& start, bool maximize,
                         const RefineOptions& opts = {});

/// Grid scan followed by local refinement around the best discrete extrema.
ExtremaPair find_extrema(const SphereFunction& f, const SphereGrid& grid,
                         const RefineOptions& opts = {});

/// Same, reusing samples already evaluated on the grid.
ExtremaPair find_extrema(const SphereFunction& f, const SphereGrid& grid,
                         std::span<const double> samples, const RefineOptions& opts = {});

/// max - min over raw samples.
double oscillation(std::span<const double> samples);

/// max - min of a harmonic field, refined beyond the grid.
double oscillation(const HarmonicField& f, const SphereGrid& grid, const RefineOptions& opts = {});

}  // namespace reeb
