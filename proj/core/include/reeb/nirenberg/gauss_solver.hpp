#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "reeb/metrics/metric.hpp"
#include "reeb/sphere/extrema.hpp"
#include "reeb/sphere/grid.hpp"
#include "reeb/sphere/harmonics.hpp"

namespace reeb {

/// f(n . x) with f(t) = amplitude * exp(alpha t^2): smooth and antipodally even.
struct ZonalBump {
  Vec3 axis = Vec3::UnitZ();
  double amplitude = 0.0;
  double alpha = 1.0;

  double value(const SpherePoint& p) const;
  /// Round Laplacian: (1 - t^2) f'' - 2 t f'.
  double laplacian(const SpherePoint& p) const;
};

/// Sum of zonal bumps, used as an exact solution u* with known Laplacian.
struct ManufacturedField {
  std::vector<ZonalBump> bumps;

  double value(const SpherePoint& p) const;
  double laplacian(const SpherePoint& p) const;
};

/// Target curvature K > 0 of the Gauss equation lap u = 1 - K e^{2u}.
class PrescribedCurvature {
 public:
  PrescribedCurvature(SphereFunction k, bool antipodal);

  static PrescribedCurvature from_field(const HarmonicField& k, bool antipodal);
  /// K_g of the metric read as a function on S^2.
  static PrescribedCurvature from_metric(const MetricModel& metric);
  /// K = e^{-2u*} (1 - lap u*), solved by u* up to its mean.
  static PrescribedCurvature manufactured(const ManufacturedField& u_star);

  double operator()(const SpherePoint& p) const { return k_(p); }
  const SphereFunction& function() const noexcept { return k_; }
  bool antipodal() const noexcept { return antipodal_; }

 private:
  SphereFunction k_;
  bool antipodal_;
};

struct GaussSolverOptions {
  int band_limit = 32;
  double tol = 1e-10;         // sup-norm of the residual on the solver grid
  int max_newton = 40;
  int max_halvings = 20;
  int gmres_restart = 60;
  int gmres_max_iterations = 600;
};

/// u mean zero and scale s > 0 with lap u - 1 + s K e^{2u} = 0, i.e. e^{2u} g0 has
/// curvature s K. The scale realizes the freedom to rescale the metric.
struct GaussSolution {
  HarmonicField u;
  double scale = 1.0;
  double residual = 0.0;      // sup-norm of lap u - 1 + s K e^{2u} on the solver grid
  double gauss_bonnet = 0.0;  // integral of s K e^{2u} dA_{g0}
  int iterations = 0;
  bool antipodal = false;
  std::vector<double> residual_history;  // sup-norm residual per Newton iterate
  std::vector<double> merit_history;     // L2 norm of the projected residual per iterate
};

/// Newton-Krylov in coefficient space (restarted GMRES, diagonal spectral preconditioner),
/// with step halving on merit increase. With the antipodal flag only even degrees are
/// unknowns, which removes the degree-1 kernel of the round linearization.
/// Throws DomainError if K <= 0 somewhere or the antipodal flag is false on the grid,
/// SolverError on non-convergence.
GaussSolution solve_gauss_equation(const PrescribedCurvature& k,
                                   const GaussSolverOptions& opts = {});

/// Grid used by the solver for a given band limit.
SphereGrid solver_grid(int band_limit);

}  // namespace reeb
