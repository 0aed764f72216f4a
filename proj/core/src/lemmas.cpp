#include "reeb/nirenberg/lemmas.hpp"

#include <algorithm>
#include <limits>
#include <cmath>
#include <numbers>

#include "reeb/error.hpp"
#include "reeb/nirenberg/constants.hpp"
#include "reeb/sphere/extrema.hpp"

namespace reeb {
namespace {

SphereGrid check_grid(int band_limit) { return SphereGrid::for_band_limit(band_limit, band_limit + 24); }

ExtremaPair field_extrema(const HarmonicField& u) {
  const SphereGrid grid = check_grid(u.band_limit());
  return find_extrema([&](const SpherePoint& p) { return u.value(p); }, grid, synthesize(u, grid));
}

}  // namespace

OnofriCheck check_onofri(const HarmonicField& u) {
  const double scale = std::max(1.0, u.l2_norm());
  if (std::abs(u(0, 0)) > 1e-12 * scale) throw DomainError("check_onofri: u must have mean zero");
  if (!u.is_antipodal(1e-12 * scale)) throw DomainError("check_onofri: u must be antipodally even");
  const SphereGrid grid = check_grid(u.band_limit());
  auto values = synthesize(u, grid);
  for (double& v : values) v = std::exp(v);
  OnofriCheck c;
  c.lhs = std::log(grid.integrate(values) / (4.0 * std::numbers::pi));
  c.rhs = u.gradient_energy() / (8.0 * 4.0 * std::numbers::pi);
  c.margin = c.rhs - c.lhs;
  return c;
}

MinBoundCheck check_min_bound(const GaussSolution& sol) {
  MinBoundCheck c;
  c.min_u = field_extrema(sol.u).min.value;
  c.mean_u = sol.u.mean();
  c.margin = c.min_u - (c.mean_u - 1.0);
  return c;
}

GradientBoundCheck check_gradient_bound(const GaussSolution& sol, const PrescribedCurvature& k) {
  const SphereGrid grid = check_grid(sol.u.band_limit());
  const auto ext = find_extrema(
      [&](const SpherePoint& p) { return sol.scale * k(p); }, grid);
  GradientBoundCheck c;
  c.lhs = sol.u.gradient_energy() / (4.0 * std::numbers::pi);
  c.k_min = ext.min.value;
  c.k_max = ext.max.value;
  if (!(c.k_min > 0.0)) throw DomainError("check_gradient_bound: curvature must be positive");
  c.delta = c.k_min / c.k_max;
  const double e2 = std::exp(-2.0);
  const double m = c.k_min * e2;
  c.first_applicable = m < 1.0;
  if (c.first_applicable) {
    c.rhs_first = (1.0 - m) / (2.0 * m) * std::log(c.k_max / (1.0 - m));
    c.margin_first = c.rhs_first - c.lhs;
  } else {
    c.rhs_first = std::numeric_limits<double>::quiet_NaN();
    c.margin_first = std::numeric_limits<double>::quiet_NaN();
  }
  c.rhs_simplified = std::log(c.k_max) / (2.0 * m) + 0.5;
  c.rhs_pinched = 0.5 * (std::numbers::e / c.delta + 1.0);
  c.margin_simplified = c.rhs_simplified - c.lhs;
  c.margin_pinched = c.rhs_pinched - c.lhs;
  return c;
}

OscillationChain oscillation_chain(const HarmonicField& u) {
  const HarmonicField u0 = u.without_mean();
  const auto ext = field_extrema(u0);
  OscillationChain c;
  c.osc = ext.max.value - ext.min.value;
  c.c0_bound = 2.0 * std::max(std::abs(ext.max.value), std::abs(ext.min.value));
  c.h2_bound = 2.0 * cs_upper() * sobolev_h2_norm(u0);
  c.laplacian_bound = 2.0 * cs_upper() * cp_upper() * laplacian(u0).l2_norm();
  c.monotone = c.osc <= c.c0_bound && c.c0_bound <= c.h2_bound && c.h2_bound <= c.laplacian_bound;
  return c;
}

OscillationChain oscillation_chain(const GaussSolution& sol) { return oscillation_chain(sol.u); }

}  // namespace reeb
