#pragma once

#include "reeb/nirenberg/gauss_solver.hpp"
#include "reeb/sphere/harmonics.hpp"

namespace reeb {

/// ln(integral e^u dsigma0) <= (1/8) integral |grad u|^2 dsigma0, with dsigma0 = dA_{g0} / (4 pi).
struct OnofriCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;   // rhs - lhs
};

/// Requires mean-zero, antipodally even u (DomainError otherwise).
OnofriCheck check_onofri(const HarmonicField& u);

/// min u >= mean(u) - 1 for solutions of the Gauss equation.
struct MinBoundCheck {
  double min_u = 0.0;
  double mean_u = 0.0;
  double margin = 0.0;   // min_u - (mean_u - 1)
};

MinBoundCheck check_min_bound(const GaussSolution& sol);

/// Bounds on integral |grad u|^2 dsigma0 in terms of the curvature s K of e^{2u} g0.
struct GradientBoundCheck {
  double lhs = 0.0;
  double k_min = 0.0;
  double k_max = 0.0;
  double delta = 0.0;
  bool first_applicable = false;  // K_min e^{-2} < 1, so the logarithm is defined
  double rhs_first = 0.0;         // (1 - k)/(2k) ln(K_max / (1 - k)), k = K_min e^{-2}
  double rhs_simplified = 0.0;    // ln(K_max) / (2k) + 1/2
  double rhs_pinched = 0.0;       // (e / delta + 1) / 2
  double margin_first = 0.0;
  double margin_simplified = 0.0;
  double margin_pinched = 0.0;
};

GradientBoundCheck check_gradient_bound(const GaussSolution& sol, const PrescribedCurvature& k);

/// osc(u) <= 2 ||u0||_{C0} <= 2 C_S ||u0||_{H2} <= 2 C_S C_P ||lap u0||_{L2}, u0 = u - mean.
struct OscillationChain {
  double osc = 0.0;
  double c0_bound = 0.0;
  double h2_bound = 0.0;
  double laplacian_bound = 0.0;
  bool monotone = true;
};

OscillationChain oscillation_chain(const HarmonicField& u);
OscillationChain oscillation_chain(const GaussSolution& sol);

}  // namespace reeb
