#include "reeb/sphere/extrema.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/Dense>

namespace reeb {
namespace {

SpherePoint offset(const SpherePoint& x, const Vec3& e1, const Vec3& e2, double a, double b) {
  return exp_map(x, a * e1 + b * e2);
}

std::vector<int> pick_candidates(const SphereGrid& grid, std::span<const double> samples,
                                 bool maximize, int count) {
  std::vector<int> order(samples.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return maximize ? samples[a] > samples[b] : samples[a] < samples[b];
  });
  std::vector<int> picked;
  for (int k : order) {
    if (static_cast<int>(picked.size()) >= count) break;
    bool far = true;
    for (int q : picked) {
      if (angular_distance(grid.nodes()[k], grid.nodes()[q]) < 0.3) {
        far = false;
        break;
      }
    }
    if (far) picked.push_back(k);
  }
  return picked;
}

}  // namespace

Extremum refine_extremum(const SphereFunction& f, const SpherePoint& start, bool maximize,
                         const RefineOptions& opts) {
  const double sign = maximize ? 1.0 : -1.0;
  auto g = [&](const SpherePoint& p) { return sign * f(p); };

  SpherePoint x = start;
  double gx = g(x);
  double h = 1e-3;
  for (int step = 0; step < opts.max_steps; ++step) {
    const auto [e1, e2] = x.tangent_frame();
    const double gpa = g(offset(x, e1, e2, h, 0));
    const double gma = g(offset(x, e1, e2, -h, 0));
    const double gpb = g(offset(x, e1, e2, 0, h));
    const double gmb = g(offset(x, e1, e2, 0, -h));
    const double gpp = g(offset(x, e1, e2, h, h));
    const double gpm = g(offset(x, e1, e2, h, -h));
    const double gmp = g(offset(x, e1, e2, -h, h));
    const double gmm = g(offset(x, e1, e2, -h, -h));

    const Eigen::Vector2d grad((gpa - gma) / (2 * h), (gpb - gmb) / (2 * h));
    Eigen::Matrix2d hess;
    hess(0, 0) = (gpa - 2 * gx + gma) / (h * h);
    hess(1, 1) = (gpb - 2 * gx + gmb) / (h * h);
    hess(0, 1) = hess(1, 0) = (gpp - gpm - gmp + gmm) / (4 * h * h);

    Eigen::Vector2d d;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> eig(hess);
    if (eig.eigenvalues().maxCoeff() < -1e-12) {
      d = -hess.ldlt().solve(grad);
    } else {
      d = grad / std::max(1.0, hess.norm());
    }
    const double max_len = 0.2;
    if (d.norm() > max_len) d *= max_len / d.norm();

    bool improved = false;
    for (int halving = 0; halving < 30; ++halving) {
      const SpherePoint trial = offset(x, e1, e2, d(0), d(1));
      const double gt = g(trial);
      if (gt > gx) {
        x = trial;
        gx = gt;
        improved = true;
        break;
      }
      d *= 0.5;
    }
    if (!improved || d.norm() < opts.position_tol) break;
    h = std::clamp(d.norm(), 1e-5, 1e-3);
  }
  return {x, sign * gx};
}

ExtremaPair find_extrema(const SphereFunction& f, const SphereGrid& grid,
                         std::span<const double> samples, const RefineOptions& opts) {
  ExtremaPair out;
  bool first = true;
  for (int k : pick_candidates(grid, samples, true, opts.candidates)) {
    const Extremum e = refine_extremum(f, grid.nodes()[k], true, opts);
    if (first || e.value > out.max.value) out.max = e;
    first = false;
  }
  first = true;
  for (int k : pick_candidates(grid, samples, false, opts.candidates)) {
    const Extremum e = refine_extremum(f, grid.nodes()[k], false, opts);
    if (first || e.value < out.min.value) out.min = e;
    first = false;
  }
  return out;
}

ExtremaPair find_extrema(const SphereFunction& f, const SphereGrid& grid,
                         const RefineOptions& opts) {
  const auto samples = grid.sample(f);
  return find_extrema(f, grid, samples, opts);
}

double oscillation(std::span<const double> samples) {
  if (samples.empty()) return 0.0;
  const auto [lo, hi] = std::minmax_element(samples.begin(), samples.end());
  return *hi - *lo;
}

double oscillation(const HarmonicField& f, const SphereGrid& grid, const RefineOptions& opts) {
  const auto samples = synthesize(f, grid);
  const auto ext = find_extrema([&](const SpherePoint& p) { return f.value(p); }, grid, samples,
                                opts);
  return ext.max.value - ext.min.value;
}

}  // namespace reeb
