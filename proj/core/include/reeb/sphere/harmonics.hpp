#pragma once

#include <span>
#include <vector>

#include "reeb/sphere/grid.hpp"
#include "reeb/sphere/point.hpp"

namespace reeb {

/// Flat position of (l, m) in a coefficient vector: l^2 + l + m.
constexpr int harmonic_index(int l, int m) noexcept { return l * l + l + m; }
constexpr int harmonic_count(int band_limit) noexcept { return (band_limit + 1) * (band_limit + 1); }
constexpr int harmonic_degree(int index) noexcept {
  int l = 0;
  while ((l + 1) * (l + 1) <= index) ++l;
  return l;
}

/// Band-limited expansion sum a_lm Y_lm in real spherical harmonics with ||Y_lm||_{L2} = 1.
///
/// m > 0 carries cos(m phi), m < 0 carries sin(|m| phi); no Condon-Shortley phase.
class HarmonicField {
 public:
  HarmonicField() : HarmonicField(0) {}
  explicit HarmonicField(int band_limit);
  HarmonicField(int band_limit, std::vector<double> coeffs);

  static HarmonicField basis(int band_limit, int l, int m);
  static HarmonicField constant(double value, int band_limit = 0);

  int band_limit() const noexcept { return band_limit_; }
  int size() const noexcept { return static_cast<int>(coeffs_.size()); }

  double operator()(int l, int m) const { return coeffs_[harmonic_index(l, m)]; }
  double& operator()(int l, int m) { return coeffs_[harmonic_index(l, m)]; }
  std::span<const double> coeffs() const noexcept { return coeffs_; }
  std::span<double> coeffs() noexcept { return coeffs_; }

  double mean() const;                 // average over S^2 w.r.t. dA_{g0}/(4 pi)
  double l2_norm() const;              // Parseval
  double gradient_energy() const;      // ||grad f||_{L2}^2
  bool is_antipodal(double tol = 0.0) const;  // all odd-degree coefficients within tol

  HarmonicField without_mean() const;
  HarmonicField resized(int band_limit) const;

  double value(const SpherePoint& p) const;
  /// Value and round tangential gradient.
  double value_and_gradient(const SpherePoint& p, Vec3& gradient) const;

  HarmonicField& operator+=(const HarmonicField& other);
  HarmonicField& operator-=(const HarmonicField& other);
  HarmonicField& operator*=(double s);

  friend HarmonicField operator+(HarmonicField a, const HarmonicField& b) { return a += b; }
  friend HarmonicField operator-(HarmonicField a, const HarmonicField& b) { return a -= b; }
  friend HarmonicField operator*(double s, HarmonicField a) { return a *= s; }

 private:
  int band_limit_;
  std::vector<double> coeffs_;
};

HarmonicField laplacian(const HarmonicField& f);

/// (||f||^2 + ||grad f||^2 + ||lap f||^2)^{1/2}.
double sobolev_h2_norm(const HarmonicField& f);

/// All Y_lm(x) for l <= band_limit, in harmonic_index order.
void real_harmonics(int band_limit, const Vec3& x, std::span<double> values);

/// Values and round tangential gradients of all Y_lm at x.
void real_harmonics_with_gradient(int band_limit, const Vec3& x, std::span<double> values,
                                  std::span<Vec3> gradients);

/// Quadrature-based analysis and direct synthesis on a fixed grid.
///
/// Caches the associated Legendre table per ring and the longitude trig table,
/// so each transform costs O(n_theta (n_phi L + L^2)).
class SphericalTransform {
 public:
  SphericalTransform(const SphereGrid& grid, int band_limit);

  const SphereGrid& grid() const noexcept { return grid_; }
  int band_limit() const noexcept { return band_limit_; }

  HarmonicField analyze(std::span<const double> values) const;
  std::vector<double> synthesize(const HarmonicField& f) const;

  void analyze_into(std::span<const double> values, std::span<double> coeffs) const;
  void synthesize_into(std::span<const double> coeffs, std::span<double> values) const;

 private:
  double legendre(int ring, int l, int m) const;

  SphereGrid grid_;
  int band_limit_;
  std::vector<double> legendre_;  // per ring, packed l(l+1)/2 + m, includes sin^m
  std::vector<double> cos_;       // n_phi x (L+1)
  std::vector<double> sin_;
};

/// Projection of grid samples onto degree <= band_limit. Throws ResolutionError on a coarse grid.
HarmonicField analyze(const SphereGrid& grid, std::span<const double> values, int band_limit);

std::vector<double> synthesize(const HarmonicField& f, const SphereGrid& grid);

}  // namespace reeb
