#include "reeb/sphere/harmonics.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "reeb/error.hpp"

namespace reeb {
namespace {

constexpr int tri(int l, int m) noexcept { return l * (l + 1) / 2 + m; }

// Normalized Legendre factors T_lm(z) with P_lm(cos theta) = sin^m(theta) T_lm(cos theta),
// scaled so that T_lm(z) Re/Im (x + iy)^m is an orthonormal real harmonic.
// Optional derivative dT_lm/dz.
void legendre_factors(int L, double z, double* t, double* dt) {
  t[tri(0, 0)] = 0.5 / std::sqrt(std::numbers::pi);
  if (dt) dt[tri(0, 0)] = 0.0;
  for (int m = 0; m <= L; ++m) {
    if (m >= 1) {
      const double ratio = (m == 1) ? std::sqrt(3.0) : std::sqrt((2.0 * m + 1.0) / (2.0 * m));
      t[tri(m, m)] = t[tri(m - 1, m - 1)] * ratio;
      if (dt) dt[tri(m, m)] = 0.0;
    }
    if (m + 1 <= L) {
      const double a = std::sqrt(2.0 * m + 3.0);
      t[tri(m + 1, m)] = a * z * t[tri(m, m)];
      if (dt) dt[tri(m + 1, m)] = a * t[tri(m, m)];
    }
    for (int l = m + 2; l <= L; ++l) {
      const double l2 = static_cast<double>(l) * l;
      const double m2 = static_cast<double>(m) * m;
      const double a = std::sqrt((4.0 * l2 - 1.0) / (l2 - m2));
      const double lm1 = l - 1.0;
      const double b = std::sqrt((lm1 * lm1 - m2) / (4.0 * lm1 * lm1 - 1.0));
      t[tri(l, m)] = a * (z * t[tri(l - 1, m)] - b * t[tri(l - 2, m)]);
      if (dt) {
        dt[tri(l, m)] = a * (t[tri(l - 1, m)] + z * dt[tri(l - 1, m)] - b * dt[tri(l - 2, m)]);
      }
    }
  }
}

void check_band(int L) {
  if (L < 0) throw DomainError("negative band limit " + std::to_string(L));
}

}  // namespace

HarmonicField::HarmonicField(int band_limit)
    : band_limit_(band_limit),
      coeffs_(static_cast<std::size_t>(harmonic_count(std::max(band_limit, 0))), 0.0) {
  check_band(band_limit);
}

HarmonicField::HarmonicField(int band_limit, std::vector<double> coeffs)
    : band_limit_(band_limit), coeffs_(std::move(coeffs)) {
  check_band(band_limit);
  if (static_cast<int>(coeffs_.size()) != harmonic_count(band_limit)) {
    throw DomainError("HarmonicField: expected " + std::to_string(harmonic_count(band_limit)) +
                      " coefficients, got " + std::to_string(coeffs_.size()));
  }
}

HarmonicField HarmonicField::basis(int band_limit, int l, int m) {
  if (l < 0 || l > band_limit || m < -l || m > l) {
    throw DomainError("HarmonicField::basis: (l, m) outside band");
  }
  HarmonicField f(band_limit);
  f(l, m) = 1.0;
  return f;
}

HarmonicField HarmonicField::constant(double value, int band_limit) {
  HarmonicField f(band_limit);
  f(0, 0) = value * 2.0 * std::sqrt(std::numbers::pi);
  return f;
}

double HarmonicField::mean() const { return coeffs_[0] * 0.5 / std::sqrt(std::numbers::pi); }

double HarmonicField::l2_norm() const {
  double acc = 0.0;
  for (double c : coeffs_) acc += c * c;
  return std::sqrt(acc);
}

double HarmonicField::gradient_energy() const {
  double acc = 0.0;
  for (int l = 1; l <= band_limit_; ++l) {
    const double lam = l * (l + 1.0);
    for (int m = -l; m <= l; ++m) acc += lam * (*this)(l, m) * (*this)(l, m);
  }
  return acc;
}

bool HarmonicField::is_antipodal(double tol) const {
  for (int l = 1; l <= band_limit_; l += 2) {
    for (int m = -l; m <= l; ++m) {
      if (std::abs((*this)(l, m)) > tol) return false;
    }
  }
  return true;
}

HarmonicField HarmonicField::without_mean() const {
  HarmonicField f = *this;
  f.coeffs_[0] = 0.0;
  return f;
}

HarmonicField HarmonicField::resized(int band_limit) const {
  HarmonicField f(band_limit);
  const int n = std::min(f.size(), size());
  std::copy_n(coeffs_.begin(), n, f.coeffs_.begin());
  return f;
}

double HarmonicField::value(const SpherePoint& p) const {
  std::vector<double> y(coeffs_.size());
  real_harmonics(band_limit_, p.vec(), y);
  double acc = 0.0;
  for (std::size_t k = 0; k < y.size(); ++k) acc += coeffs_[k] * y[k];
  return acc;
}

double HarmonicField::value_and_gradient(const SpherePoint& p, Vec3& gradient) const {
  std::vector<double> y(coeffs_.size());
  std::vector<Vec3> g(coeffs_.size());
  real_harmonics_with_gradient(band_limit_, p.vec(), y, g);
  double acc = 0.0;
  gradient.setZero();
  for (std::size_t k = 0; k < y.size(); ++k) {
    acc += coeffs_[k] * y[k];
    gradient += coeffs_[k] * g[k];
  }
  return acc;
}

HarmonicField& HarmonicField::operator+=(const HarmonicField& other) {
  if (other.band_limit_ > band_limit_) *this = resized(other.band_limit_);
  for (int k = 0; k < other.size(); ++k) coeffs_[k] += other.coeffs_[k];
  return *this;
}

HarmonicField& HarmonicField::operator-=(const HarmonicField& other) {
  if (other.band_limit_ > band_limit_) *this = resized(other.band_limit_);
  for (int k = 0; k < other.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  return *this;
}

HarmonicField& HarmonicField::operator*=(double s) {
  for (double& c : coeffs_) c *= s;
  return *this;
}

HarmonicField laplacian(const HarmonicField& f) {
  HarmonicField out(f.band_limit());
  for (int l = 0; l <= f.band_limit(); ++l) {
    const double lam = -l * (l + 1.0);
    for (int m = -l; m <= l; ++m) out(l, m) = lam * f(l, m);
  }
  return out;
}

double sobolev_h2_norm(const HarmonicField& f) {
  double acc = 0.0;
  for (int l = 0; l <= f.band_limit(); ++l) {
    const double lam = l * (l + 1.0);
    const double w = 1.0 + lam + lam * lam;
    for (int m = -l; m <= l; ++m) acc += w * f(l, m) * f(l, m);
  }
  return std::sqrt(acc);
}

void real_harmonics(int L, const Vec3& x, std::span<double> values) {
  check_band(L);
  std::vector<double> t(static_cast<std::size_t>(tri(L, L) + 1));
  legendre_factors(L, x.z(), t.data(), nullptr);
  double re = 1.0;  // Re (x + iy)^m
  double im = 0.0;  // Im (x + iy)^m
  for (int m = 0; m <= L; ++m) {
    if (m > 0) {
      const double nre = re * x.x() - im * x.y();
      im = re * x.y() + im * x.x();
      re = nre;
    }
    for (int l = m; l <= L; ++l) {
      const double tl = t[tri(l, m)];
      values[harmonic_index(l, m)] = tl * re;
      if (m > 0) values[harmonic_index(l, -m)] = tl * im;
    }
  }
}

void real_harmonics_with_gradient(int L, const Vec3& x, std::span<double> values,
                                  std::span<Vec3> gradients) {
  check_band(L);
  const std::size_t nt = static_cast<std::size_t>(tri(L, L) + 1);
  std::vector<double> t(nt);
  std::vector<double> dt(nt);
  legendre_factors(L, x.z(), t.data(), dt.data());
  double re = 1.0;
  double im = 0.0;
  double re_prev = 0.0;  // Re/Im (x + iy)^(m-1)
  double im_prev = 0.0;
  for (int m = 0; m <= L; ++m) {
    if (m > 0) {
      re_prev = re;
      im_prev = im;
      const double nre = re * x.x() - im * x.y();
      im = re * x.y() + im * x.x();
      re = nre;
    }
    // d/dx Re w^m = m Re w^{m-1}, d/dy Re w^m = -m Im w^{m-1}
    // d/dx Im w^m = m Im w^{m-1}, d/dy Im w^m =  m Re w^{m-1}
    const double dre_dx = m * re_prev;
    const double dre_dy = -m * im_prev;
    const double dim_dx = m * im_prev;
    const double dim_dy = m * re_prev;
    for (int l = m; l <= L; ++l) {
      const double tl = t[tri(l, m)];
      const double dtl = dt[tri(l, m)];
      Vec3 g(tl * dre_dx, tl * dre_dy, dtl * re);
      values[harmonic_index(l, m)] = tl * re;
      gradients[harmonic_index(l, m)] = g - g.dot(x) * x;
      if (m > 0) {
        Vec3 gs(tl * dim_dx, tl * dim_dy, dtl * im);
        values[harmonic_index(l, -m)] = tl * im;
        gradients[harmonic_index(l, -m)] = gs - gs.dot(x) * x;
      }
    }
  }
}

SphericalTransform::SphericalTransform(const SphereGrid& grid, int band_limit)
    : grid_(grid), band_limit_(band_limit) {
  check_band(band_limit);
  if (band_limit > grid.max_band_limit()) {
    throw ResolutionError("SphericalTransform: grid " + std::to_string(grid.n_theta()) + "x" +
                          std::to_string(grid.n_phi()) + " too coarse for band limit " +
                          std::to_string(band_limit) + " (needs n_theta >= L+1, n_phi >= 2L+1)");
  }
  const int L = band_limit;
  const int nt = tri(L, L) + 1;
  legendre_.resize(static_cast<std::size_t>(grid.n_theta()) * nt);
  for (int i = 0; i < grid.n_theta(); ++i) {
    double* t = &legendre_[static_cast<std::size_t>(i) * nt];
    legendre_factors(L, grid.cos_theta(i), t, nullptr);
    double sm = 1.0;
    for (int m = 0; m <= L; ++m) {
      for (int l = m; l <= L; ++l) t[tri(l, m)] *= sm;
      sm *= grid.sin_theta(i);
    }
  }
  cos_.resize(static_cast<std::size_t>(grid.n_phi()) * (L + 1));
  sin_.resize(cos_.size());
  for (int j = 0; j < grid.n_phi(); ++j) {
    for (int m = 0; m <= L; ++m) {
      cos_[j * (L + 1) + m] = std::cos(m * grid.phi(j));
      sin_[j * (L + 1) + m] = std::sin(m * grid.phi(j));
    }
  }
}

double SphericalTransform::legendre(int ring, int l, int m) const {
  return legendre_[static_cast<std::size_t>(ring) * (tri(band_limit_, band_limit_) + 1) + tri(l, m)];
}

void SphericalTransform::analyze_into(std::span<const double> values,
                                      std::span<double> coeffs) const {
  const int L = band_limit_;
  const int np = grid_.n_phi();
  if (static_cast<int>(values.size()) != grid_.size()) {
    throw DomainError("SphericalTransform::analyze: sample count does not match grid");
  }
  std::fill(coeffs.begin(), coeffs.end(), 0.0);
  std::vector<double> fc(L + 1);
  std::vector<double> fs(L + 1);
  for (int i = 0; i < grid_.n_theta(); ++i) {
    std::fill(fc.begin(), fc.end(), 0.0);
    std::fill(fs.begin(), fs.end(), 0.0);
    const double* row = &values[static_cast<std::size_t>(i) * np];
    for (int j = 0; j < np; ++j) {
      const double v = row[j];
      const double* c = &cos_[j * (L + 1)];
      const double* s = &sin_[j * (L + 1)];
      for (int m = 0; m <= L; ++m) {
        fc[m] += v * c[m];
        fs[m] += v * s[m];
      }
    }
    const double w = grid_.ring_weight(i);
    for (int m = 0; m <= L; ++m) {
      for (int l = m; l <= L; ++l) {
        const double p = w * legendre(i, l, m);
        coeffs[harmonic_index(l, m)] += p * fc[m];
        if (m > 0) coeffs[harmonic_index(l, -m)] += p * fs[m];
      }
    }
  }
}

HarmonicField SphericalTransform::analyze(std::span<const double> values) const {
  HarmonicField f(band_limit_);
  analyze_into(values, f.coeffs());
  return f;
}

void SphericalTransform::synthesize_into(std::span<const double> coeffs,
                                         std::span<double> values) const {
  const int L = band_limit_;
  const int np = grid_.n_phi();
  std::vector<double> gc(L + 1);
  std::vector<double> gs(L + 1);
  for (int i = 0; i < grid_.n_theta(); ++i) {
    for (int m = 0; m <= L; ++m) {
      double ac = 0.0;
      double as = 0.0;
      for (int l = m; l <= L; ++l) {
        const double p = legendre(i, l, m);
        ac += p * coeffs[harmonic_index(l, m)];
        if (m > 0) as += p * coeffs[harmonic_index(l, -m)];
      }
      gc[m] = ac;
      gs[m] = as;
    }
    double* row = &values[static_cast<std::size_t>(i) * np];
    for (int j = 0; j < np; ++j) {
      const double* c = &cos_[j * (L + 1)];
      const double* s = &sin_[j * (L + 1)];
      double acc = 0.0;
      for (int m = 0; m <= L; ++m) acc += gc[m] * c[m] + gs[m] * s[m];
      row[j] = acc;
    }
  }
}

std::vector<double> SphericalTransform::synthesize(const HarmonicField& f) const {
  HarmonicField g = f.band_limit() == band_limit_ ? f : f.resized(band_limit_);
  std::vector<double> out(static_cast<std::size_t>(grid_.size()));
  synthesize_into(g.coeffs(), out);
  return out;
}

HarmonicField analyze(const SphereGrid& grid, std::span<const double> values, int band_limit) {
  return SphericalTransform(grid, band_limit).analyze(values);
}

std::vector<double> synthesize(const HarmonicField& f, const SphereGrid& grid) {
  if (f.band_limit() <= grid.max_band_limit()) {
    return SphericalTransform(grid, f.band_limit()).synthesize(f);
  }
  // Pointwise evaluation has no resolution requirement.
  std::vector<double> out(static_cast<std::size_t>(grid.size()));
  const int n = f.size();
  std::vector<double> y(n);
  for (int k = 0; k < grid.size(); ++k) {
    real_harmonics(f.band_limit(), grid.nodes()[k].vec(), y);
    double acc = 0.0;
    for (int q = 0; q < n; ++q) acc += f.coeffs()[q] * y[q];
    out[k] = acc;
  }
  return out;
}

}  // namespace reeb
