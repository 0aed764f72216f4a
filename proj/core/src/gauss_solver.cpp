#include "reeb/nirenberg/gauss_solver.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/Dense>

#include "reeb/error.hpp"

namespace reeb {

double ZonalBump::value(const SpherePoint& p) const {
  const double t = axis.normalized().dot(p.vec());
  return amplitude * std::exp(alpha * t * t);
}

double ZonalBump::laplacian(const SpherePoint& p) const {
  const double t = axis.normalized().dot(p.vec());
  const double f = amplitude * std::exp(alpha * t * t);
  const double f1 = 2.0 * alpha * t * f;
  const double f2 = (2.0 * alpha + 4.0 * alpha * alpha * t * t) * f;
  return (1.0 - t * t) * f2 - 2.0 * t * f1;
}

double ManufacturedField::value(const SpherePoint& p) const {
  double s = 0.0;
  for (const auto& b : bumps) s += b.value(p);
  return s;
}

double ManufacturedField::laplacian(const SpherePoint& p) const {
  double s = 0.0;
  for (const auto& b : bumps) s += b.laplacian(p);
  return s;
}

PrescribedCurvature::PrescribedCurvature(SphereFunction k, bool antipodal)
    : k_(std::move(k)), antipodal_(antipodal) {
  if (!k_) throw DomainError("PrescribedCurvature: empty curvature function");
}

PrescribedCurvature PrescribedCurvature::from_field(const HarmonicField& k, bool antipodal) {
  return PrescribedCurvature([k](const SpherePoint& p) { return k.value(p); }, antipodal);
}

PrescribedCurvature PrescribedCurvature::from_metric(const MetricModel& metric) {
  return PrescribedCurvature([metric](const SpherePoint& p) { return metric.curvature(p); },
                             metric.is_antipodal());
}

PrescribedCurvature PrescribedCurvature::manufactured(const ManufacturedField& u_star) {
  // Zonal bumps are even, so every manufactured K is antipodal.
  return PrescribedCurvature(
      [u_star](const SpherePoint& p) {
        return std::exp(-2.0 * u_star.value(p)) * (1.0 - u_star.laplacian(p));
      },
      true);
}

SphereGrid solver_grid(int band_limit) { return SphereGrid::for_band_limit(band_limit, band_limit + 7); }

namespace {

using Vector = Eigen::VectorXd;

// Unknowns: slot 0 holds the scale s, slot k >= 1 the coefficient a_k of u (a_00 = 0).
class GaussSystem {
 public:
  GaussSystem(const PrescribedCurvature& k, int band_limit)
      : grid_(solver_grid(band_limit)),
        transform_(grid_, band_limit),
        n_(harmonic_count(band_limit)),
        antipodal_(k.antipodal()),
        k_(grid_.sample(k.function())),
        degree_(n_),
        u_(grid_.size()),
        lap_(grid_.size()),
        e_(grid_.size()),
        work_(grid_.size()),
        coeffs_(n_) {
    for (int i = 0; i < n_; ++i) degree_[i] = harmonic_degree(i);
  }

  int size() const { return n_; }
  const SphereGrid& grid() const { return grid_; }
  const std::vector<double>& k_samples() const { return k_; }
  bool active(int i) const { return !antipodal_ || degree_[i] % 2 == 0; }

  // Residual R(x) = P_L F; also caches e = K e^{2u} for jacobian(), and the grid sup-norm.
  Vector residual(const Vector& x) {
    s_ = x[0];
    coeffs_.assign(x.data(), x.data() + n_);
    coeffs_[0] = 0.0;
    transform_.synthesize_into(coeffs_, u_);
    for (int i = 1; i < n_; ++i) {
      coeffs_[i] *= -static_cast<double>(degree_[i]) * (degree_[i] + 1);
    }
    transform_.synthesize_into(coeffs_, lap_);
    sup_ = 0.0;
    mean_e_ = 0.0;
    for (int q = 0; q < grid_.size(); ++q) {
      e_[q] = k_[q] * std::exp(2.0 * u_[q]);
      work_[q] = lap_[q] - 1.0 + s_ * e_[q];
      sup_ = std::max(sup_, std::abs(work_[q]));
    }
    mean_e_ = grid_.integrate(e_) / (4.0 * std::numbers::pi);
    return project(work_);
  }

  // J(x) v at the last point passed to residual().
  Vector jacobian(const Vector& v) {
    coeffs_.assign(v.data(), v.data() + n_);
    coeffs_[0] = 0.0;
    transform_.synthesize_into(coeffs_, u_scratch());
    for (int i = 1; i < n_; ++i) {
      coeffs_[i] *= -static_cast<double>(degree_[i]) * (degree_[i] + 1);
    }
    transform_.synthesize_into(coeffs_, lap_scratch_);
    for (int q = 0; q < grid_.size(); ++q) {
      work_[q] = lap_scratch_[q] + 2.0 * s_ * e_[q] * du_[q] + v[0] * e_[q];
    }
    return project(work_);
  }

  // Diagonal of the linearization about a constant state.
  Vector preconditioner() const {
    Vector d(n_);
    d[0] = std::sqrt(4.0 * std::numbers::pi) * mean_e_;
    for (int i = 1; i < n_; ++i) {
      const double lap = -static_cast<double>(degree_[i]) * (degree_[i] + 1);
      const double shifted = lap + 2.0 * s_ * mean_e_;
      d[i] = std::abs(shifted) < 1.0 ? lap : shifted;
    }
    return d;
  }

  double sup() const { return sup_; }
  double gauss_bonnet() const {
    std::vector<double> se(e_.size());
    for (std::size_t q = 0; q < e_.size(); ++q) se[q] = s_ * e_[q];
    return grid_.integrate(se);
  }

 private:
  std::vector<double>& u_scratch() {
    du_.resize(grid_.size());
    lap_scratch_.resize(grid_.size());
    return du_;
  }

  Vector project(const std::vector<double>& values) {
    Vector r(n_);
    transform_.analyze_into(values, std::span<double>(r.data(), n_));
    for (int i = 0; i < n_; ++i) {
      if (!active(i)) r[i] = 0.0;
    }
    return r;
  }

  SphereGrid grid_;
  SphericalTransform transform_;
  int n_;
  bool antipodal_;
  std::vector<double> k_;
  std::vector<int> degree_;
  std::vector<double> u_, lap_, e_, work_, du_, lap_scratch_;
  std::vector<double> coeffs_;
  double s_ = 1.0;
  double sup_ = 0.0;
  double mean_e_ = 1.0;
};

// Restarted GMRES with right preconditioning by a diagonal.
template <class Op>
Vector gmres(Op&& apply, const Vector& b, const Vector& diag, double rtol, int restart,
             int max_iterations) {
  const int n = static_cast<int>(b.size());
  Vector x = Vector::Zero(n);
  const double b_norm = b.norm();
  if (b_norm == 0.0) return x;
  int total = 0;
  while (total < max_iterations) {
    const Vector r = b - apply(x);
    const double beta = r.norm();
    if (beta <= rtol * b_norm) break;
    const int m = std::min(restart, max_iterations - total);
    Eigen::MatrixXd v(n, m + 1);
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(m + 1, m);
    Vector cs = Vector::Zero(m), sn = Vector::Zero(m), g = Vector::Zero(m + 1);
    v.col(0) = r / beta;
    g[0] = beta;
    int k = 0;
    for (; k < m; ++k) {
      ++total;
      Vector w = apply(v.col(k).cwiseQuotient(diag));
      for (int j = 0; j <= k; ++j) {
        h(j, k) = w.dot(v.col(j));
        w -= h(j, k) * v.col(j);
      }
      h(k + 1, k) = w.norm();
      if (h(k + 1, k) > 0.0) v.col(k + 1) = w / h(k + 1, k);
      for (int j = 0; j < k; ++j) {
        const double t = cs[j] * h(j, k) + sn[j] * h(j + 1, k);
        h(j + 1, k) = -sn[j] * h(j, k) + cs[j] * h(j + 1, k);
        h(j, k) = t;
      }
      const double denom = std::hypot(h(k, k), h(k + 1, k));
      cs[k] = h(k, k) / denom;
      sn[k] = h(k + 1, k) / denom;
      h(k, k) = denom;
      h(k + 1, k) = 0.0;
      g[k + 1] = -sn[k] * g[k];
      g[k] = cs[k] * g[k];
      if (std::abs(g[k + 1]) <= rtol * b_norm || h(k + 1, k) == 0.0) {
        ++k;
        break;
      }
    }
    const Vector y = h.topLeftCorner(k, k).triangularView<Eigen::Upper>().solve(g.head(k));
    x += (v.leftCols(k) * y).cwiseQuotient(diag);
    if (std::abs(g[k]) <= rtol * b_norm) break;
  }
  return x;
}

}  // namespace

GaussSolution solve_gauss_equation(const PrescribedCurvature& k, const GaussSolverOptions& opts) {
  if (opts.band_limit < 1) throw ResolutionError("solve_gauss_equation: band limit must be >= 1");
  GaussSystem sys(k, opts.band_limit);
  const auto& grid = sys.grid();
  const auto& ks = sys.k_samples();
  for (int q = 0; q < grid.size(); ++q) {
    if (!(ks[q] > 0.0)) {
      throw DomainError("solve_gauss_equation: K must be positive, found " + std::to_string(ks[q]));
    }
    if (k.antipodal() && std::abs(ks[q] - ks[grid.antipodal_index(q)]) > 1e-10) {
      throw DomainError("solve_gauss_equation: K flagged antipodal but K(p) != K(-p)");
    }
  }

  // Gauss-Bonnet fixes the scale of the initial guess u = 0.
  Vector x = Vector::Zero(sys.size());
  x[0] = 4.0 * std::numbers::pi / grid.integrate(ks);

  GaussSolution sol;
  sol.antipodal = k.antipodal();
  Vector r = sys.residual(x);
  double merit = r.norm();
  int it = 0;
  for (;; ++it) {
    sol.residual_history.push_back(sys.sup());
    sol.merit_history.push_back(merit);
    if (sys.sup() < opts.tol) break;
    if (it >= opts.max_newton) {
      throw SolverError("solve_gauss_equation: no convergence after " + std::to_string(it) +
                            " Newton steps",
                        sys.sup(), it);
    }
    const Vector diag = sys.preconditioner();
    const double eta = std::clamp(merit, 1e-10, 1e-2);
    const Vector dx = gmres([&](const Vector& v) { return sys.jacobian(v); }, -r, diag, eta,
                            opts.gmres_restart, opts.gmres_max_iterations);
    double lambda = 1.0;
    bool accepted = false;
    for (int h = 0; h <= opts.max_halvings; ++h, lambda *= 0.5) {
      const Vector trial = x + lambda * dx;
      if (!(trial[0] > 0.0)) continue;
      const Vector rt = sys.residual(trial);
      if (rt.norm() < merit) {
        x = trial;
        r = rt;
        merit = rt.norm();
        accepted = true;
        break;
      }
    }
    if (!accepted) {
      sys.residual(x);
      throw SolverError("solve_gauss_equation: step halving failed to reduce the residual",
                        sys.sup(), it);
    }
  }

  std::vector<double> coeffs(x.data(), x.data() + sys.size());
  coeffs[0] = 0.0;
  sol.u = HarmonicField(opts.band_limit, std::move(coeffs));
  sol.scale = x[0];
  sol.residual = sys.sup();
  sol.gauss_bonnet = sys.gauss_bonnet();
  sol.iterations = it;
  return sol;
}

}  // namespace reeb
