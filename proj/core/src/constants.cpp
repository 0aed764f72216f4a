#include "reeb/nirenberg/constants.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include <boost/math/special_functions/trigamma.hpp>

#include "reeb/error.hpp"

namespace reeb {

double cs_term(int l) {
  if (l < 0) throw DomainError("cs_term: negative degree");
  const double lam = static_cast<double>(l) * (l + 1);
  const double num = 2.0 * l + 1.0;
  return num * num / (1.0 + lam + lam * lam);
}

double cs_partial(int truncation) {
  if (truncation < 0) throw DomainError("cs_partial: negative truncation");
  // Smallest terms first.
  double s = 0.0;
  for (int l = truncation; l >= 0; --l) s += cs_term(l);
  return s;
}

double cs_tail_bound(int truncation) {
  if (truncation < 0) throw DomainError("cs_tail_bound: negative truncation");
  const double n = truncation;
  // sum_{l>L} 1/l^2 = psi'(L+1); the telescoping middle term sums to 2/(L+1).
  return boost::math::trigamma(n + 1.0) + 2.0 / (n + 1.0) + boost::math::trigamma(n + 2.0);
}

double cs_series_limit() { return std::numbers::pi * std::numbers::pi / 3.0 + 2.0; }

double cs_upper() { return 0.5 * std::sqrt(cs_series_limit() / std::numbers::pi); }

double cp_upper() { return std::sqrt(7.0) / 2.0; }

double cp_ratio(int l) {
  if (l < 1) {
    throw DomainError("cp_ratio: degree " + std::to_string(l) + " lies in the kernel of the Laplacian");
  }
  const double lam = static_cast<double>(l) * (l + 1);
  return (1.0 + lam + lam * lam) / (lam * lam);
}

ConstantsReport constants_report(int truncation) {
  ConstantsReport r;
  r.truncation = truncation;
  r.cs_partial = cs_partial(truncation);
  r.cs_tail_bound = cs_tail_bound(truncation);
  r.cs_series_bound = std::sqrt((r.cs_partial + r.cs_tail_bound) / (4.0 * std::numbers::pi));
  r.cs_upper = cs_upper();
  r.cp_upper = cp_upper();
  r.chain_factor = 2.0 * r.cs_upper * r.cp_upper;
  return r;
}

double log_beta_delta_bound(double delta) {
  if (!(delta > 0.0) || delta > 1.0) {
    throw DomainError("beta_delta_bound: delta must lie in (0, 1], got " + std::to_string(delta));
  }
  const double c = std::sqrt(7.0 * cs_series_limit());
  // e^{e/delta + 1} / delta^2 = e^x
  const double x = std::numbers::e / delta + 1.0 - 2.0 * std::log(delta);
  const double root = x > 40.0 ? std::exp(0.5 * x) : std::sqrt(std::expm1(x));
  return -2.0 * c * root;
}

double beta_delta_bound(double delta) { return std::exp(log_beta_delta_bound(delta)); }

}  // namespace reeb
