#pragma once

namespace reeb {

/// b_l = (2l+1)^2 / (1 + l(l+1) + l^2(l+1)^2).
double cs_term(int l);

/// sum_{l=0}^{L} b_l.
double cs_partial(int truncation);

/// sum_{l>L} (1/l^2 + 2/(l(l+1)) + 1/(l+1)^2), which dominates the tail of the b_l series.
double cs_tail_bound(int truncation);

/// pi^2/3 + 2, the closed-form bound on the full b_l series.
double cs_series_limit();

/// 1/2 sqrt((pi^2/3 + 2) / pi): bound on the H^2 -> C^0 embedding constant.
double cs_upper();

/// sqrt(7)/2: bound on ||u0||_{H^2} / ||lap u0||_{L2} for mean-zero u0.
double cp_upper();

/// (1 + lambda + lambda^2) / lambda^2 with lambda = l(l+1). Throws DomainError for l < 1.
double cp_ratio(int l);

struct ConstantsReport {
  int truncation = 0;
  double cs_partial = 0.0;
  double cs_tail_bound = 0.0;
  double cs_series_bound = 0.0;  // sqrt((partial + tail) / (4 pi))
  double cs_upper = 0.0;
  double cp_upper = 0.0;
  double chain_factor = 0.0;     // 2 cs_upper cp_upper
};

ConstantsReport constants_report(int truncation = 100);

/// exp(-2 sqrt(7 (pi^2/3 + 2)) sqrt(e^{e/delta + 1} / delta^2 - 1)), delta in (0, 1].
double beta_delta_bound(double delta);

/// Natural log of beta_delta_bound, finite where the bound itself underflows.
double log_beta_delta_bound(double delta);

}  // namespace reeb
