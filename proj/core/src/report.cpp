#include "reeb/verifier/report.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <numbers>
#include <ostream>

#include "reeb/capacities.hpp"
#include "reeb/metrics/balance.hpp"
#include "reeb/metrics/metric_io.hpp"
#include "reeb/nirenberg/constants.hpp"

namespace reeb {
namespace {

constexpr double kPi = std::numbers::pi;

// Pinching above which the sharp cited inequalities are known to hold.
const double kSharpPinching = (4.0 + std::sqrt(7.0)) / 8.0;

InequalityEntry make_entry(std::string id, std::string statement, double lhs, double rhs,
                           std::vector<std::string> inputs, double tol) {
  InequalityEntry e;
  e.id = std::move(id);
  e.statement = std::move(statement);
  e.lhs = lhs;
  e.rhs = rhs;
  e.margin = rhs - lhs;
  e.normalized_margin = e.margin / std::max({std::abs(lhs), std::abs(rhs), 1.0});
  e.holds = e.normalized_margin >= -tol;
  e.status = e.holds ? "holds" : "fails";
  e.inputs = std::move(inputs);
  return e;
}

InequalityEntry skipped(std::string id, std::string statement, std::string reason,
                        std::vector<std::string> inputs) {
  InequalityEntry e;
  e.id = std::move(id);
  e.statement = std::move(statement);
  e.status = "skipped";
  e.note = "hypothesis unmet: " + reason;
  e.inputs = std::move(inputs);
  e.lhs = e.rhs = e.margin = e.normalized_margin = std::numeric_limits<double>::quiet_NaN();
  return e;
}

}  // namespace

BetaDeltaRecord compare_beta_delta(const FiberBalance& balance, const CurvatureStats& curvature,
                                   bool antipodal) {
  BetaDeltaRecord r;
  r.beta_actual = balance.beta;
  if (!antipodal) {
    r.reason = "metric is not antipodally symmetric";
    return r;
  }
  if (!curvature.positive) {
    r.reason = "curvature is not positive";
    return r;
  }
  r.applicable = true;
  r.delta = curvature.delta;
  r.log_beta_bound = log_beta_delta_bound(std::min(r.delta, 1.0));
  r.beta_bound = std::exp(r.log_beta_bound);
  r.bound_holds = std::log(r.beta_actual) > r.log_beta_bound;
  return r;
}

BetaDeltaRecord compare_beta_delta(const MetricModel& metric) {
  return compare_beta_delta(balance(metric), curvature(metric), metric.is_antipodal());
}

bool InequalityReport::all_hold() const {
  return std::all_of(entries.begin(), entries.end(), [](const InequalityEntry& e) {
    return e.informational || e.status == "skipped" || e.holds;
  });
}

const InequalityEntry* InequalityReport::find(const std::string& id) const {
  for (const auto& e : entries) {
    if (e.id == id) return &e;
  }
  return nullptr;
}

InequalityReport assemble_report(const MetricModel& metric, const Quantities& q, double tol) {
  InequalityReport rep;
  rep.metric_digest = to_json(metric);
  rep.quantities = q;
  rep.tolerance = tol;

  const double beta = q.balance.beta;
  const double area = q.geometry.area;
  const double vol = q.geometry.volume_disk_bundle;
  const double diam = q.geometry.diameter;
  const double lam = q.geometry.lambda1;
  const double sys = q.systole.value;
  const bool have_sys = q.systole.found;
  const bool nonneg = q.curvature.k_min >= 0.0;
  auto& out = rep.entries;

  // Entries with the systole on the left. Its value is an upper bound, so a pass is a
  // genuine verification and a failure only says the bound was not tight enough.
  auto systolic = [&](std::string id, std::string statement, double lhs, double rhs,
                      std::vector<std::string> inputs) {
    InequalityEntry e;
    if (!have_sys) {
      e = make_entry(std::move(id), std::move(statement), 0.0, rhs, std::move(inputs), tol);
      e.lhs = e.margin = e.normalized_margin = std::numeric_limits<double>::quiet_NaN();
      e.holds = false;
      e.status = "indeterminate";
      e.note = "systole search found no closed geodesic";
    } else {
      e = make_entry(std::move(id), std::move(statement), lhs, rhs, std::move(inputs), tol);
      if (!e.holds) e.status = "inconclusive";
      if (!e.holds) e.note = "inconclusive (upper bound too large?)";
    }
    e.conservative = true;
    out.push_back(std::move(e));
  };

  systolic("systole_circumradius", "L_min <= 2 pi R (circumradius of the unit cosphere bundle)",
           sys, 2.0 * kPi * q.balance.circumradius, {"systole", "circumradius"});
  systolic("systole_volume", "L_min^2 <= Vol(D*S^2) / (2 beta)", sys * sys, vol / (2.0 * beta),
           {"systole", "volume_disk_bundle", "beta"});
  systolic("systole_area_balanced", "L_min^2 <= (pi / beta) Area", sys * sys, kPi / beta * area,
           {"systole", "area", "beta"});
  systolic("systole_area_universal", "L_min^2 <= 32 Area", sys * sys, 32.0 * area,
           {"systole", "area"});
  out.push_back(make_entry("hersch", "lambda_1 <= 8 pi / Area", lam, 8.0 * kPi / area,
                           {"lambda1", "area"}, tol));
  systolic("systole_lambda1", "L_min^2 <= 8 pi^2 / (beta lambda_1)", sys * sys,
           8.0 * kPi * kPi / (beta * lam), {"systole", "beta", "lambda1"});
  systolic("systole_diameter_universal", "L_min <= 4 D", sys, 4.0 * diam, {"systole", "diameter"});

  const std::string no_curv = "minimum curvature is negative";
  if (nonneg) {
    out.push_back(make_entry("area_diameter", "Area <= (8 / pi) D^2 for K >= 0", area,
                             8.0 / kPi * diam * diam, {"area", "diameter", "k_min"}, tol));
    systolic("systole_diameter_balanced", "L_min <= 2 sqrt(2) D / sqrt(beta) for K >= 0", sys,
             2.0 * std::sqrt(2.0) * diam / std::sqrt(beta), {"systole", "diameter", "beta", "k_min"});
    systolic("systole_diameter_nonnegative", "L_min <= 3 D for K >= 0", sys, 3.0 * diam,
             {"systole", "diameter", "k_min"});
  } else {
    out.push_back(skipped("area_diameter", "Area <= (8 / pi) D^2 for K >= 0", no_curv,
                          {"area", "diameter", "k_min"}));
    out.push_back(skipped("systole_diameter_balanced",
                          "L_min <= 2 sqrt(2) D / sqrt(beta) for K >= 0", no_curv,
                          {"systole", "diameter", "beta", "k_min"}));
    out.push_back(skipped("systole_diameter_nonnegative", "L_min <= 3 D for K >= 0", no_curv,
                          {"systole", "diameter", "k_min"}));
  }

  // Sharp cited results, only inside their pinching range.
  const bool sharp_range = q.curvature.positive && q.curvature.delta > kSharpPinching;
  const std::string not_pinched = "not (4 + sqrt 7)/8-pinched";
  if (sharp_range) {
    systolic("sharp_systole_area", "L_min^2 <= pi Area for delta > (4 + sqrt 7)/8", sys * sys,
             kPi * area, {"systole", "area", "delta"});
    out.back().informational = true;
    systolic("sharp_systole_diameter", "L_min <= 2 D / sqrt(delta) for delta > (4 + sqrt 7)/8",
             sys, 2.0 * diam / std::sqrt(q.curvature.delta), {"systole", "diameter", "delta"});
    out.back().informational = true;
  } else {
    out.push_back(skipped("sharp_systole_area", "L_min^2 <= pi Area for delta > (4 + sqrt 7)/8",
                          not_pinched, {"systole", "area", "delta"}));
    out.back().informational = true;
    out.push_back(skipped("sharp_systole_diameter",
                          "L_min <= 2 D / sqrt(delta) for delta > (4 + sqrt 7)/8", not_pinched,
                          {"systole", "diameter", "delta"}));
    out.back().informational = true;
  }

  // Which area bound is finer: (pi / beta) Area < 32 Area exactly when beta > pi / 32.
  {
    auto e = make_entry("area_bound_crossover", "(pi / beta) Area < 32 Area iff beta > pi / 32",
                        kPi / beta * area, 32.0 * area, {"beta", "area"}, tol);
    const bool finer = kPi / beta * area < 32.0 * area;
    const bool predicted = beta > kPi / 32.0;
    e.informational = true;
    e.holds = finer == predicted;
    e.status = "informational";
    e.note = std::string(finer ? "balanced bound is finer" : "universal bound is finer") +
             (e.holds ? "" : "; disagrees with the beta threshold");
    out.push_back(std::move(e));
  }

  {
    const auto c1 = c1_interval(q.balance);
    auto e = make_entry("c1_interval", "2 pi r <= c_1(X) <= 2 pi R", c1.lo, c1.hi,
                        {"inradius", "circumradius"}, tol);
    e.informational = true;
    e.status = "informational";
    out.push_back(std::move(e));
  }

  rep.beta_delta = compare_beta_delta(q.balance, q.curvature, metric.is_antipodal());
  if (rep.beta_delta.applicable) {
    // Compared in log form: the bound underflows for small delta.
    auto e = make_entry("beta_delta", "beta > beta(delta) for antipodal delta-pinched metrics",
                        rep.beta_delta.log_beta_bound, std::log(beta), {"beta", "delta"}, tol);
    e.holds = rep.beta_delta.bound_holds;
    e.status = e.holds ? "holds" : "fails";
    e.note = "compared as logarithms";
    out.push_back(std::move(e));
  } else {
    out.push_back(skipped("beta_delta", "beta > beta(delta) for antipodal delta-pinched metrics",
                          rep.beta_delta.reason, {"beta", "delta"}));
  }
  return rep;
}

InequalityReport verify(const MetricModel& metric, const VerifyOptions& opts) {
  Quantities q;
  q.balance = balance(metric);
  q.curvature = curvature(metric);
  q.geometry = geometry(metric, opts.geometry);
  q.systole = find_systole_upper(metric, opts.systole);
  return assemble_report(metric, q, opts.tolerance);
}

namespace {

nlohmann::json number(double v) {
  if (std::isfinite(v)) return v;
  return nullptr;
}

}  // namespace

nlohmann::json to_json(const InequalityReport& report) {
  const auto& q = report.quantities;
  nlohmann::json candidates = nlohmann::json::array();
  for (const auto& c : q.systole.candidates) {
    candidates.push_back({{"length", c.length}, {"residual", c.closure_residual},
                          {"source", c.source}});
  }
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : report.entries) {
    entries.push_back({{"id", e.id},
                       {"statement", e.statement},
                       {"lhs", number(e.lhs)},
                       {"rhs", number(e.rhs)},
                       {"margin", number(e.margin)},
                       {"normalized_margin", number(e.normalized_margin)},
                       {"status", e.status},
                       {"holds", e.holds},
                       {"conservative", e.conservative},
                       {"informational", e.informational},
                       {"inputs_used", e.inputs},
                       {"note", e.note}});
  }
  const auto& bd = report.beta_delta;
  return {
      {"schema", kReportSchema},
      {"metric", report.metric_digest},
      {"tolerance", report.tolerance},
      {"quantities",
       {{"inradius", q.balance.inradius},
        {"circumradius", q.balance.circumradius},
        {"beta", q.balance.beta},
        {"k_min", q.curvature.k_min},
        {"k_max", q.curvature.k_max},
        {"delta", number(q.curvature.delta)},
        {"area", q.geometry.area},
        {"volume_disk_bundle", q.geometry.volume_disk_bundle},
        {"diameter", q.geometry.diameter},
        {"diameter_error", q.geometry.diameter_error},
        {"lambda1", q.geometry.lambda1},
        {"systole",
         {{"value", number(q.systole.value)},
          {"kind", q.systole.kind},
          {"source", q.systole.source},
          {"found", q.systole.found},
          {"candidates", candidates}}}}},
      {"entries", entries},
      {"beta_delta",
       {{"applicable", bd.applicable},
        {"reason", bd.reason},
        {"delta", bd.delta},
        {"beta_actual", bd.beta_actual},
        {"beta_bound", bd.beta_bound},
        {"log_beta_bound", number(bd.log_beta_bound)},
        {"bound_holds", bd.bound_holds}}},
      {"all_hold", report.all_hold()},
  };
}

void write_csv(std::ostream& os, const InequalityReport& report) {
  os << "id,lhs,rhs,margin,normalized_margin,status,holds,conservative,informational\n";
  const auto flags = os.flags();
  os << std::setprecision(17);
  for (const auto& e : report.entries) {
    os << e.id << ',' << e.lhs << ',' << e.rhs << ',' << e.margin << ',' << e.normalized_margin
       << ',' << e.status << ',' << (e.holds ? 1 : 0) << ',' << (e.conservative ? 1 : 0) << ','
       << (e.informational ? 1 : 0) << '\n';
  }
  os.flags(flags);
}

}  // namespace reeb
