#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "reeb/geodesics/search.hpp"
#include "reeb/metrics/geometry.hpp"
#include "reeb/metrics/metric.hpp"

namespace reeb {

inline constexpr const char* kReportSchema = "reeb-systole/1";

struct VerifyOptions {
  SearchOptions systole;
  GeometryOptions geometry;
  double tolerance = 1e-7;   // on margins normalized by max(|lhs|, |rhs|, 1)
};

struct Quantities {
  FiberBalance balance;
  CurvatureStats curvature;
  GeometryReport geometry;
  SystoleEstimate systole;
};

/// One inequality lhs <= rhs evaluated on a metric.
struct InequalityEntry {
  std::string id;
  std::string statement;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;             // rhs - lhs
  double normalized_margin = 0.0;  // margin / max(|lhs|, |rhs|, 1)
  /// "holds", "fails", "inconclusive", "skipped", "indeterminate" or "informational".
  std::string status;
  bool holds = false;
  bool conservative = false;       // lhs uses the systole upper bound
  bool informational = false;      // cited sharp results; never gate the verdict
  std::vector<std::string> inputs;
  std::string note;
};

/// Pinching-to-balance bound against the actual balance of the metric.
struct BetaDeltaRecord {
  bool applicable = false;
  std::string reason;              // why not applicable
  double delta = 0.0;
  double beta_actual = 0.0;
  double beta_bound = 0.0;
  double log_beta_bound = 0.0;
  bool bound_holds = false;        // beta_actual > beta_bound
};

BetaDeltaRecord compare_beta_delta(const FiberBalance& balance, const CurvatureStats& curvature,
                                   bool antipodal);
BetaDeltaRecord compare_beta_delta(const MetricModel& metric);

struct InequalityReport {
  nlohmann::json metric_digest;
  Quantities quantities;
  std::vector<InequalityEntry> entries;
  BetaDeltaRecord beta_delta;
  double tolerance = 1e-7;

  /// True iff every entry that is neither skipped nor informational holds.
  bool all_hold() const;
  const InequalityEntry* find(const std::string& id) const;
};

/// Builds the report from precomputed quantities (no numerical work besides arithmetic).
InequalityReport assemble_report(const MetricModel& metric, const Quantities& q,
                                 double tolerance = 1e-7);

/// Computes every quantity and assembles the report.
InequalityReport verify(const MetricModel& metric, const VerifyOptions& opts = {});

nlohmann::json to_json(const InequalityReport& report);
void write_csv(std::ostream& os, const InequalityReport& report);

}  // namespace reeb
