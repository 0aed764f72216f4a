#pragma once

#include <filesystem>

#include <nlohmann/json.hpp>

#include "reeb/metrics/metric.hpp"

namespace reeb {

/// {"variant": "conformal", "phi": {...}} | {"variant": "ellipsoid", "axes": [a, b, c]} |
/// {"variant": "round", "R": r}
MetricModel metric_from_json(const nlohmann::json& j);
nlohmann::json to_json(const MetricModel& metric);

MetricModel load_metric(const std::filesystem::path& path);

/// Reads a JSON document, with the file name in any parse error.
nlohmann::json read_json_file(const std::filesystem::path& path);

}  // namespace reeb
