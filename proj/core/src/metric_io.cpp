#include "reeb/metrics/metric_io.hpp"

#include <fstream>
#include <string>

#include "reeb/error.hpp"
#include "reeb/sphere/field_io.hpp"

namespace reeb {

MetricModel metric_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("variant") || !j["variant"].is_string()) {
    throw DomainError("metric: expected an object with a string \"variant\"");
  }
  const auto variant = j["variant"].get<std::string>();
  if (variant == "conformal") {
    if (!j.contains("phi")) throw DomainError("metric: conformal variant needs \"phi\"");
    return MetricModel::conformal(harmonic_field_from_json(j["phi"]));
  }
  if (variant == "ellipsoid") {
    const auto& axes = j.value("axes", nlohmann::json());
    if (!axes.is_array() || axes.size() != 3) {
      throw DomainError("metric: ellipsoid variant needs \"axes\": [a, b, c]");
    }
    return MetricModel::ellipsoid(axes[0].get<double>(), axes[1].get<double>(),
                                  axes[2].get<double>());
  }
  if (variant == "round") {
    return MetricModel::round(j.value("R", 1.0));
  }
  throw DomainError("metric: unknown variant \"" + variant + "\"");
}

nlohmann::json to_json(const MetricModel& metric) {
  if (const auto* c = metric.as<ConformalMetric>()) {
    return {{"variant", "conformal"}, {"phi", to_json(c->phi)}};
  }
  if (const auto* e = metric.as<EllipsoidMetric>()) {
    return {{"variant", "ellipsoid"}, {"axes", {e->a, e->b, e->c}}};
  }
  return {{"variant", "round"}, {"R", metric.as<RoundMetric>()->radius}};
}

nlohmann::json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
}

MetricModel load_metric(const std::filesystem::path& path) {
  return metric_from_json(read_json_file(path));
}

}  // namespace reeb
