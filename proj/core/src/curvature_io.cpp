#include "reeb/nirenberg/curvature_io.hpp"

#include <string>

#include "reeb/error.hpp"
#include "reeb/metrics/metric_io.hpp"
#include "reeb/sphere/field_io.hpp"

namespace reeb {

ManufacturedField manufactured_from_json(const nlohmann::json& j) {
  if (!j.contains("bumps") || !j["bumps"].is_array()) {
    throw DomainError("manufactured curvature needs a \"bumps\" array");
  }
  ManufacturedField f;
  for (const auto& b : j["bumps"]) {
    const auto& axis = b.at("axis");
    if (!axis.is_array() || axis.size() != 3) throw DomainError("bump axis must be [x, y, z]");
    ZonalBump z;
    z.axis = Vec3(axis[0].get<double>(), axis[1].get<double>(), axis[2].get<double>());
    if (z.axis.norm() == 0.0) throw DomainError("bump axis must be nonzero");
    z.amplitude = b.at("amplitude").get<double>();
    z.alpha = b.value("alpha", 1.0);
    f.bumps.push_back(z);
  }
  return f;
}

nlohmann::json to_json(const ManufacturedField& f) {
  nlohmann::json bumps = nlohmann::json::array();
  for (const auto& b : f.bumps) {
    bumps.push_back({{"axis", {b.axis.x(), b.axis.y(), b.axis.z()}},
                     {"amplitude", b.amplitude},
                     {"alpha", b.alpha}});
  }
  return {{"variant", "manufactured"}, {"bumps", bumps}};
}

CurvatureInput curvature_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("variant") || !j["variant"].is_string()) {
    throw DomainError("curvature: expected an object with a string \"variant\"");
  }
  const auto variant = j["variant"].get<std::string>();
  if (variant == "field") {
    const HarmonicField k = harmonic_field_from_json(j.at("K"));
    return {PrescribedCurvature::from_field(k, j.value("antipodal", k.is_antipodal(1e-14))),
            std::nullopt};
  }
  if (variant == "metric") {
    return {PrescribedCurvature::from_metric(metric_from_json(j.at("metric"))), std::nullopt};
  }
  if (variant == "manufactured") {
    auto f = manufactured_from_json(j);
    return {PrescribedCurvature::manufactured(f), f};
  }
  throw DomainError("curvature: unknown variant \"" + variant + "\"");
}

}  // namespace reeb
