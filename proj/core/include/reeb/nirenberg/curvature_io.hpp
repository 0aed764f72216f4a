#pragma once

#include <optional>

#include <nlohmann/json.hpp>

#include "reeb/nirenberg/gauss_solver.hpp"

namespace reeb {

/// {"variant": "field", "K": {...HarmonicField...}, "antipodal": bool}
/// {"variant": "metric", "metric": {...metric file...}}
/// {"variant": "manufactured", "bumps": [{"axis": [x, y, z], "amplitude": A, "alpha": a}, ...]}
struct CurvatureInput {
  PrescribedCurvature curvature;
  std::optional<ManufacturedField> exact;  // known solution, manufactured inputs only
};

CurvatureInput curvature_from_json(const nlohmann::json& j);
ManufacturedField manufactured_from_json(const nlohmann::json& j);
nlohmann::json to_json(const ManufacturedField& f);

}  // namespace reeb
