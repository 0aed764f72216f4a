#pragma once

#include <iosfwd>
#include <span>

#include <nlohmann/json.hpp>

#include "reeb/sphere/grid.hpp"
#include "reeb/sphere/harmonics.hpp"

namespace reeb {

/// {"band_limit": L, "coeffs": [[l, m, value], ...]}. Missing coefficients read as zero.
nlohmann::json to_json(const HarmonicField& f);
HarmonicField harmonic_field_from_json(const nlohmann::json& j);

/// CSV rows "theta,phi,value" with a header line.
void write_grid_csv(std::ostream& os, const SphereGrid& grid, std::span<const double> values);

}  // namespace reeb
