#include "reeb/sphere/field_io.hpp"

#include <ostream>

#include "reeb/error.hpp"

namespace reeb {

nlohmann::json to_json(const HarmonicField& f) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (int l = 0; l <= f.band_limit(); ++l) {
    for (int m = -l; m <= l; ++m) {
      if (f(l, m) != 0.0) coeffs.push_back({l, m, f(l, m)});
    }
  }
  return {{"band_limit", f.band_limit()}, {"coeffs", coeffs}};
}

HarmonicField harmonic_field_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("band_limit")) {
    throw DomainError("harmonic field JSON needs a band_limit key");
  }
  const int L = j.at("band_limit").get<int>();
  HarmonicField f(L);
  if (j.contains("coeffs")) {
    for (const auto& entry : j.at("coeffs")) {
      if (!entry.is_array() || entry.size() != 3) {
        throw DomainError("harmonic field coefficient must be [l, m, value]");
      }
      const int l = entry[0].get<int>();
      const int m = entry[1].get<int>();
      if (l < 0 || l > L || m < -l || m > l) {
        throw DomainError("harmonic field coefficient (l, m) outside band limit");
      }
      f(l, m) = entry[2].get<double>();
    }
  }
  return f;
}

void write_grid_csv(std::ostream& os, const SphereGrid& grid, std::span<const double> values) {
  if (static_cast<int>(values.size()) != grid.size()) {
    throw DomainError("write_grid_csv: sample count does not match grid");
  }
  os << "theta,phi,value\n";
  os.precision(17);
  for (int k = 0; k < grid.size(); ++k) {
    const auto& p = grid.nodes()[k];
    os << p.theta() << ',' << grid.phi(k % grid.n_phi()) << ',' << values[k] << '\n';
  }
}

}  // namespace reeb
