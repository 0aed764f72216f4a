#pragma once

#include <array>
#include <span>
#include <vector>

#include "reeb/metrics/metric.hpp"
#include "reeb/sphere/grid.hpp"

namespace reeb {

/// Area(S^2, g) by quadrature of the area density.
double area(const MetricModel& metric, const SphereGrid& grid);
double area(const MetricModel& metric);

/// Integral of K_g dA_g; 4 pi by Gauss-Bonnet.
double total_curvature(const MetricModel& metric, const SphereGrid& grid);

/// First nonzero eigenvalue of -Delta_g via Rayleigh-Ritz in real harmonics of degree
/// <= band_limit; the constant mode is the deflated zero eigenvalue.
double lambda1(const MetricModel& metric, int band_limit = 16);

/// Geodesic (class I) subdivision of the icosahedron projected to S^2.
class SphereMesh {
 public:
  static SphereMesh icosphere(int frequency);

  int frequency() const noexcept { return frequency_; }
  const std::vector<SpherePoint>& vertices() const noexcept { return vertices_; }
  const std::vector<std::array<int, 3>>& triangles() const noexcept { return triangles_; }
  const std::vector<std::vector<int>>& incident() const noexcept { return incident_; }

 private:
  int frequency_ = 0;
  std::vector<SpherePoint> vertices_;
  std::vector<std::array<int, 3>> triangles_;
  std::vector<std::vector<int>> incident_;  // vertex -> triangles
};

/// Intrinsic triangulation: mesh plus the g-length of every triangle edge.
class MeshDistance {
 public:
  MeshDistance(const MetricModel& metric, SphereMesh mesh);

  const SphereMesh& mesh() const noexcept { return mesh_; }

  /// Fast marching on the intrinsic triangulation; g-distance from a vertex to all vertices.
  std::vector<double> distances_from(int source) const;

 private:
  double update(int tri, int target, std::span<const double> dist,
                const std::vector<char>& alive) const;

  SphereMesh mesh_;
  std::vector<std::array<double, 3>> edge_;  // edge_[t][i] joins corners i and (i+1)%3
};

struct DiameterOptions {
  int resolution = 64;        // icosphere frequency of the fine level
  int scout_resolution = 16;  // all-sources scan that locates candidate pairs
  int scout_sources = 4;      // sources: vertices of the icosphere of this frequency
  int candidates = 4;         // scout pairs refined on the fine levels
  int sweeps = 3;             // farthest-point iterations per refined endpoint
};

struct DiameterEstimate {
  double value = 0.0;       // reported diameter
  double fine = 0.0;        // sweep maximum at the fine level
  double coarse = 0.0;      // same at half resolution
  double error_estimate = 0.0;
  SpherePoint p;
  SpherePoint q;
};

/// D(S^2, g) = sup of pairwise distances. A coarse scan from many sources picks candidate
/// pairs; farthest-point sweeps from their endpoints run at two resolutions, combined by one
/// Richardson step.
DiameterEstimate diameter(const MetricModel& metric, const DiameterOptions& opts = {});

struct GeometryOptions {
  int lambda1_band_limit = 16;
  DiameterOptions diameter;
};

GeometryReport geometry(const MetricModel& metric, const GeometryOptions& opts = {});

}  // namespace reeb
