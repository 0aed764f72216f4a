#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <queue>
#include <string>
#include <tuple>
#include <unordered_map>

#include "reeb/error.hpp"
#include "reeb/metrics/geometry.hpp"

namespace reeb {
namespace {

std::array<Vec3, 12> icosahedron_vertices() {
  const double t = (1.0 + std::sqrt(5.0)) / 2.0;
  return {Vec3(-1, t, 0), Vec3(1, t, 0),  Vec3(-1, -t, 0), Vec3(1, -t, 0),
          Vec3(0, -1, t), Vec3(0, 1, t),  Vec3(0, -1, -t), Vec3(0, 1, -t),
          Vec3(t, 0, -1), Vec3(t, 0, 1),  Vec3(-t, 0, -1), Vec3(-t, 0, 1)};
}

constexpr std::array<std::array<int, 3>, 20> kFaces = {{
    {0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11},
    {1, 5, 9},  {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
    {3, 9, 4},  {3, 4, 2},  {3, 2, 6},   {3, 6, 8},  {3, 8, 9},
    {4, 9, 5},  {2, 4, 11}, {6, 2, 10},  {8, 6, 7},  {9, 8, 1},
}};

std::uint64_t edge_key(int u, int v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
}

}  // namespace

SphereMesh SphereMesh::icosphere(int frequency) {
  if (frequency < 1) {
    throw ResolutionError("icosphere: frequency must be >= 1, got " + std::to_string(frequency));
  }
  const int n = frequency;
  SphereMesh mesh;
  mesh.frequency_ = n;
  const auto base = icosahedron_vertices();

  // Shared vertices along edges are identified by their rounded coordinates.
  std::map<std::tuple<long long, long long, long long>, int> index;
  auto vertex = [&](const Vec3& v) {
    const Vec3 u = v.normalized();
    const auto key = std::make_tuple(std::llround(u.x() * 1e9), std::llround(u.y() * 1e9),
                                     std::llround(u.z() * 1e9));
    auto [it, inserted] = index.emplace(key, static_cast<int>(mesh.vertices_.size()));
    if (inserted) mesh.vertices_.emplace_back(u);
    return it->second;
  };
  // The 12 icosahedron vertices come first.
  for (const auto& v : base) vertex(v);

  std::vector<int> local;
  for (const auto& f : kFaces) {
    const Vec3& a = base[f[0]];
    const Vec3& b = base[f[1]];
    const Vec3& c = base[f[2]];
    local.assign(static_cast<std::size_t>((n + 1) * (n + 1)), -1);
    auto at = [&](int i, int j) -> int& { return local[static_cast<std::size_t>(i * (n + 1) + j)]; };
    for (int i = 0; i <= n; ++i) {
      for (int j = 0; i + j <= n; ++j) {
        at(i, j) = vertex(a + (b - a) * (static_cast<double>(i) / n) +
                          (c - a) * (static_cast<double>(j) / n));
      }
    }
    for (int i = 0; i < n; ++i) {
      for (int j = 0; i + j < n; ++j) {
        mesh.triangles_.push_back({at(i, j), at(i + 1, j), at(i, j + 1)});
        if (i + j + 1 < n) mesh.triangles_.push_back({at(i + 1, j), at(i + 1, j + 1), at(i, j + 1)});
      }
    }
  }
  mesh.incident_.assign(mesh.vertices_.size(), {});
  for (int t = 0; t < static_cast<int>(mesh.triangles_.size()); ++t) {
    for (int v : mesh.triangles_[t]) mesh.incident_[v].push_back(t);
  }
  return mesh;
}

MeshDistance::MeshDistance(const MetricModel& metric, SphereMesh mesh) : mesh_(std::move(mesh)) {
  std::unordered_map<std::uint64_t, double> lengths;
  lengths.reserve(mesh_.triangles().size() * 2);
  const auto& verts = mesh_.vertices();
  edge_.resize(mesh_.triangles().size());
  for (std::size_t t = 0; t < mesh_.triangles().size(); ++t) {
    const auto& tri = mesh_.triangles()[t];
    for (int i = 0; i < 3; ++i) {
      const int u = tri[i];
      const int v = tri[(i + 1) % 3];
      auto [it, inserted] = lengths.try_emplace(edge_key(u, v), 0.0);
      if (inserted) it->second = metric.arc_length(verts[u], verts[v]);
      edge_[t][i] = it->second;
    }
  }
}

double MeshDistance::update(int tri, int target, std::span<const double> dist,
                            const std::vector<char>& alive) const {
  const auto& corners = mesh_.triangles()[tri];
  int k = 0;
  while (corners[k] != target) ++k;
  const int ia = (k + 1) % 3;
  const int ib = (k + 2) % 3;
  const int va = corners[ia];
  const int vb = corners[ib];
  const double len_ca = edge_[tri][k];    // target -> a
  const double len_ab = edge_[tri][ia];   // a -> b
  const double len_bc = edge_[tri][ib];   // b -> target
  const double inf = std::numeric_limits<double>::infinity();

  double best = inf;
  if (alive[va]) best = std::min(best, dist[va] + len_ca);
  if (alive[vb]) best = std::min(best, dist[vb] + len_bc);
  if (!alive[va] || !alive[vb]) return best;

  // Unfold: A = (0, 0), B = (c, 0), target below AB, virtual source above AB.
  const double c = len_ab;
  const double cx = (len_ca * len_ca + c * c - len_bc * len_bc) / (2.0 * c);
  const double cy2 = len_ca * len_ca - cx * cx;
  if (cy2 <= 0.0) return best;
  const double cy = -std::sqrt(cy2);
  const double ta = dist[va];
  const double tb = dist[vb];
  const double sx = (ta * ta - tb * tb + c * c) / (2.0 * c);
  const double sy2 = ta * ta - sx * sx;
  if (sy2 <= 0.0) return best;
  const double sy = std::sqrt(sy2);
  const double cross = sx + (cx - sx) * sy / (sy - cy);
  if (cross < 0.0 || cross > c) return best;
  return std::min(best, std::hypot(cx - sx, cy - sy));
}

std::vector<double> MeshDistance::distances_from(int source) const {
  const auto nv = static_cast<int>(mesh_.vertices().size());
  if (source < 0 || source >= nv) {
    throw DomainError("distances_from: vertex " + std::to_string(source) + " out of range");
  }
  std::vector<double> dist(static_cast<std::size_t>(nv), std::numeric_limits<double>::infinity());
  std::vector<char> alive(static_cast<std::size_t>(nv), 0);
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[source] = 0.0;
  heap.emplace(0.0, source);
  while (!heap.empty()) {
    const auto [d, v] = heap.top();
    heap.pop();
    if (alive[v] || d > dist[v]) continue;
    alive[v] = 1;
    for (int t : mesh_.incident()[v]) {
      for (int w : mesh_.triangles()[t]) {
        if (alive[w]) continue;
        const double cand = update(t, w, dist, alive);
        if (cand < dist[w]) {
          dist[w] = cand;
          heap.emplace(cand, w);
        }
      }
    }
  }
  return dist;
}

namespace {

struct Pair {
  double value = 0.0;
  SpherePoint p;
  SpherePoint q;
};

int nearest_vertex(const SphereMesh& mesh, const SpherePoint& x) {
  const auto& verts = mesh.vertices();
  int best = 0;
  double best_dot = -2.0;
  for (int i = 0; i < static_cast<int>(verts.size()); ++i) {
    const double d = verts[i].vec().dot(x.vec());
    if (d > best_dot) {
      best_dot = d;
      best = i;
    }
  }
  return best;
}

// Largest eccentricities seen from every scout source, one pair per source, best first.
std::vector<Pair> scout_pairs(const MetricModel& metric, const DiameterOptions& opts) {
  const MeshDistance md(metric, SphereMesh::icosphere(opts.scout_resolution));
  const auto sources = SphereMesh::icosphere(opts.scout_sources).vertices();
  std::vector<Pair> pairs;
  for (const auto& s : sources) {
    const int from = nearest_vertex(md.mesh(), s);
    const auto d = md.distances_from(from);
    const auto far = static_cast<int>(std::max_element(d.begin(), d.end()) - d.begin());
    pairs.push_back({d[far], md.mesh().vertices()[from], md.mesh().vertices()[far]});
  }
  std::sort(pairs.begin(), pairs.end(),
            [](const Pair& x, const Pair& y) { return x.value > y.value; });
  // Drop pairs that repeat an earlier one up to swapping the endpoints.
  std::vector<Pair> distinct;
  for (const auto& p : pairs) {
    const bool repeat = std::any_of(distinct.begin(), distinct.end(), [&](const Pair& o) {
      const double same = angular_distance(p.p, o.p) + angular_distance(p.q, o.q);
      const double swapped = angular_distance(p.p, o.q) + angular_distance(p.q, o.p);
      return std::min(same, swapped) < 0.2;
    });
    if (!repeat) distinct.push_back(p);
    if (static_cast<int>(distinct.size()) >= opts.candidates) break;
  }
  return distinct;
}

Pair sweep_maximum(const MeshDistance& md, const std::vector<Pair>& starts, int sweeps) {
  Pair best;
  const auto& verts = md.mesh().vertices();
  for (const auto& st : starts) {
    for (const auto& seed : {st.p, st.q}) {
      int from = nearest_vertex(md.mesh(), seed);
      for (int it = 0; it < std::max(1, sweeps); ++it) {
        const auto d = md.distances_from(from);
        const auto far = static_cast<int>(std::max_element(d.begin(), d.end()) - d.begin());
        if (d[far] > best.value) best = {d[far], verts[from], verts[far]};
        if (far == from) break;
        from = far;
      }
    }
  }
  return best;
}

}  // namespace

DiameterEstimate diameter(const MetricModel& metric, const DiameterOptions& opts) {
  if (opts.resolution < 4 || opts.scout_resolution < 1 || opts.scout_sources < 1 ||
      opts.candidates < 1) {
    throw ResolutionError("diameter: resolution must be >= 4, got " +
                          std::to_string(opts.resolution));
  }
  const auto starts = scout_pairs(metric, opts);
  const MeshDistance fine(metric, SphereMesh::icosphere(opts.resolution));
  const MeshDistance coarse(metric, SphereMesh::icosphere(opts.resolution / 2));
  const auto f = sweep_maximum(fine, starts, opts.sweeps);
  const auto c = sweep_maximum(coarse, starts, opts.sweeps);

  DiameterEstimate out;
  out.fine = f.value;
  out.coarse = c.value;
  // First-order error in the mesh size.
  out.value = 2.0 * f.value - c.value;
  out.error_estimate = std::abs(f.value - c.value);
  out.p = f.p;
  out.q = f.q;
  return out;
}

}  // namespace reeb
