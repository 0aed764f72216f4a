#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "helpers.hpp"
#include "reeb/error.hpp"
#include "reeb/metrics/balance.hpp"
#include "reeb/metrics/geometry.hpp"
#include "reeb/metrics/metric.hpp"
#include "reeb/metrics/metric_io.hpp"
#include "reeb/sphere/extrema.hpp"

using namespace reeb;
using reeb::testing::random_field;
using reeb::testing::random_point;

namespace {

constexpr double kPi = std::numbers::pi;

MetricModel smooth_conformal(std::mt19937_64& rng, int L, double size) {
  auto phi = random_field(rng, L, 2.0);
  phi = (size / phi.without_mean().l2_norm()) * phi;
  return MetricModel::conformal(phi);
}

// Half the perimeter of an ellipse with semi-axes a, b, by composite Simpson.
double half_perimeter(double a, double b) {
  const int n = 20000;
  const double h = kPi / n;
  double s = 0.0;
  for (int i = 0; i <= n; ++i) {
    const double t = i * h;
    const double f = std::hypot(a * std::sin(t), b * std::cos(t));
    s += (i == 0 || i == n) ? f : (i % 2 ? 4.0 * f : 2.0 * f);
  }
  return s * h / 3.0;
}

}  // namespace

TEST_CASE("model construction") {
  const auto e = MetricModel::ellipsoid(3.0, 1.0, 2.0);
  const auto* ax = e.as<EllipsoidMetric>();
  REQUIRE(ax != nullptr);
  CHECK(ax->a == 1.0);
  CHECK(ax->b == 2.0);
  CHECK(ax->c == 3.0);
  CHECK(e.kind() == "ellipsoid");
  CHECK(MetricModel::round(2.0).kind() == "round");
  CHECK_THROWS_AS(MetricModel::ellipsoid(0.0, 1.0, 1.0), DomainError);
  CHECK_THROWS_AS(MetricModel::round(-1.0), DomainError);

  std::mt19937_64 rng(20);
  const auto g = smooth_conformal(rng, 6, 0.5);
  for (int i = 0; i < 20; ++i) {
    const auto p = random_point(rng);
    const auto [e1, e2] = p.tangent_frame();
    const Eigen::Matrix2d m = g.gram(p, e1, e2);
    CHECK(m(0, 1) == doctest::Approx(0.0));
    CHECK(m(0, 0) > 0.0);
    CHECK(g.area_density(p) == doctest::Approx(std::sqrt(m.determinant())).epsilon(1e-13));
  }
}

TEST_CASE("balance closed forms") {
  auto b = balance(MetricModel::round());
  CHECK(b.inradius == 1.0);
  CHECK(b.circumradius == 1.0);
  CHECK(b.beta == 1.0);
  b = balance(MetricModel::round(2.5));
  CHECK(b.inradius == 2.5);
  CHECK(b.beta == 1.0);
  b = balance(MetricModel::ellipsoid(1.0, 1.0, 2.0));
  CHECK(b.inradius == 1.0);
  CHECK(b.circumradius == 2.0);
  CHECK(b.beta == 0.25);
  b = balance(MetricModel::conformal(HarmonicField::constant(0.3, 4)));
  CHECK(std::abs(b.beta - 1.0) < 1e-10);
  CHECK(b.inradius == doctest::Approx(std::exp(0.3)).epsilon(1e-12));
}

TEST_CASE("ellipsoid fiber search reproduces the axes") {
  const SphereGrid grid(128, 256);
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(0.5, 2.0);
  for (int trial = 0; trial < 4; ++trial) {
    const auto m = MetricModel::ellipsoid(u(rng), u(rng), u(rng));
    const auto* ax = m.as<EllipsoidMetric>();
    const auto fb = fiber_balance_search(m, grid);
    CHECK(std::abs(fb.inradius - ax->a) < 1e-6);
    CHECK(std::abs(fb.circumradius - ax->c) < 1e-6);
  }
}

TEST_CASE("conformal balance identity") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 5; ++trial) {
    const auto m = smooth_conformal(rng, 8, 0.2 + 0.1 * trial);
    const auto& phi = m.as<ConformalMetric>()->phi;
    const SphereGrid grid = default_grid(m);
    const auto b = balance(m, grid);
    const double osc = oscillation(phi, grid);
    CHECK(b.beta > 0.0);
    CHECK(b.beta <= 1.0);
    CHECK(b.inradius <= b.circumradius);
    CHECK(std::abs(b.beta - std::exp(-2.0 * osc)) < 1e-8);
    CHECK(b.beta == doctest::Approx(std::pow(b.inradius / b.circumradius, 2)).epsilon(1e-14));

    const auto ext = find_extrema([&](const SpherePoint& p) { return phi.value(p); }, grid);
    const double c0 = std::max(std::abs(ext.min.value), std::abs(ext.max.value));
    CHECK(b.beta > std::exp(-4.0 * c0));
    CHECK(b.beta < 1.0 - 1e-10);
  }
}

TEST_CASE("curvature") {
  auto k = curvature(MetricModel::round());
  CHECK(k.k_min == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(k.k_max == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(k.delta == doctest::Approx(1.0).epsilon(1e-14));
  k = curvature(MetricModel::conformal(HarmonicField(5)));
  CHECK(k.k_min == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(k.delta == doctest::Approx(1.0).epsilon(1e-12));
  k = curvature(MetricModel::round(2.0));
  CHECK(k.k_max == doctest::Approx(0.25).epsilon(1e-14));

  k = curvature(MetricModel::ellipsoid(1.0, 2.0, 3.0));
  CHECK(k.positive);
  CHECK(k.k_min == doctest::Approx(1.0 / 36.0).epsilon(1e-10));
  CHECK(k.k_max == doctest::Approx(9.0 / 4.0).epsilon(1e-10));
  CHECK(k.delta == doctest::Approx(std::pow(1.0 / 3.0, 4)).epsilon(1e-10));

  const SphereGrid fine(128, 256);
  k = curvature(MetricModel::ellipsoid(1.0, 1.0, 1.5), fine);
  CHECK(std::abs(k.k_min - 1.0 / (1.5 * 1.5)) < 1e-5);
  CHECK(std::abs(k.k_max - 1.5 * 1.5) < 1e-5);
  CHECK(k.k_min <= k.k_max);

  // Conformal pointwise K = e^{-2 phi}(1 - lap phi).
  std::mt19937_64 rng(23);
  const auto m = smooth_conformal(rng, 6, 0.4);
  const auto& c = *m.as<ConformalMetric>();
  for (int i = 0; i < 20; ++i) {
    const auto p = random_point(rng);
    const double expect = std::exp(-2.0 * c.phi.value(p)) * (1.0 - c.laplacian_phi.value(p));
    CHECK(m.curvature(p) == doctest::Approx(expect).epsilon(1e-12));
  }
}

TEST_CASE("area and Gauss-Bonnet") {
  CHECK(std::abs(area(MetricModel::round()) - 4.0 * kPi) < 1e-10);
  CHECK(std::abs(area(MetricModel::ellipsoid(1.0, 1.0, 1.0)) - 4.0 * kPi) < 1e-10);
  CHECK(area(MetricModel::round(3.0)) == doctest::Approx(36.0 * kPi).epsilon(1e-12));

  // Prolate spheroid with semi-axes (1, 1, 2).
  const double e = std::sqrt(1.0 - 0.25);
  const double prolate = 2.0 * kPi * (1.0 + 2.0 / e * std::asin(e));
  CHECK(std::abs(area(MetricModel::ellipsoid(1.0, 1.0, 2.0)) - prolate) < 1e-8);

  std::mt19937_64 rng(24);
  const std::vector<MetricModel> models = {
      MetricModel::round(), MetricModel::round(0.3), MetricModel::ellipsoid(1.0, 1.0, 2.0),
      MetricModel::ellipsoid(0.8, 1.1, 1.7), smooth_conformal(rng, 6, 0.3),
      smooth_conformal(rng, 10, 0.6)};
  for (const auto& m : models) {
    CHECK(std::abs(total_curvature(m, default_grid(m)) - 4.0 * kPi) < 1e-6);
  }
}

TEST_CASE("first eigenvalue") {
  CHECK(std::abs(lambda1(MetricModel::round()) - 2.0) < 1e-8);
  CHECK(std::abs(lambda1(MetricModel::round(2.0)) - 0.5) < 1e-8);
  CHECK(std::abs(lambda1(MetricModel::ellipsoid(1.0, 1.0, 1.0)) - 2.0) < 1e-8);
  CHECK_THROWS_AS(lambda1(MetricModel::round(), 0), ResolutionError);

  const auto flat = MetricModel::conformal(HarmonicField::constant(-0.7, 2));
  CHECK(std::abs(lambda1(flat) * area(flat) - 8.0 * kPi) < 1e-6);

  std::mt19937_64 rng(25);
  for (int trial = 0; trial < 4; ++trial) {
    const auto m = smooth_conformal(rng, 4, 0.3);
    CHECK(lambda1(m, 12) * area(m) <= 8.0 * kPi);
  }
  // Oblate and prolate spheroids sit strictly below the round value.
  CHECK(lambda1(MetricModel::ellipsoid(1.0, 1.0, 2.0)) * area(MetricModel::ellipsoid(1.0, 1.0, 2.0)) <
        8.0 * kPi);
}

TEST_CASE("mesh distance") {
  const auto mesh = SphereMesh::icosphere(4);
  CHECK(mesh.vertices().size() == 10u * 16u + 2u);
  CHECK(mesh.triangles().size() == 20u * 16u);
  CHECK_THROWS_AS(SphereMesh::icosphere(0), ResolutionError);
  const MeshDistance md(MetricModel::round(), SphereMesh::icosphere(32));
  const auto d = md.distances_from(0);
  double far = 0.0;
  for (double x : d) far = std::max(far, x);
  CHECK(far > 0.98 * kPi);
  CHECK(far < 1.02 * kPi);
  CHECK(d[0] == 0.0);
  CHECK_THROWS_AS(md.distances_from(-1), DomainError);
}

TEST_CASE("diameter") {
  DiameterOptions coarse;
  coarse.resolution = 32;
  const auto d32 = diameter(MetricModel::round(), coarse);
  const auto d64 = diameter(MetricModel::round());
  CHECK(std::abs(d64.value - kPi) < 1e-2);
  CHECK(std::abs(d64.value - kPi) <= std::abs(d32.value - kPi));
  CHECK(std::abs(angular_distance(d64.p, d64.q) - kPi) < 0.05);

  const auto r2 = diameter(MetricModel::round(2.0));
  CHECK(std::abs(r2.value - 2.0 * kPi) < 2e-2);

  const auto tall = diameter(MetricModel::ellipsoid(1.0, 1.0, 3.0));
  CHECK(tall.value >= half_perimeter(1.0, 3.0) - tall.error_estimate);
  CHECK(tall.value <= half_perimeter(1.0, 3.0) * 1.01);

  coarse.resolution = 2;
  CHECK_THROWS_AS(diameter(MetricModel::round(), coarse), ResolutionError);
}

TEST_CASE("geometry report") {
  const auto m = MetricModel::ellipsoid(1.0, 1.0, 1.5);
  const auto g = geometry(m);
  CHECK(g.volume_disk_bundle == 2.0 * kPi * g.area);
  CHECK(g.area > 0.0);
  CHECK(g.diameter > 0.0);
  CHECK(g.lambda1 > 0.0);
  CHECK(g.diameter_error >= 0.0);
}

TEST_CASE("metric JSON") {
  std::mt19937_64 rng(26);
  const auto c = smooth_conformal(rng, 3, 0.2);
  const auto back = metric_from_json(to_json(c));
  REQUIRE(back.as<ConformalMetric>() != nullptr);
  for (int k = 0; k < c.as<ConformalMetric>()->phi.size(); ++k) {
    CHECK(back.as<ConformalMetric>()->phi.coeffs()[k] == c.as<ConformalMetric>()->phi.coeffs()[k]);
  }
  const auto e = metric_from_json(nlohmann::json::parse(R"({"variant":"ellipsoid","axes":[2,1,3]})"));
  CHECK(e.as<EllipsoidMetric>()->a == 1.0);
  CHECK(e.as<EllipsoidMetric>()->c == 3.0);
  const auto r = metric_from_json(nlohmann::json::parse(R"({"variant":"round","R":1.5})"));
  CHECK(r.as<RoundMetric>()->radius == 1.5);
  CHECK(metric_from_json(to_json(r)).as<RoundMetric>()->radius == 1.5);
  CHECK_THROWS_AS(metric_from_json(nlohmann::json::parse(R"({"variant":"torus"})")), DomainError);
  CHECK_THROWS_AS(metric_from_json(nlohmann::json::parse(R"({"variant":"ellipsoid"})")), DomainError);
  CHECK_THROWS(load_metric("/nonexistent/metric.json"));
}
