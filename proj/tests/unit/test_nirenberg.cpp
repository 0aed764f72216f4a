#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "helpers.hpp"
#include "reeb/error.hpp"
#include "reeb/metrics/balance.hpp"
#include "reeb/nirenberg/constants.hpp"
#include "reeb/nirenberg/curvature_io.hpp"
#include "reeb/nirenberg/gauss_solver.hpp"
#include "reeb/nirenberg/lemmas.hpp"

using namespace reeb;
using reeb::testing::random_field;
using reeb::testing::random_point;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kE = std::numbers::e;

ManufacturedField corpus_field(int i) {
  switch (i) {
    case 0:
      return {{{Vec3::UnitZ(), 0.2, 0.5}}};
    case 1:
      return {{{Vec3(1, 1, 0).normalized(), -0.1, 0.8}}};
    case 2:
      return {{{Vec3(0.3, -0.5, 0.8).normalized(), 0.08, -1.0}}};
    case 3:
      return {{{Vec3::UnitZ(), 0.2, 0.5}, {Vec3(1, 1, 0).normalized(), -0.1, 0.8}}};
    default:
      return {{{Vec3::UnitX(), 0.05, -4.0}, {Vec3(0, 1, 1).normalized(), 0.1, 0.3}}};
  }
}

double mean_of(const ManufacturedField& f) {
  const SphereGrid grid(96, 192);
  return grid.integrate(grid.sample([&](const SpherePoint& p) { return f.value(p); })) /
         (4.0 * kPi);
}

// sup over random points of |u - (u* - mean u*)|.
double recovery_error(const GaussSolution& sol, const ManufacturedField& f, std::uint64_t seed) {
  const double m = mean_of(f);
  std::mt19937_64 rng(seed);
  double worst = 0.0;
  for (int i = 0; i < 400; ++i) {
    const auto p = random_point(rng);
    worst = std::max(worst, std::abs(sol.u.value(p) - (f.value(p) - m)));
  }
  return worst;
}

}  // namespace

TEST_CASE("Sobolev series constant") {
  CHECK(cs_partial(0) == 1.0);
  CHECK(cs_term(0) == 1.0);
  CHECK(cs_term(1) == doctest::Approx(9.0 / 7.0).epsilon(1e-15));
  // Frozen from an exact rational evaluation.
  CHECK(cs_partial(10) == doctest::Approx(3.8007322585298777799).epsilon(1e-14));
  CHECK(cs_tail_bound(10) == doctest::Approx(0.36388639037163595505).epsilon(1e-13));
  CHECK(cs_series_limit() == doctest::Approx(kPi * kPi / 3.0 + 2.0).epsilon(1e-15));
  for (int L = 1; L <= 200; L += (L < 20 ? 1 : 17)) {
    CHECK(cs_partial(L) + cs_tail_bound(L) < cs_series_limit());
    CHECK(cs_partial(L) < cs_partial(L + 1));
    const double l = L + 1;
    CHECK(cs_term(L + 1) < std::pow((2 * l + 1) / (l * (l + 1)), 2));
  }
  CHECK(cs_upper() == doctest::Approx(0.5 * std::sqrt((kPi * kPi / 3.0 + 2.0) / kPi)).epsilon(1e-15));
  CHECK(cp_upper() == doctest::Approx(std::sqrt(7.0) / 2.0).epsilon(1e-15));

  const auto r = constants_report(100);
  CHECK(r.truncation == 100);
  CHECK(r.cs_partial + r.cs_tail_bound < cs_series_limit());
  CHECK(r.cs_series_bound <= r.cs_upper);
  CHECK(r.chain_factor == doctest::Approx(2.0 * r.cs_upper * r.cp_upper).epsilon(1e-15));
}

TEST_CASE("Poincare ratio") {
  CHECK(cp_ratio(1) == 1.75);
  CHECK(cp_ratio(2) == doctest::Approx(43.0 / 36.0).epsilon(1e-15));
  for (int l = 2; l <= 50; ++l) {
    CHECK(cp_ratio(l) < 1.75);
    CHECK(cp_ratio(l) < cp_ratio(l - 1));
    CHECK(cp_ratio(l) > 1.0);
  }
  CHECK(cp_ratio(5000) == doctest::Approx(1.0).epsilon(1e-6));
  CHECK_THROWS_AS(cp_ratio(0), DomainError);
  CHECK(cp_upper() * cp_upper() == doctest::Approx(cp_ratio(1)).epsilon(1e-15));
}

TEST_CASE("beta(delta) bound") {
  // Frozen from an independent 30-digit evaluation.
  CHECK(log_beta_delta_bound(1.0) == doctest::Approx(-77.157767344718972817).epsilon(1e-13));
  CHECK(beta_delta_bound(1.0) == doctest::Approx(3.0960460110848974435e-34).epsilon(1e-12));
  CHECK(log_beta_delta_bound(0.5) == doctest::Approx(-608.03208095753299976).epsilon(1e-13));
  CHECK(log_beta_delta_bound(0.9) == doctest::Approx(-100.20258387868033791).epsilon(1e-13));
  CHECK(beta_delta_bound(0.5) < beta_delta_bound(0.9));
  CHECK(beta_delta_bound(0.9) < beta_delta_bound(1.0));
  CHECK(beta_delta_bound(0.05) == 0.0);  // underflows; the log form stays finite
  CHECK(std::isfinite(log_beta_delta_bound(0.05)));
  for (double d = 0.02; d < 1.0; d += 0.02) {
    CHECK(std::isfinite(log_beta_delta_bound(d)));
    CHECK(log_beta_delta_bound(d) < log_beta_delta_bound(d + 0.01));
  }
  CHECK_THROWS_AS(beta_delta_bound(0.0), DomainError);
  CHECK_THROWS_AS(beta_delta_bound(1.01), DomainError);
  CHECK_THROWS_AS(log_beta_delta_bound(-0.3), DomainError);

  // The bound is far from sharp on spheroids.
  for (double c : {1.1, 1.5, 2.0}) {
    const auto m = MetricModel::ellipsoid(1.0, 1.0, c);
    const double delta = curvature(m).delta;
    CHECK(delta == doctest::Approx(std::pow(1.0 / c, 4)).epsilon(1e-9));
    CHECK(std::log(balance(m).beta) > log_beta_delta_bound(delta));
  }
}

TEST_CASE("manufactured bumps") {
  const ZonalBump b{Vec3::UnitZ(), 0.3, -1.5};
  std::mt19937_64 rng(40);
  for (int i = 0; i < 10; ++i) {
    const auto p = random_point(rng);
    CHECK(b.value(p) == doctest::Approx(b.value(p.antipode())).epsilon(1e-15));
  }
  // Laplacian against the spectral one on a band-limited projection.
  const int L = 40;
  const SphereGrid grid = SphereGrid::for_band_limit(L);
  const auto f = analyze(grid, grid.sample([&](const SpherePoint& p) { return b.value(p); }), L);
  const auto lap = laplacian(f);
  for (int i = 0; i < 10; ++i) {
    const auto p = random_point(rng);
    CHECK(std::abs(lap.value(p) - b.laplacian(p)) < 1e-9);
  }
}

TEST_CASE("round curvature has the trivial solution") {
  const auto k = PrescribedCurvature::from_field(HarmonicField::constant(1.0, 0), true);
  const auto sol = solve_gauss_equation(k, {.band_limit = 16});
  CHECK(sol.u.l2_norm() < 1e-12);
  CHECK(sol.scale == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(sol.residual < 1e-10);
  CHECK(std::abs(sol.gauss_bonnet - 4.0 * kPi) < 1e-8);
  CHECK(check_min_bound(sol).margin == doctest::Approx(1.0).epsilon(1e-10));
  const auto g = check_gradient_bound(sol, k);
  CHECK(g.lhs < 1e-20);
  CHECK(g.margin_pinched > 0.0);
  CHECK(g.margin_simplified > 0.0);
  CHECK(g.first_applicable);
  CHECK(g.margin_first > 0.0);
  const auto chain = oscillation_chain(sol);
  CHECK(chain.osc < 1e-12);
  CHECK(chain.laplacian_bound < 1e-12);
}

TEST_CASE("solver input validation") {
  const auto negative = PrescribedCurvature(
      [](const SpherePoint& p) { return 0.1 - p.z() * p.z(); }, true);
  CHECK_THROWS_AS(solve_gauss_equation(negative, {.band_limit = 8}), DomainError);
  const auto odd = PrescribedCurvature([](const SpherePoint& p) { return 1.0 + 0.2 * p.z(); }, true);
  CHECK_THROWS_AS(solve_gauss_equation(odd, {.band_limit = 8}), DomainError);
  // A tolerance below the truncation floor of a coarse basis is reported, not faked.
  const auto k = PrescribedCurvature::manufactured(corpus_field(4));
  try {
    solve_gauss_equation(k, {.band_limit = 6, .tol = 1e-13, .max_newton = 8});
    FAIL("expected SolverError");
  } catch (const SolverError& e) {
    CHECK(e.last_residual() > 1e-13);
    CHECK(e.iterations() > 0);
  }
}

TEST_CASE("manufactured solutions are recovered") {
  for (int i = 0; i < 5; ++i) {
    const auto f = corpus_field(i);
    const auto k = PrescribedCurvature::manufactured(f);
    CHECK(k.antipodal());
    const auto sol = solve_gauss_equation(k);
    CHECK(sol.residual < 1e-10);
    CHECK(sol.u(0, 0) == 0.0);
    CHECK(sol.u.is_antipodal(1e-12));
    CHECK(std::abs(sol.gauss_bonnet - 4.0 * kPi) < 1e-8);
    CHECK(sol.scale == doctest::Approx(std::exp(2.0 * mean_of(f))).epsilon(1e-8));
    CHECK(recovery_error(sol, f, 41 + i) < 1e-6);
    for (std::size_t j = 1; j < sol.merit_history.size(); ++j) {
      CHECK(sol.merit_history[j] < sol.merit_history[j - 1]);
    }
    CHECK(sol.residual_history.back() == sol.residual);

    CHECK(check_min_bound(sol).margin >= 0.0);
    const auto g = check_gradient_bound(sol, k);
    CHECK(g.delta == doctest::Approx(g.k_min / g.k_max).epsilon(1e-14));
    CHECK(g.rhs_pinched == doctest::Approx(0.5 * (kE / g.delta + 1.0)).epsilon(1e-14));
    CHECK(g.first_applicable);
    CHECK(g.margin_first >= 0.0);
    CHECK(g.margin_simplified >= 0.0);
    CHECK(g.margin_pinched >= 0.0);
    const auto chain = oscillation_chain(sol);
    CHECK(chain.monotone);
    CHECK(chain.osc <= chain.c0_bound);
    CHECK(chain.c0_bound <= chain.h2_bound);
    CHECK(chain.h2_bound <= chain.laplacian_bound);
    CHECK(check_onofri(sol.u).margin >= -1e-10);
  }
}

TEST_CASE("recovery error decays spectrally") {
  const ManufacturedField f{{{Vec3(0.2, 0.4, 1.0).normalized(), 0.05, -4.0}}};
  const auto k = PrescribedCurvature::manufactured(f);
  const auto coarse = solve_gauss_equation(k, {.band_limit = 16, .tol = 1e-4});
  const auto fine = solve_gauss_equation(k, {.band_limit = 32});
  const double e16 = recovery_error(coarse, f, 50);
  const double e32 = recovery_error(fine, f, 50);
  CHECK(e32 * 10.0 <= e16);
}

TEST_CASE("non-antipodal curvature") {
  // u* = even bump plus a small odd part; all degrees are unknowns.
  const ZonalBump even{Vec3::UnitZ(), 0.2, 0.5};
  const double eps = 0.02;
  const SphereFunction u_star = [&](const SpherePoint& p) { return even.value(p) + eps * p.x(); };
  const SphereFunction lap = [&](const SpherePoint& p) { return even.laplacian(p) - 2.0 * eps * p.x(); };
  const PrescribedCurvature k(
      [&](const SpherePoint& p) { return std::exp(-2.0 * u_star(p)) * (1.0 - lap(p)); }, false);
  const auto sol = solve_gauss_equation(k, {.band_limit = 24});
  CHECK(sol.residual < 1e-10);
  CHECK_FALSE(sol.antipodal);
  CHECK(std::abs(sol.gauss_bonnet - 4.0 * kPi) < 1e-8);
  CHECK(std::abs(sol.u(1, 1) - eps * std::sqrt(4.0 * kPi / 3.0)) < 1e-8);

  // K = 1 + z/10 violates the Kazdan-Warner condition, so there is nothing to converge to.
  const PrescribedCurvature obstructed([](const SpherePoint& p) { return 1.0 + 0.1 * p.z(); }, false);
  CHECK_THROWS_AS(solve_gauss_equation(obstructed, {.band_limit = 12}), SolverError);
}

TEST_CASE("Onofri inequality") {
  CHECK(check_onofri(HarmonicField(4)).margin == doctest::Approx(0.0));
  for (double eps : {0.1, 1.0}) {
    const auto c = check_onofri(eps * HarmonicField::basis(2, 2, 0));
    CHECK(c.margin > 0.0);
  }
  CHECK_THROWS_AS(check_onofri(HarmonicField::basis(2, 1, 0)), DomainError);
  CHECK_THROWS_AS(check_onofri(HarmonicField::constant(1.0, 2)), DomainError);

  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> size(0.0, 3.0);
  double worst = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 1000; ++i) {
    auto u = random_field(rng, 6, 1.0, true, true);
    const double h1 = std::sqrt(u.l2_norm() * u.l2_norm() + u.gradient_energy());
    u = (size(rng) / h1) * u;
    worst = std::min(worst, check_onofri(u).margin);
  }
  CHECK(worst >= -1e-10);
}

TEST_CASE("oscillation chain") {
  const auto zero = oscillation_chain(HarmonicField(3));
  CHECK(zero.osc == 0.0);
  CHECK(zero.c0_bound == 0.0);
  CHECK(zero.h2_bound == 0.0);
  CHECK(zero.laplacian_bound == 0.0);
  const auto y = oscillation_chain(0.3 * HarmonicField::basis(2, 2, 0));
  CHECK(y.osc < y.c0_bound);
  CHECK(y.c0_bound < y.h2_bound);
  CHECK(y.h2_bound < y.laplacian_bound);
  CHECK(y.monotone);
  // Zonal Y_20 spans [-1/2, 1] times sqrt(5/4pi).
  CHECK(y.osc == doctest::Approx(0.3 * 1.5 * std::sqrt(5.0 / (4.0 * kPi))).epsilon(1e-8));
}

TEST_CASE("curvature input files") {
  const auto j = nlohmann::json::parse(
      R"({"variant": "manufactured", "bumps": [{"axis": [0, 0, 2], "amplitude": 0.2, "alpha": 0.5}]})");
  const auto in = curvature_from_json(j);
  REQUIRE(in.exact.has_value());
  CHECK(in.exact->bumps.size() == 1);
  const ZonalBump unit{Vec3::UnitZ(), 0.2, 0.5};
  CHECK(in.exact->value(SpherePoint(0.3, 0.4, 0.5)) == doctest::Approx(unit.value(SpherePoint(0.3, 0.4, 0.5))));
  CHECK(in.curvature.antipodal());
  const auto again = manufactured_from_json(to_json(*in.exact));
  CHECK(again.bumps[0].amplitude == 0.2);

  const auto m = curvature_from_json(
      nlohmann::json::parse(R"({"variant": "metric", "metric": {"variant": "ellipsoid", "axes": [1, 1, 2]}})"));
  CHECK_FALSE(m.exact.has_value());
  CHECK(m.curvature(SpherePoint(0, 0, 1)) == doctest::Approx(4.0));
  CHECK(m.curvature(SpherePoint(1, 0, 0)) == doctest::Approx(0.25));

  const auto fj = nlohmann::json::parse(R"({"variant": "field", "K": {"band_limit": 0, "coeffs": [[0, 0, 3.5449077018110318]]}, "antipodal": true})");
  CHECK(curvature_from_json(fj).curvature(SpherePoint(0.3, 0.1, 0.2)) == doctest::Approx(1.0));
  CHECK_THROWS(curvature_from_json(nlohmann::json::parse(R"({"variant": "nope"})")));
}
