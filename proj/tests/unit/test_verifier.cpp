#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "reeb/metrics/balance.hpp"
#include "reeb/metrics/geometry.hpp"
#include "reeb/verifier/report.hpp"

using namespace reeb;

namespace {

constexpr double kPi = std::numbers::pi;

// Exact quantities of the unit round sphere.
Quantities round_quantities() {
  Quantities q;
  q.balance = {1.0, 1.0, 1.0};
  q.curvature.k_min = q.curvature.k_max = q.curvature.delta = 1.0;
  q.geometry.area = 4.0 * kPi;
  q.geometry.volume_disk_bundle = 8.0 * kPi * kPi;
  q.geometry.diameter = kPi;
  q.geometry.lambda1 = 2.0;
  q.systole.value = 2.0 * kPi;
  q.systole.found = true;
  q.systole.source = "shooting_search";
  return q;
}

VerifyOptions quick_options() {
  VerifyOptions o;
  o.systole.starts = 32;
  o.geometry.lambda1_band_limit = 12;
  o.geometry.diameter.resolution = 24;
  o.geometry.diameter.scout_resolution = 8;
  o.geometry.diameter.scout_sources = 2;
  return o;
}

}  // namespace

TEST_CASE("round sphere equality cases") {
  const auto rep = assemble_report(MetricModel::round(), round_quantities());
  CHECK(rep.all_hold());
  const auto* hersch = rep.find("hersch");
  REQUIRE(hersch);
  CHECK(hersch->margin == doctest::Approx(0.0));
  const auto* area = rep.find("systole_area_balanced");
  REQUIRE(area);
  CHECK(area->margin == doctest::Approx(0.0).epsilon(1e-12).scale(100.0));
  CHECK(area->holds);
  CHECK(area->conservative);
  CHECK(rep.find("systole_circumradius")->margin == doctest::Approx(0.0));
  CHECK(rep.find("sharp_systole_area")->status == "holds");
  CHECK(rep.find("sharp_systole_area")->informational);
  CHECK(rep.beta_delta.applicable);
  CHECK(rep.beta_delta.bound_holds);
  CHECK(rep.beta_delta.beta_actual == 1.0);
  CHECK(rep.find("no_such_entry") == nullptr);
  for (const auto& e : rep.entries) {
    CHECK_FALSE(e.statement.empty());
    CHECK_FALSE(e.inputs.empty());
  }
}

TEST_CASE("holds is the normalized margin test") {
  auto q = round_quantities();
  q.systole.value = 2.0 * kPi * (1.0 + 5e-8);
  auto rep = assemble_report(MetricModel::round(), q);
  CHECK(rep.find("systole_circumradius")->holds);
  CHECK(rep.find("systole_circumradius")->margin < 0.0);
  q.systole.value = 2.0 * kPi * (1.0 + 1e-6);
  rep = assemble_report(MetricModel::round(), q);
  const auto* e = rep.find("systole_circumradius");
  CHECK_FALSE(e->holds);
  CHECK(e->status == "inconclusive");
  CHECK(e->note.find("upper bound") != std::string::npos);
  CHECK_FALSE(rep.all_hold());
  for (const auto& x : rep.entries) {
    if (x.status == "holds" || x.status == "fails" || x.status == "inconclusive") {
      CHECK(x.holds == (x.normalized_margin >= -rep.tolerance));
      CHECK(x.normalized_margin ==
            doctest::Approx(x.margin / std::max({std::abs(x.lhs), std::abs(x.rhs), 1.0})));
    }
  }
}

TEST_CASE("systole search failure leaves other entries usable") {
  auto q = round_quantities();
  q.systole = SystoleEstimate{};
  const auto rep = assemble_report(MetricModel::round(), q);
  CHECK(rep.find("systole_volume")->status == "indeterminate");
  CHECK(std::isnan(rep.find("systole_volume")->lhs));
  CHECK(rep.find("hersch")->status == "holds");
  CHECK_FALSE(rep.all_hold());
}

TEST_CASE("curvature hypotheses") {
  auto q = round_quantities();
  q.curvature.k_min = -0.5;
  q.curvature.positive = false;
  q.curvature.delta = std::numeric_limits<double>::quiet_NaN();
  const auto rep = assemble_report(MetricModel::round(), q);
  for (const char* id : {"area_diameter", "systole_diameter_balanced", "systole_diameter_nonnegative"}) {
    const auto* e = rep.find(id);
    REQUIRE(e);
    CHECK(e->status == "skipped");
    CHECK(e->note.rfind("hypothesis unmet", 0) == 0);
  }
  CHECK(rep.find("beta_delta")->status == "skipped");
  CHECK_FALSE(rep.beta_delta.applicable);
  CHECK(rep.all_hold());

  q = round_quantities();
  q.curvature.delta = 0.5;
  const auto loose = assemble_report(MetricModel::round(), q);
  CHECK(loose.find("sharp_systole_area")->status == "skipped");
  CHECK(loose.find("sharp_systole_diameter")->status == "skipped");
}

TEST_CASE("area bound crossover") {
  auto q = round_quantities();
  for (double beta : {0.05, kPi / 32.0 - 1e-6, kPi / 32.0 + 1e-6, 0.3, 1.0}) {
    q.balance = {std::sqrt(beta), 1.0, beta};
    const auto rep = assemble_report(MetricModel::round(), q);
    const auto* e = rep.find("area_bound_crossover");
    REQUIRE(e);
    CHECK(e->informational);
    CHECK(e->holds);
    CHECK((e->lhs < e->rhs) == (beta > kPi / 32.0));
  }
}

TEST_CASE("beta against the pinching bound") {
  auto r = compare_beta_delta(MetricModel::ellipsoid(1.0, 1.0, 2.0));
  CHECK(r.applicable);
  CHECK(r.delta == doctest::Approx(1.0 / 16.0).epsilon(1e-9));
  CHECK(r.beta_actual == 0.25);
  CHECK(r.bound_holds);
  r = compare_beta_delta(MetricModel::round());
  CHECK(r.delta == doctest::Approx(1.0));
  CHECK(r.beta_actual == 1.0);
  CHECK(r.bound_holds);
  CHECK(r.beta_actual > r.beta_bound);

  const auto phi = 0.05 * HarmonicField::basis(2, 2, 0);
  r = compare_beta_delta(MetricModel::conformal(phi));
  CHECK(r.applicable);
  CHECK(r.delta > 0.0);
  CHECK(r.delta < 1.0);
  CHECK(r.bound_holds);

  r = compare_beta_delta(MetricModel::conformal(0.05 * HarmonicField::basis(1, 1, 0)));
  CHECK_FALSE(r.applicable);
  CHECK_FALSE(r.reason.empty());
}

TEST_CASE("spheroid pipeline") {
  const auto m = MetricModel::ellipsoid(1.0, 1.0, 1.2);
  auto opts = quick_options();
  opts.geometry.diameter.resolution = 48;
  const auto rep = verify(m, opts);
  CHECK(rep.quantities.balance.beta == doctest::Approx(1.0 / 1.44).epsilon(1e-14));
  CHECK(rep.all_hold());
  for (const auto& e : rep.entries) {
    if (e.status == "holds") CHECK(e.margin > 0.0);
  }
  // Quantities are exactly the metric module outputs.
  CHECK(rep.quantities.balance.beta == balance(m).beta);
  CHECK(rep.quantities.geometry.area == area(m));
  CHECK(rep.quantities.geometry.volume_disk_bundle == 2.0 * kPi * area(m));
}

TEST_CASE("report serialization is deterministic") {
  const auto m = MetricModel::conformal(0.1 * HarmonicField::basis(2, 2, 1));
  const auto a = to_json(verify(m, quick_options())).dump(2);
  const auto b = to_json(verify(m, quick_options())).dump(2);
  CHECK(a == b);
  const auto j = nlohmann::json::parse(a);
  CHECK(j.at("schema") == "reeb-systole/1");
  CHECK(j.at("entries").size() >= 10);
  CHECK(j.at("quantities").at("systole").at("kind") == "upper_bound");
  for (const auto& e : j.at("entries")) {
    CHECK(e.contains("statement"));
    CHECK(e.contains("inputs_used"));
  }

  std::ostringstream os;
  write_csv(os, assemble_report(MetricModel::round(), round_quantities()));
  const auto text = os.str();
  CHECK(text.rfind("id,lhs,rhs,margin", 0) == 0);
  CHECK(text.find("\nhersch,") != std::string::npos);
}
