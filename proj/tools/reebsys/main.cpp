// reebsys: command line front end to the reeb core library.

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "reeb/capacities.hpp"
#include "reeb/error.hpp"
#include "reeb/geodesics/search.hpp"
#include "reeb/metrics/balance.hpp"
#include "reeb/metrics/geometry.hpp"
#include "reeb/metrics/metric_io.hpp"
#include "reeb/nirenberg/constants.hpp"
#include "reeb/nirenberg/curvature_io.hpp"
#include "reeb/nirenberg/lemmas.hpp"
#include "reeb/sphere/field_io.hpp"
#include "reeb/verifier/report.hpp"

using nlohmann::json;
using namespace reeb;

namespace {

json nullable(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

void print(const json& j) { std::cout << j.dump(2) << '\n'; }

json point_json(const SpherePoint& p) { return {p.x(), p.y(), p.z()}; }

int run_capacity(const std::string& domain, int k, double scale) {
  CapacityValue c;
  json witness;
  if (domain == "ball") {
    c = ck_ball(k, scale);
    witness = {{"d", c.d}};
  } else {
    c = ck_round_disk(k, scale);
    witness = {{"m", c.mn.first}, {"n", c.mn.second}};
  }
  print({{"domain", to_string(c.domain)}, {"k", c.k}, {"value", c.value}, {"witness", witness}});
  return 0;
}

int run_balance(const std::string& file) {
  const auto metric = load_metric(file);
  const auto b = balance(metric);
  json out = {{"metric", to_json(metric)},
              {"inradius", b.inradius},
              {"circumradius", b.circumradius},
              {"beta", b.beta}};
  if (metric.as<EllipsoidMetric>()) {
    const auto s = fiber_balance_search(metric, SphereGrid(128, 256));
    out["search"] = {{"inradius", s.inradius}, {"circumradius", s.circumradius}, {"beta", s.beta}};
  }
  print(out);
  return 0;
}

int run_curvature(const std::string& file) {
  const auto metric = load_metric(file);
  const auto c = curvature(metric);
  print({{"metric", to_json(metric)},
         {"k_min", c.k_min},
         {"k_max", c.k_max},
         {"positive", c.positive},
         {"delta", nullable(c.delta)},
         {"argmin", point_json(c.argmin)},
         {"argmax", point_json(c.argmax)},
         {"total_curvature", total_curvature(metric, default_grid(metric))}});
  return 0;
}

int run_geometry(const std::string& file, int lambda_band, int resolution) {
  const auto metric = load_metric(file);
  GeometryOptions opts;
  opts.lambda1_band_limit = lambda_band;
  opts.diameter.resolution = resolution;
  const auto g = geometry(metric, opts);
  print({{"metric", to_json(metric)},
         {"area", g.area},
         {"volume_disk_bundle", g.volume_disk_bundle},
         {"diameter", g.diameter},
         {"diameter_error", g.diameter_error},
         {"lambda1", g.lambda1}});
  return 0;
}

int run_systole(const std::string& file, const SearchOptions& opts, const std::string& csv) {
  const auto metric = load_metric(file);
  const auto est = find_systole_upper(metric, opts);
  json cands = json::array();
  for (const auto& c : est.candidates) {
    cands.push_back({{"length", c.length},
                     {"residual", c.closure_residual},
                     {"source", c.source},
                     {"position", point_json(c.initial.position)},
                     {"velocity", {c.initial.velocity.x(), c.initial.velocity.y(),
                                   c.initial.velocity.z()}}});
  }
  print({{"metric", to_json(metric)},
         {"value", nullable(est.value)},
         {"kind", est.kind},
         {"source", est.source},
         {"found", est.found},
         {"candidates", cands}});
  if (!csv.empty() && est.found) {
    std::ofstream os(csv);
    if (!os) throw std::runtime_error("cannot write " + csv);
    os << "t,x,y,z\n";
    os.precision(17);
    const auto& best = est.candidates.front();
    for (const auto& [t, s] : trajectory(metric, best.initial, best.length)) {
      os << t << ',' << s.position.x() << ',' << s.position.y() << ',' << s.position.z() << '\n';
    }
  }
  return est.found ? 0 : 1;
}

int run_nirenberg_solve(const std::string& file, int band_limit, double tol) {
  const auto input = curvature_from_json(read_json_file(file));
  GaussSolverOptions opts;
  opts.band_limit = band_limit;
  opts.tol = tol;
  const auto sol = solve_gauss_equation(input.curvature, opts);
  json out = {{"band_limit", band_limit},
              {"iterations", sol.iterations},
              {"residual", sol.residual},
              {"scale", sol.scale},
              {"gauss_bonnet", sol.gauss_bonnet},
              {"residual_history", sol.residual_history},
              {"u", to_json(sol.u)}};
  json checks;
  if (sol.antipodal) {
    const auto o = check_onofri(sol.u);
    checks["onofri"] = {{"lhs", o.lhs}, {"rhs", o.rhs}, {"margin", o.margin}};
  }
  const auto mb = check_min_bound(sol);
  checks["min_bound"] = {{"min_u", mb.min_u}, {"mean_u", mb.mean_u}, {"margin", mb.margin}};
  const auto gb = check_gradient_bound(sol, input.curvature);
  checks["gradient_bound"] = {{"lhs", gb.lhs},
                              {"k_min", gb.k_min},
                              {"k_max", gb.k_max},
                              {"delta", gb.delta},
                              {"first_applicable", gb.first_applicable},
                              {"rhs_first", nullable(gb.rhs_first)},
                              {"margin_first", nullable(gb.margin_first)},
                              {"rhs_simplified", gb.rhs_simplified},
                              {"margin_simplified", gb.margin_simplified},
                              {"rhs_pinched", gb.rhs_pinched},
                              {"margin_pinched", gb.margin_pinched}};
  const auto ch = oscillation_chain(sol);
  checks["oscillation_chain"] = {{"osc", ch.osc},
                                 {"c0_bound", ch.c0_bound},
                                 {"h2_bound", ch.h2_bound},
                                 {"laplacian_bound", ch.laplacian_bound},
                                 {"monotone", ch.monotone}};
  out["checks"] = checks;
  if (input.exact) {
    const SphereGrid grid = SphereGrid::for_band_limit(band_limit, band_limit + 24);
    const auto exact = grid.sample([&](const SpherePoint& p) { return input.exact->value(p); });
    const double mean = grid.integrate(exact) / (4.0 * std::numbers::pi);
    const auto u = synthesize(sol.u, grid);
    double err = 0.0;
    for (std::size_t q = 0; q < u.size(); ++q) err = std::max(err, std::abs(u[q] - (exact[q] - mean)));
    out["exact_error"] = err;
  }
  print(out);
  return 0;
}

int run_nirenberg_constants(int truncation) {
  const auto r = constants_report(truncation);
  print({{"truncation", r.truncation},
         {"cs_partial", r.cs_partial},
         {"cs_tail_bound", r.cs_tail_bound},
         {"cs_series_limit", cs_series_limit()},
         {"cs_series_bound", r.cs_series_bound},
         {"cs_upper", r.cs_upper},
         {"cp_upper", r.cp_upper},
         {"chain_factor", r.chain_factor},
         {"cp_ratio_l1", cp_ratio(1)}});
  return 0;
}

int run_beta_delta(double delta) {
  print({{"delta", delta},
         {"beta_bound", beta_delta_bound(delta)},
         {"log_beta_bound", log_beta_delta_bound(delta)}});
  return 0;
}

int run_verify(const std::string& file, const std::string& out_path, const std::string& csv,
               const VerifyOptions& opts) {
  const auto metric = load_metric(file);
  const auto report = verify(metric, opts);
  const std::string text = to_json(report).dump(2) + "\n";
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
  } else {
    std::ofstream os(out_path);
    if (!os) throw std::runtime_error("cannot write " + out_path);
    os << text;
  }
  if (!csv.empty()) {
    std::ofstream os(csv);
    if (!os) throw std::runtime_error("cannot write " + csv);
    write_csv(os, report);
  }
  for (const auto& e : report.entries) {
    std::cerr << (e.informational ? "  info " : "       ") << e.status << "  " << e.id << '\n';
  }
  return report.all_hold() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Capacities, systolic quantities and inequality checks for metrics on S^2"};
  app.require_subcommand(1);

  std::string domain = "ball";
  int k = 1;
  double scale = 1.0;
  auto* cap = app.add_subcommand("capacity", "c_k of a ball or the round disk cotangent bundle");
  cap->add_option("--domain", domain, "ball or disk")->check(CLI::IsMember({"ball", "disk"}));
  cap->add_option("--k", k, "capacity index")->check(CLI::NonNegativeNumber);
  cap->add_option("--scale", scale, "ball capacity a or disk radius R")->check(CLI::PositiveNumber);

  std::string metric_file;
  auto* bal = app.add_subcommand("balance", "inradius, circumradius and beta");
  bal->add_option("--metric", metric_file, "metric JSON file")->required()->check(CLI::ExistingFile);
  auto* curv = app.add_subcommand("curvature", "curvature extremes and pinching");
  curv->add_option("--metric", metric_file, "metric JSON file")->required()->check(CLI::ExistingFile);

  int lambda_band = 16;
  int resolution = 64;
  auto* geo = app.add_subcommand("geometry", "area, volume, diameter and lambda_1");
  geo->add_option("--metric", metric_file, "metric JSON file")->required()->check(CLI::ExistingFile);
  geo->add_option("--lambda-band", lambda_band, "band limit of the eigenvalue solve");
  geo->add_option("--resolution", resolution, "icosphere frequency for the diameter");

  SearchOptions search;
  std::string trajectory_csv;
  auto* sys = app.add_subcommand("systole", "upper bound on the shortest closed geodesic");
  sys->add_option("--metric", metric_file, "metric JSON file")->required()->check(CLI::ExistingFile);
  sys->add_option("--starts", search.starts, "number of shooting starts");
  sys->add_option("--tol", search.tol, "closure residual for acceptance");
  sys->add_option("--seed", search.seed, "offset into the start sequence");
  sys->add_option("--trajectory", trajectory_csv, "write the shortest orbit as CSV");

  auto* nir = app.add_subcommand("nirenberg", "Gauss curvature equation and constants");
  nir->require_subcommand(1);
  std::string curvature_file;
  int band_limit = 32;
  double tol = 1e-10;
  auto* solve = nir->add_subcommand("solve", "solve lap u = 1 - s K e^{2u}");
  solve->add_option("--curvature", curvature_file, "curvature JSON file")
      ->required()
      ->check(CLI::ExistingFile);
  solve->add_option("--bandlimit", band_limit, "band limit of u");
  solve->add_option("--tol", tol, "sup-norm residual tolerance");
  int truncation = 100;
  auto* consts = nir->add_subcommand("constants", "Sobolev and Poincare constant estimates");
  consts->add_option("--truncation", truncation, "series truncation degree");
  double delta = 1.0;
  auto* bd = nir->add_subcommand("beta-delta", "balance bound for a pinching delta");
  bd->add_option("--delta", delta, "pinching in (0, 1]")->required();

  VerifyOptions vopts;
  std::string out_path, csv_path;
  auto* ver = app.add_subcommand("verify", "evaluate every inequality on a metric");
  ver->add_option("--metric", metric_file, "metric JSON file")->required()->check(CLI::ExistingFile);
  ver->add_option("--out", out_path, "report JSON path (- for stdout)");
  ver->add_option("--csv", csv_path, "also write the entries as CSV");
  ver->add_option("--starts", vopts.systole.starts, "number of shooting starts");
  ver->add_option("--seed", vopts.systole.seed, "offset into the start sequence");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help and --version exit 0; every usage error exits 2 like the runtime errors below.
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*cap) return run_capacity(domain, k, scale);
    if (*bal) return run_balance(metric_file);
    if (*curv) return run_curvature(metric_file);
    if (*geo) return run_geometry(metric_file, lambda_band, resolution);
    if (*sys) return run_systole(metric_file, search, trajectory_csv);
    if (*solve) return run_nirenberg_solve(curvature_file, band_limit, tol);
    if (*consts) return run_nirenberg_constants(truncation);
    if (*bd) return run_beta_delta(delta);
    if (*ver) return run_verify(metric_file, out_path, csv_path, vopts);
  } catch (const SolverError& e) {
    std::cerr << "error: " << e.what() << " (residual " << e.last_residual() << " after "
              << e.iterations() << " iterations)\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
