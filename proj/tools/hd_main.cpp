// harmonic-duality command line front end.
//
// Subcommands: solve, transform, verify, ellipse, map-validate, export.
// Every path is a thin composition of library operations; configuration is
// JSON (schema "hd-job/1"), outputs are solution/report JSON and grid CSV.
// Exit codes: 0 ok, 2 schema error, 3 math precondition, 4 numerical failure.
// On failure a single-line JSON diagnostic goes to stderr.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cmath>
#include <complex>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "hd/conformal.hpp"
#include "hd/duality.hpp"
#include "hd/errors.hpp"
#include "hd/expr.hpp"
#include "hd/json_io.hpp"
#include "hd/series.hpp"
#include "hd/verify.hpp"

namespace fs = std::filesystem;
using hd::Json;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct CommonFlags {
  std::string config_path;
  std::string out_dir;
  std::string grid_spec;  // "NRxNT"
  int order = -1;
  double tol = -1.0;
  long seed = -1;
};

int thread_count() {
  if (const char* env = std::getenv("HD_THREADS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

Json load_config(const CommonFlags& flags) {
  if (flags.config_path.empty()) throw hd::schema_error("--config is required");
  std::ifstream in(flags.config_path);
  if (!in) throw hd::schema_error("cannot open config file " + flags.config_path);
  Json cfg;
  try {
    in >> cfg;
  } catch (const std::exception& e) {
    throw hd::schema_error(std::string("config is not valid JSON: ") + e.what());
  }
  if (!cfg.is_object()) throw hd::schema_error("config must be a JSON object");
  if (cfg.value("schema", "") != "hd-job/1")
    throw hd::schema_error("config must declare \"schema\": \"hd-job/1\"");
  return cfg;
}

struct Options {
  int order = hd::kDefaultOrder;
  double tol = hd::kDefaultTol;
  int nr = 64, ntheta = 128;
  unsigned seed = 1234;
  int samples = 512;
};

Options resolve_options(const Json& cfg, const CommonFlags& flags) {
  Options o;
  if (cfg.contains("options")) {
    const Json& j = cfg.at("options");
    o.order = j.value("order", o.order);
    o.tol = j.value("tol", o.tol);
    o.seed = j.value("seed", o.seed);
    o.samples = j.value("samples", o.samples);
    if (j.contains("grid")) {
      const auto& g = j.at("grid");
      if (!g.is_array() || g.size() != 2) throw hd::schema_error("options.grid must be [nr, ntheta]");
      o.nr = g.at(0).get<int>();
      o.ntheta = g.at(1).get<int>();
    }
  }
  if (flags.order > 0) o.order = flags.order;
  if (flags.tol > 0) o.tol = flags.tol;
  if (flags.seed >= 0) o.seed = static_cast<unsigned>(flags.seed);
  if (!flags.grid_spec.empty()) {
    const auto x = flags.grid_spec.find('x');
    if (x == std::string::npos) throw hd::schema_error("--grid expects NRxNT");
    o.nr = std::stoi(flags.grid_spec.substr(0, x));
    o.ntheta = std::stoi(flags.grid_spec.substr(x + 1));
  }
  if (o.nr < 3 || o.ntheta < 8) throw hd::schema_error("grid must be at least 3x8");
  return o;
}

fs::path output_dir(const Json& cfg, const CommonFlags& flags) {
  std::string dir = ".";
  if (cfg.contains("output") && cfg.at("output").contains("dir"))
    dir = cfg.at("output").at("dir").get<std::string>();
  if (!flags.out_dir.empty()) dir = flags.out_dir;
  fs::path p(dir);
  fs::create_directories(p);
  return p;
}

std::string output_name(const Json& cfg, const char* key, const char* fallback) {
  if (cfg.contains("output") && cfg.at("output").contains(key))
    return cfg.at("output").at(key).get<std::string>();
  return fallback;
}

void write_json(const fs::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw hd::numerical_error("cannot write " + path.string());
  out << j.dump(2) << "\n";
}

void write_grid_csv(const fs::path& path, const hd::PolarGrid& grid) {
  std::ofstream out(path);
  if (!out) throw hd::numerical_error("cannot write " + path.string());
  grid.write_csv(out);
}

// Parallel-by-rows sampling of a series onto a polar grid (HD_THREADS caps
// the worker count); deterministic because rows are disjoint.
hd::PolarGrid sample_series(const hd::AnnulusHarmonicSeries& u, double r1, double r2,
                            int nr, int ntheta) {
  hd::PolarGrid grid{r1, r2, nr, ntheta,
                     std::vector<double>(static_cast<std::size_t>(nr) * ntheta, 0.0)};
  const int workers = std::min(thread_count(), nr);
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (int i = w; i < nr; i += workers) {
        const double r = grid.r(i);
        for (int j = 0; j < ntheta; ++j) grid.at(i, j) = u.eval(r, grid.theta(j));
      }
    });
  }
  for (auto& t : pool) t.join();
  return grid;
}

struct Region {
  std::string type;  // annulus | disk | punctured | ellipse | mapped
  double r1 = 0.0, r2 = 1.0;
  double rho = 2.0;
  Json map;
};

Region parse_region(const Json& cfg) {
  if (!cfg.contains("region")) throw hd::schema_error("config needs a \"region\"");
  const Json& r = cfg.at("region");
  Region out;
  out.type = r.value("type", "");
  if (out.type == "annulus") {
    out.r1 = r.value("r1", 0.0);
    out.r2 = r.value("r2", 0.0);
    if (!(out.r1 > 0.0) || !(out.r2 > out.r1))
      throw hd::schema_error("annulus region needs 0 < r1 < r2");
  } else if (out.type == "disk") {
    out.r2 = r.value("r2", 1.0);
  } else if (out.type == "punctured") {
    out.r1 = 0.0;
    out.r2 = 1.0;
  } else if (out.type == "ellipse") {
    out.rho = r.value("rho", 0.0);
    if (!(out.rho > 1.0)) throw hd::schema_error("ellipse region needs rho > 1");
  } else if (out.type == "mapped") {
    if (!r.contains("map")) throw hd::schema_error("mapped region needs a \"map\" object");
    out.map = r.at("map");
  } else {
    throw hd::schema_error("region.type must be annulus|disk|punctured|ellipse|mapped");
  }
  return out;
}

hd::ConformalMapPair parse_conformal_map(const Json& m) {
  if (m.is_string()) {
    const std::string s = m.get<std::string>();
    if (s == "identity") return hd::ConformalMapPair::identity(2.0);
    if (s.rfind("scale:", 0) == 0)
      return hd::ConformalMapPair::scaling(std::stod(s.substr(6)), 2.0);
    throw hd::schema_error("unknown map name: " + s);
  }
  if (!m.is_object()) throw hd::schema_error("map must be a name or an object");
  const double r2 = m.value("r2", 2.0);
  const std::string name = m.value("name", "");
  if (name == "identity") return hd::ConformalMapPair::identity(r2);
  if (name == "scale" || name.rfind("scale:", 0) == 0) {
    const double c = name.rfind("scale:", 0) == 0 ? std::stod(name.substr(6))
                                                  : m.value("c", 1.0);
    return hd::ConformalMapPair::scaling(c, r2);
  }
  if (m.contains("G")) {
    return hd::ConformalMapPair::from_expressions(
        m.at("G").get<std::string>(), m.value("Gprime", ""),
        m.value("F", ""), m.value("Fprime", ""), r2);
  }
  throw hd::schema_error("map object needs \"name\" or expression fields G/Gprime/F");
}

hd::PeriodicFunction data_function(const Json& cfg, const char* key) {
  if (!cfg.contains("data") || !cfg.at("data").contains(key))
    throw hd::schema_error(std::string("config data needs \"") + key + "\"");
  return hd::periodic_function_from_json(cfg.at("data").at(key));
}

int run_solve(const CommonFlags& flags) {
  const Json cfg = load_config(flags);
  const Options opt = resolve_options(cfg, flags);
  const Region region = parse_region(cfg);
  const fs::path dir = output_dir(cfg, flags);
  const std::string problem = cfg.value("problem", "");

  Json solution, report;
  hd::PolarGrid grid;

  if (region.type == "annulus") {
    hd::AnnulusBoundaryData data = hd::boundary_data_from_json(cfg.at("data"));
    data.r1 = region.r1;
    data.r2 = region.r2;
    if (problem == "dirichlet") {
      if (data.kind != hd::BoundaryKind::kDirichlet)
        throw hd::schema_error("problem dirichlet needs kind dirichlet data");
      const hd::AnnulusHarmonicSeries u = hd::solve_dirichlet_annulus(data);
      solution = hd::to_json(u);
      report = hd::to_json(hd::residual_report(u, data, opt.nr, opt.ntheta));
      report["compatibility"] = hd::to_json(hd::check_dirichlet_mean_compatibility(data, opt.tol));
      grid = sample_series(u, data.r1, data.r2, opt.nr, opt.ntheta);
    } else if (problem == "neumann") {
      if (data.kind != hd::BoundaryKind::kNeumann)
        throw hd::schema_error("problem neumann needs kind neumann data");
      hd::TransformOptions topt;
      topt.compat_tol = opt.tol;
      const hd::NeumannSolution U = hd::neumann_from_dirichlet_annulus(data, topt);
      solution = hd::to_json(U);
      report = hd::to_json(hd::residual_report(U.field, data, opt.nr, opt.ntheta));
      report["compatibility"] = hd::to_json(hd::check_neumann_compatibility(data, opt.tol));
      grid = sample_series(U.field, data.r1, data.r2, opt.nr, opt.ntheta);
    } else {
      throw hd::schema_error("problem must be dirichlet or neumann for annulus regions");
    }
  } else if (region.type == "disk" || region.type == "punctured") {
    const bool punctured = region.type == "punctured";
    const double r2 = punctured ? 1.0 : region.r2;
    const hd::PeriodicFunction outer = data_function(cfg, "outer");
    if (problem == "dirichlet") {
      const hd::AnnulusHarmonicSeries u = punctured
                                              ? hd::solve_dirichlet_punctured(outer, opt.tol)
                                              : hd::solve_dirichlet_disk(outer, r2);
      solution = hd::to_json(u);
      grid = sample_series(u, 0.0, r2, opt.nr, opt.ntheta);
    } else if (problem == "neumann") {
      hd::NeumannSolution U =
          punctured ? hd::solve_punctured_neumann(data_function(cfg, "origin"), outer, opt.tol)
                    : hd::neumann_from_dirichlet_disk(outer, opt.tol);
      solution = hd::to_json(U);
      grid = sample_series(U.field, 0.0, 1.0, opt.nr, opt.ntheta);
    } else {
      throw hd::schema_error("problem must be dirichlet or neumann");
    }
  } else if (region.type == "mapped") {
    if (problem != "neumann")
      throw hd::schema_error("mapped regions solve the neumann problem (problem: neumann)");
    const hd::ConformalMapPair map = parse_conformal_map(region.map);
    if (!cfg.contains("data") || !cfg.at("data").contains("Phi"))
      throw hd::schema_error("mapped regions need data.Phi as an expression in w");
    const hd::ComplexExpr phi_expr = hd::ComplexExpr::parse(cfg.at("data").at("Phi").get<std::string>());
    hd::TransferOptions topt;
    topt.samples = opt.samples;
    topt.order = opt.order;
    topt.compat_tol = opt.tol;
    const hd::DoublyConnectedSolution U = hd::doubly_connected_neumann(
        map, [&](hd::Complex w) { return phi_expr.eval(w).real(); }, topt);
    solution = hd::to_json(U.annulus_solution());
    solution["map"] = map.name;
    // grid over the canonical annulus parametrization
    grid = hd::PolarGrid{1.0, map.r2, opt.nr, opt.ntheta,
                         std::vector<double>(static_cast<std::size_t>(opt.nr) * opt.ntheta, 0.0)};
    for (int i = 0; i < opt.nr; ++i)
      for (int j = 0; j < opt.ntheta; ++j)
        grid.at(i, j) = U.eval(map.F(std::polar(grid.r(i), grid.theta(j))));
  } else {
    throw hd::schema_error("use the ellipse subcommand for ellipse regions");
  }

  write_json(dir / output_name(cfg, "solution", "solution.json"), solution);
  if (!report.is_null()) write_json(dir / output_name(cfg, "report", "report.json"), report);
  write_grid_csv(dir / output_name(cfg, "grid", "grid.csv"), grid);
  return 0;
}

int run_transform(const CommonFlags& flags) {
  const Json cfg = load_config(flags);
  const Options opt = resolve_options(cfg, flags);
  const fs::path dir = output_dir(cfg, flags);
  const std::string direction = cfg.value("direction", "");
  if (direction == "dirichlet-from-neumann") {
    Json sol_json;
    if (cfg.contains("solution"))
      sol_json = cfg.at("solution");
    else if (cfg.contains("solution_path")) {
      std::ifstream in(cfg.at("solution_path").get<std::string>());
      if (!in) throw hd::schema_error("cannot open solution_path");
      in >> sol_json;
    } else {
      throw hd::schema_error("transform needs \"solution\" or \"solution_path\"");
    }
    const hd::NeumannSolution U = hd::neumann_solution_from_json(sol_json);
    const hd::AnnulusHarmonicSeries u = hd::dirichlet_from_neumann(U);
    write_json(dir / output_name(cfg, "solution", "solution.json"), hd::to_json(u));
    return 0;
  }
  if (direction == "neumann-from-dirichlet") {
    hd::AnnulusBoundaryData data = hd::boundary_data_from_json(cfg.at("data"));
    hd::TransformOptions topt;
    topt.compat_tol = opt.tol;
    const hd::NeumannSolution U = hd::neumann_from_dirichlet_annulus(data, topt);
    write_json(dir / output_name(cfg, "solution", "solution.json"), hd::to_json(U));
    return 0;
  }
  throw hd::schema_error(
      "direction must be dirichlet-from-neumann or neumann-from-dirichlet");
}

int run_verify(const CommonFlags& flags) {
  const Json cfg = load_config(flags);
  const Options opt = resolve_options(cfg, flags);
  const fs::path dir = output_dir(cfg, flags);
  hd::AnnulusBoundaryData data = hd::boundary_data_from_json(cfg.at("data"));

  Json out;
  if (data.kind == hd::BoundaryKind::kNeumann) {
    out["compatibility"] = hd::to_json(hd::check_neumann_compatibility(data, opt.tol));
    hd::TransformOptions topt;
    topt.compat_tol = opt.tol;
    const hd::NeumannSolution U = hd::neumann_from_dirichlet_annulus(data, topt);
    out["residual"] = hd::to_json(hd::residual_report(U.field, data, opt.nr, opt.ntheta));
    out["roundtrip_defect"] = hd::roundtrip_report(data);
    if (cfg.value("fd", false)) {
      const hd::PolarGrid fd = hd::fd_neumann_solve(data, opt.nr, opt.ntheta);
      // both fields vanish at the grid node nearest (√(r1r2), 0)
      const int pin_i = static_cast<int>(
          std::lround((std::sqrt(data.r1 * data.r2) - data.r1) / fd.dr()));
      const double anchor = U.field.eval(fd.r(pin_i), 0.0);
      double diff = 0.0, scale = 0.0;
      for (int i = 0; i < fd.nr; ++i)
        for (int j = 0; j < fd.ntheta; ++j) {
          const double v = U.field.eval(fd.r(i), fd.theta(j)) - anchor;
          diff = std::max(diff, std::fabs(v - fd.at(i, j)));
          scale = std::max(scale, std::fabs(v));
        }
      out["fd_relative_linf"] = diff / std::max(scale, 1e-300);
    }
  } else {
    out["compatibility"] = hd::to_json(hd::check_dirichlet_mean_compatibility(data, opt.tol));
    const hd::AnnulusHarmonicSeries u = hd::solve_dirichlet_annulus(data);
    out["residual"] = hd::to_json(hd::residual_report(u, data, opt.nr, opt.ntheta));
    out["circle_mean_alpha"] = hd::circle_mean(u).alpha;
    if (cfg.value("fd", false)) {
      const hd::PolarGrid fd = hd::fd_dirichlet_solve(data, opt.nr, opt.ntheta);
      double diff = 0.0;
      for (int i = 0; i < fd.nr; ++i)
        for (int j = 0; j < fd.ntheta; ++j)
          diff = std::max(diff, std::fabs(u.eval(fd.r(i), fd.theta(j)) - fd.at(i, j)));
      out["fd_linf"] = diff;
    }
  }
  if (cfg.value("holder", false)) {
    // one-sided regularity probe on the solved field's third radial derivative
    const hd::AnnulusHarmonicSeries u = data.kind == hd::BoundaryKind::kNeumann
        ? hd::neumann_from_dirichlet_annulus(data).field
        : hd::solve_dirichlet_annulus(data);
    hd::SampleBox box{data.r1 + 0.05 * (data.r2 - data.r1), data.r2, 0.0, kTwoPi};
    const hd::HolderEstimate est = hd::holder_estimate(
        [&](double r, double th) { return u.deriv(r, th, 3, 0); }, box, 200000,
        2e-3, 0.5, opt.seed);
    out["holder"] = hd::to_json(est);
  }
  write_json(dir / output_name(cfg, "report", "verify.json"), out);
  return 0;
}

int run_ellipse(const CommonFlags& flags) {
  const Json cfg = load_config(flags);
  const Options opt = resolve_options(cfg, flags);
  const fs::path dir = output_dir(cfg, flags);
  const Region region = parse_region(cfg);
  if (region.type != "ellipse") throw hd::schema_error("ellipse subcommand needs region.type = ellipse");
  if (!cfg.contains("data") || !cfg.at("data").contains("f"))
    throw hd::schema_error("ellipse needs data.f as an expression in w (= x + iy)");
  const hd::ComplexExpr f_expr = hd::ComplexExpr::parse(cfg.at("data").at("f").get<std::string>());
  const auto f = [&](hd::Complex z) { return f_expr.eval(z).real(); };

  hd::EllipseTransformOptions eopt;
  eopt.samples = opt.samples;
  eopt.order = opt.order;
  eopt.compat_tol = opt.tol;
  const hd::AnnulusBoundaryData data = hd::ellipse_boundary_transform(f, region.rho, eopt);
  const hd::EllipseNeumannSolution U = hd::neumann_on_ellipse(f, region.rho, eopt);

  write_json(dir / output_name(cfg, "boundary", "boundary.json"), hd::to_json(data));
  write_json(dir / output_name(cfg, "solution", "solution.json"),
             hd::to_json(U.annulus_field()));

  // Grid over the inverse-Joukowsky parametrization: rows R in [1, rho],
  // columns θ; the sampled point is z = J(R e^{iθ}).
  hd::PolarGrid grid{1.0, region.rho, opt.nr, opt.ntheta,
                     std::vector<double>(static_cast<std::size_t>(opt.nr) * opt.ntheta, 0.0)};
  for (int i = 0; i < opt.nr; ++i)
    for (int j = 0; j < opt.ntheta; ++j)
      grid.at(i, j) = U.eval(hd::joukowsky(std::polar(grid.r(i), grid.theta(j))));
  write_grid_csv(dir / output_name(cfg, "grid", "grid.csv"), grid);

  // Normal-derivative check at 64 boundary points.
  Json check;
  double worst = 0.0;
  const hd::EllipseRegion& E = U.region();
  const double h = 1e-5;
  for (int j = 0; j < 64; ++j) {
    const double t = kTwoPi * j / 64;
    const hd::Complex zb = E.boundary_point(t);
    const hd::Complex n = E.outward_normal(t);
    const double un = (U.eval(zb) - U.eval(zb - h * n)) / h;
    worst = std::max(worst, std::fabs(un - f(zb)));
  }
  check["normal_derivative_linf"] = worst;
  check["U_at_1"] = U.eval(hd::Complex(1.0, 0.0));
  write_json(dir / output_name(cfg, "report", "report.json"), check);
  return 0;
}

int run_map_validate(const CommonFlags& flags) {
  const Json cfg = load_config(flags);
  const fs::path dir = output_dir(cfg, flags);
  if (!cfg.contains("map")) throw hd::schema_error("map-validate needs a \"map\"");
  const Json& m = cfg.at("map");
  Json out;
  const std::string name = m.is_string() ? m.get<std::string>() : m.value("name", "");
  if (name.rfind("rotate:", 0) == 0) {
    const hd::RiemannMapPair map = hd::RiemannMapPair::rotation(std::stod(name.substr(7)));
    const hd::RiemannValidationReport rep = hd::validate_riemann_map(map);
    out = Json{{"pass", rep.pass},
               {"base_point_dev", rep.base_point_dev},
               {"fprime0", {rep.fprime0.real(), rep.fprime0.imag()}},
               {"riemann_normalized", rep.riemann_normalized},
               {"roundtrip_max", rep.roundtrip_max},
               {"derivative_identity_max", rep.derivative_identity_max}};
  } else if (name.rfind("joukowsky-ellipse:", 0) == 0) {
    const double rho = std::stod(name.substr(18));
    if (!(rho > 1.0)) throw hd::schema_error("joukowsky-ellipse needs rho > 1");
    double roundtrip = 0.0, modulus = 0.0;
    const hd::EllipseRegion E{rho};
    for (int j = 0; j < 256; ++j) {
      const double t = kTwoPi * j / 256;
      const hd::Complex z = E.boundary_point(t);
      const hd::Complex w = hd::t_plus(z);
      roundtrip = std::max(roundtrip, std::abs(hd::joukowsky(w) - z));
      modulus = std::max(modulus, std::fabs(std::abs(w) - rho));
    }
    out = Json{{"pass", roundtrip <= 1e-10 && modulus <= 1e-10},
               {"roundtrip_max", roundtrip},
               {"outer_modulus_max_dev", modulus}};
  } else {
    const hd::ConformalMapPair map = parse_conformal_map(m);
    out = hd::to_json(hd::validate_map(map));
  }
  write_json(dir / output_name(cfg, "report", "map-validate.json"), out);
  const bool pass = out.value("pass", false);
  if (!pass)
    throw hd::precondition_error("map validation failed");
  return 0;
}

int run_export(const CommonFlags& flags) {
  const Json cfg = load_config(flags);
  const Options opt = resolve_options(cfg, flags);
  const fs::path dir = output_dir(cfg, flags);
  Json sol_json;
  if (cfg.contains("solution"))
    sol_json = cfg.at("solution");
  else if (cfg.contains("solution_path")) {
    std::ifstream in(cfg.at("solution_path").get<std::string>());
    if (!in) throw hd::schema_error("cannot open solution_path");
    in >> sol_json;
  } else {
    throw hd::schema_error("export needs \"solution\" or \"solution_path\"");
  }
  const hd::AnnulusHarmonicSeries u = hd::series_from_json(sol_json);
  const hd::PolarGrid grid = sample_series(u, u.r1(), u.r2(), opt.nr, opt.ntheta);
  write_grid_csv(dir / output_name(cfg, "grid", "grid.csv"), grid);
  return 0;
}

int dispatch(const std::string& cmd, const CommonFlags& flags) {
  if (cmd == "solve") return run_solve(flags);
  if (cmd == "transform") return run_transform(flags);
  if (cmd == "verify") return run_verify(flags);
  if (cmd == "ellipse") return run_ellipse(flags);
  if (cmd == "map-validate") return run_map_validate(flags);
  return run_export(flags);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Laplace Dirichlet/Neumann duality on annuli, disks and mapped regions"};
  app.require_subcommand(1);

  CommonFlags flags;
  for (const char* name : {"solve", "transform", "verify", "ellipse", "map-validate", "export"}) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--config", flags.config_path, "job config JSON (schema hd-job/1)");
    sub->add_option("--out", flags.out_dir, "output directory");
    sub->add_option("--grid", flags.grid_spec, "grid size NRxNT");
    sub->add_option("--order", flags.order, "truncation order K");
    sub->add_option("--tol", flags.tol, "tolerance");
    sub->add_option("--seed", flags.seed, "RNG seed");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << Json{{"error", e.what()}, {"code", 2}}.dump() << "\n";
    return 2;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    return dispatch(cmd, flags);
  } catch (const hd::schema_error& e) {
    std::cerr << Json{{"error", e.what()}, {"code", 2}}.dump() << "\n";
    return 2;
  } catch (const hd::precondition_error& e) {
    std::cerr << Json{{"error", e.what()}, {"code", 3}}.dump() << "\n";
    return 3;
  } catch (const hd::numerical_error& e) {
    std::cerr << Json{{"error", e.what()}, {"code", 4}}.dump() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << Json{{"error", e.what()}, {"code", 4}}.dump() << "\n";
    return 4;
  }
}
