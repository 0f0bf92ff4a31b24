#include "hd/json_io.hpp"

#include <nlohmann/json.hpp>

namespace hd {

namespace {

double number_at(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number())
    throw schema_error(std::string("expected number field \"") + key + "\"");
  return j.at(key).get<double>();
}

std::vector<double> vector_at(const Json& j, const char* key) {
  if (!j.contains(key)) return {};
  if (!j.at(key).is_array())
    throw schema_error(std::string("field \"") + key + "\" must be an array");
  std::vector<double> out;
  for (const auto& v : j.at(key)) {
    if (!v.is_number()) throw schema_error(std::string("non-numeric entry in \"") + key + "\"");
    out.push_back(v.get<double>());
  }
  return out;
}

}  // namespace

Json to_json(const PeriodicFunction& f) {
  Json j;
  j["a0"] = f.a0();
  Json a = Json::array(), b = Json::array();
  for (int k = 1; k <= f.order(); ++k) {
    a.push_back(f.a(k));
    b.push_back(f.b(k));
  }
  j["a"] = std::move(a);
  j["b"] = std::move(b);
  return j;
}

PeriodicFunction periodic_function_from_json(const Json& j) {
  if (!j.is_object()) throw schema_error("boundary function must be an object");
  if (j.contains("samples")) {
    const std::vector<double> samples = vector_at(j, "samples");
    try {
      return PeriodicFunction::from_samples(samples);
    } catch (const precondition_error& e) {
      throw schema_error(std::string("bad samples: ") + e.what());
    }
  }
  std::vector<double> a = vector_at(j, "a");
  std::vector<double> b = vector_at(j, "b");
  const std::size_t K = std::max(a.size(), b.size());
  a.resize(K, 0.0);
  b.resize(K, 0.0);
  const double a0 = j.contains("a0") ? number_at(j, "a0") : 0.0;
  return PeriodicFunction::from_coefficients(a0, std::move(a), std::move(b));
}

Json to_json(const AnnulusBoundaryData& d) {
  Json j;
  j["r1"] = d.r1;
  j["r2"] = d.r2;
  j["kind"] = d.kind == BoundaryKind::kDirichlet ? "dirichlet" : "neumann";
  j["inner"] = to_json(d.inner);
  j["outer"] = to_json(d.outer);
  return j;
}

AnnulusBoundaryData boundary_data_from_json(const Json& j) {
  if (!j.is_object()) throw schema_error("boundary data must be an object");
  AnnulusBoundaryData d;
  d.r1 = number_at(j, "r1");
  d.r2 = number_at(j, "r2");
  if (!j.contains("kind") || !j.at("kind").is_string())
    throw schema_error("boundary data needs a \"kind\" string");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "dirichlet")
    d.kind = BoundaryKind::kDirichlet;
  else if (kind == "neumann")
    d.kind = BoundaryKind::kNeumann;
  else
    throw schema_error("kind must be \"dirichlet\" or \"neumann\"");
  if (!j.contains("inner") || !j.contains("outer"))
    throw schema_error("boundary data needs \"inner\" and \"outer\"");
  d.inner = periodic_function_from_json(j.at("inner"));
  d.outer = periodic_function_from_json(j.at("outer"));
  try {
    d.validate();
  } catch (const precondition_error& e) {
    throw schema_error(e.what());
  }
  return d;
}

Json to_json(const AnnulusHarmonicSeries& u) {
  Json j;
  j["r1"] = u.r1();
  j["r2"] = u.r2();
  j["A"] = u.A();
  j["B"] = u.B();
  Json modes = Json::array();
  for (const HarmonicMode& m : u.modes()) {
    modes.push_back(Json{{"k", m.k}, {"C", m.C}, {"D", m.D}, {"E", m.E}, {"G", m.G}});
  }
  j["modes"] = std::move(modes);
  if (!u.dropped_modes.empty()) j["dropped_modes"] = u.dropped_modes;
  return j;
}

AnnulusHarmonicSeries series_from_json(const Json& j) {
  if (!j.is_object()) throw schema_error("series must be an object");
  AnnulusHarmonicSeries u(number_at(j, "r1"), number_at(j, "r2"));
  u.set_A(j.contains("A") ? number_at(j, "A") : 0.0);
  u.set_B(j.contains("B") ? number_at(j, "B") : 0.0);
  if (j.contains("modes")) {
    if (!j.at("modes").is_array()) throw schema_error("\"modes\" must be an array");
    for (const auto& m : j.at("modes")) {
      const int k = static_cast<int>(number_at(m, "k"));
      u.set_mode(k, m.contains("C") ? number_at(m, "C") : 0.0,
                 m.contains("D") ? number_at(m, "D") : 0.0,
                 m.contains("E") ? number_at(m, "E") : 0.0,
                 m.contains("G") ? number_at(m, "G") : 0.0);
    }
  }
  return u;
}

Json to_json(const NeumannSolution& u) {
  Json j = to_json(u.field);
  j["C"] = u.C_const;
  j["normalization"] = Json{{"r", u.normalization.r}, {"theta", u.normalization.theta}};
  return j;
}

NeumannSolution neumann_solution_from_json(const Json& j) {
  NeumannSolution sol;
  sol.field = series_from_json(j);
  sol.C_const = j.contains("C") ? number_at(j, "C") : 0.0;
  if (j.contains("normalization")) {
    sol.normalization.r = number_at(j.at("normalization"), "r");
    sol.normalization.theta = number_at(j.at("normalization"), "theta");
  }
  return sol;
}

Json to_json(const CompatibilityReport& r) {
  return Json{{"pass", r.pass}, {"defect", r.defect}, {"scale", r.scale}, {"tol", r.tol}};
}

Json to_json(const ResidualReport& r) {
  return Json{{"laplace_linf", r.laplace_linf},
              {"bc_inner_linf", r.bc_inner_linf},
              {"bc_outer_linf", r.bc_outer_linf},
              {"compat_defect", r.compat_defect},
              {"notes", r.notes}};
}

Json to_json(const HolderEstimate& e) {
  return Json{{"alpha_hat", e.alpha_hat},
              {"const_hat", e.const_hat},
              {"r2_fit", e.r2_fit},
              {"pairs", e.pairs}};
}

Json to_json(const MapValidationReport& r) {
  return Json{{"pass", r.pass},
              {"roundtrip_max", r.roundtrip_max},
              {"inner_modulus_max_dev", r.inner_modulus_max_dev},
              {"outer_modulus_max_dev", r.outer_modulus_max_dev},
              {"cauchy_riemann_max", r.cauchy_riemann_max},
              {"gprime_min_abs", r.gprime_min_abs},
              {"derivative_identity_max", r.derivative_identity_max},
              {"outer_contour_is_r2", r.outer_contour_is_r2}};
}

}  // namespace hd
