#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>
#include <sstream>

#include <nlohmann/json.hpp>

#include "hd/conformal.hpp"
#include "hd/duality.hpp"
#include "hd/errors.hpp"
#include "hd/expr.hpp"
#include "hd/fourier.hpp"
#include "hd/geometry.hpp"
#include "hd/json_io.hpp"
#include "hd/series.hpp"
#include "hd/verify.hpp"

namespace py = pybind11;
using namespace hd;

namespace {

std::string dump_json(const Json& j) { return j.dump(2); }

}  // namespace

PYBIND11_MODULE(_hd, m) {
  m.doc() = "Laplace Dirichlet/Neumann duality on annuli, disks and mapped regions";

  py::register_exception<precondition_error>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<numerical_error>(m, "NumericalError", PyExc_RuntimeError);
  py::register_exception<schema_error>(m, "SchemaError", PyExc_ValueError);

  py::class_<PeriodicFunction>(m, "PeriodicFunction")
      .def(py::init<>())
      .def_static("from_coefficients", &PeriodicFunction::from_coefficients,
                  py::arg("a0"), py::arg("a"), py::arg("b"))
      .def_static("from_samples",
                  [](const std::vector<double>& v, int order) {
                    return PeriodicFunction::from_samples(v, order);
                  },
                  py::arg("samples"), py::arg("order") = -1)
      .def_static("constant", &PeriodicFunction::constant)
      .def_static("harmonic_cos", &PeriodicFunction::harmonic_cos, py::arg("k"),
                  py::arg("amplitude") = 1.0)
      .def_static("harmonic_sin", &PeriodicFunction::harmonic_sin, py::arg("k"),
                  py::arg("amplitude") = 1.0)
      .def_property_readonly("order", &PeriodicFunction::order)
      .def_property_readonly("a0", &PeriodicFunction::a0)
      .def("a", &PeriodicFunction::a)
      .def("b", &PeriodicFunction::b)
      .def("__call__", &PeriodicFunction::eval)
      .def("eval", &PeriodicFunction::eval)
      .def("sample", &PeriodicFunction::sample)
      .def("mean", &PeriodicFunction::mean)
      .def("scale", &PeriodicFunction::scale)
      .def("rotated", &PeriodicFunction::rotated)
      .def("analysis_tail", &PeriodicFunction::analysis_tail)
      .def("__mul__", [](const PeriodicFunction& f, double s) { return s * f; })
      .def("__rmul__", [](const PeriodicFunction& f, double s) { return s * f; })
      .def("__add__", &PeriodicFunction::operator+)
      .def("__sub__", &PeriodicFunction::operator-);

  m.def("fourier_analyze",
        [](const std::vector<double>& v, int order) { return fourier_analyze(v, order); },
        py::arg("samples"), py::arg("order"));

  py::enum_<BoundaryKind>(m, "BoundaryKind")
      .value("DIRICHLET", BoundaryKind::kDirichlet)
      .value("NEUMANN", BoundaryKind::kNeumann);

  py::class_<AnnulusBoundaryData>(m, "AnnulusBoundaryData")
      .def(py::init([](double r1, double r2, const PeriodicFunction& inner,
                       const PeriodicFunction& outer, BoundaryKind kind) {
             AnnulusBoundaryData d{r1, r2, inner, outer, kind};
             d.validate();
             return d;
           }),
           py::arg("r1"), py::arg("r2"), py::arg("inner"), py::arg("outer"),
           py::arg("kind"))
      .def_readonly("r1", &AnnulusBoundaryData::r1)
      .def_readonly("r2", &AnnulusBoundaryData::r2)
      .def_readonly("inner", &AnnulusBoundaryData::inner)
      .def_readonly("outer", &AnnulusBoundaryData::outer)
      .def_readonly("kind", &AnnulusBoundaryData::kind)
      .def("to_json", [](const AnnulusBoundaryData& d) { return dump_json(to_json(d)); })
      .def_static("from_json", [](const std::string& text) {
        return boundary_data_from_json(Json::parse(text));
      });

  m.def("neumann_data_from_cartesian", &neumann_data_from_cartesian, py::arg("f_inner"),
        py::arg("f_outer"), py::arg("r1"), py::arg("r2"));

  py::class_<CompatibilityReport>(m, "CompatibilityReport")
      .def_readonly("ok", &CompatibilityReport::pass)
      .def_readonly("defect", &CompatibilityReport::defect)
      .def_readonly("scale", &CompatibilityReport::scale)
      .def_readonly("tol", &CompatibilityReport::tol);

  m.def("check_neumann_compatibility", &check_neumann_compatibility, py::arg("data"),
        py::arg("tol") = kDefaultTol);
  m.def("check_dirichlet_mean_compatibility", &check_dirichlet_mean_compatibility,
        py::arg("data"), py::arg("tol") = kDefaultTol);

  py::class_<PuncturedNeumannReport>(m, "PuncturedNeumannReport")
      .def_readonly("ok", &PuncturedNeumannReport::pass)
      .def_readonly("mean_defect", &PuncturedNeumannReport::mean_defect)
      .def_readonly("max_mode_error", &PuncturedNeumannReport::max_mode_error)
      .def_readonly("mode_errors", &PuncturedNeumannReport::mode_errors);

  m.def("check_punctured_neumann_data", &check_punctured_neumann_data,
        py::arg("phi_origin"), py::arg("phi_outer"), py::arg("tol") = kDefaultTol);

  py::class_<HarmonicMode>(m, "HarmonicMode")
      .def_readonly("k", &HarmonicMode::k)
      .def_readonly("C", &HarmonicMode::C)
      .def_readonly("D", &HarmonicMode::D)
      .def_readonly("E", &HarmonicMode::E)
      .def_readonly("G", &HarmonicMode::G);

  py::class_<AnnulusHarmonicSeries>(m, "AnnulusHarmonicSeries")
      .def(py::init<double, double>(), py::arg("r1"), py::arg("r2"))
      .def_property_readonly("r1", &AnnulusHarmonicSeries::r1)
      .def_property_readonly("r2", &AnnulusHarmonicSeries::r2)
      .def_property_readonly("A", &AnnulusHarmonicSeries::A)
      .def_property_readonly("B", &AnnulusHarmonicSeries::B)
      .def_property_readonly("order", &AnnulusHarmonicSeries::order)
      .def("mode", &AnnulusHarmonicSeries::mode, py::return_value_policy::copy)
      .def("set_A", &AnnulusHarmonicSeries::set_A)
      .def("set_B", &AnnulusHarmonicSeries::set_B)
      .def("set_mode", &AnnulusHarmonicSeries::set_mode, py::arg("k"), py::arg("C"),
           py::arg("D"), py::arg("E"), py::arg("G"))
      .def("__call__", &AnnulusHarmonicSeries::eval)
      .def("eval", &AnnulusHarmonicSeries::eval)
      .def("deriv", &AnnulusHarmonicSeries::deriv, py::arg("r"), py::arg("theta"),
           py::arg("nr"), py::arg("ntheta"))
      .def("trace", &AnnulusHarmonicSeries::trace)
      .def("radial_derivative_trace", &AnnulusHarmonicSeries::radial_derivative_trace)
      .def_readonly("dropped_modes", &AnnulusHarmonicSeries::dropped_modes)
      .def("to_json", [](const AnnulusHarmonicSeries& u) { return dump_json(to_json(u)); })
      .def_static("from_json", [](const std::string& text) {
        return series_from_json(Json::parse(text));
      });

  m.def("solve_dirichlet_annulus",
        [](const AnnulusBoundaryData& d) { return solve_dirichlet_annulus(d); });
  m.def("solve_dirichlet_disk", &solve_dirichlet_disk, py::arg("phi"), py::arg("r2"));
  m.def("solve_dirichlet_punctured", &solve_dirichlet_punctured, py::arg("phi"),
        py::arg("tol") = kDefaultTol);

  py::class_<CircleMeanProfile>(m, "CircleMeanProfile")
      .def_readonly("alpha", &CircleMeanProfile::alpha)
      .def_readonly("beta", &CircleMeanProfile::beta);
  m.def("circle_mean", &circle_mean);
  m.def("harmonic_conjugate_on_cut", &harmonic_conjugate_on_cut, py::arg("u"),
        py::arg("tol") = kDefaultTol);

  py::class_<PolarPoint>(m, "PolarPoint")
      .def_readonly("r", &PolarPoint::r)
      .def_readonly("theta", &PolarPoint::theta);

  py::class_<NeumannSolution>(m, "NeumannSolution")
      .def_readonly("field", &NeumannSolution::field)
      .def_readonly("normalization", &NeumannSolution::normalization)
      .def_readonly("C", &NeumannSolution::C_const)
      .def("to_json", [](const NeumannSolution& u) { return dump_json(to_json(u)); });

  m.def("neumann_from_dirichlet_annulus",
        [](const AnnulusBoundaryData& d) { return neumann_from_dirichlet_annulus(d); });
  m.def("neumann_from_dirichlet_symmetric",
        [](const AnnulusBoundaryData& d) { return neumann_from_dirichlet_symmetric(d); });
  m.def("neumann_from_dirichlet_disk", &neumann_from_dirichlet_disk, py::arg("f"),
        py::arg("tol") = kDefaultTol);
  m.def("dirichlet_from_neumann", &dirichlet_from_neumann);
  m.def("dirichlet_from_neumann_disk", &dirichlet_from_neumann_disk);
  m.def("solve_punctured_neumann", &solve_punctured_neumann, py::arg("phi_origin"),
        py::arg("phi_outer"), py::arg("tol") = kDefaultTol);
  m.def("compute_C", &compute_C, py::arg("u"), py::arg("tol") = kDefaultTol);
  m.def("compute_C_via_conjugate", &compute_C_via_conjugate, py::arg("u"),
        py::arg("tol") = kDefaultTol);

  // geometry
  m.def("canonical_angle", &canonical_angle);
  m.def("to_polar", [](double x, double y) { return to_polar({x, y}); });
  m.def("normal_derivative_from_radial", &normal_derivative_from_radial,
        py::arg("u_r_value"), py::arg("at_radius"), py::arg("r1"), py::arg("r2"));
  m.def("angle_chord_constant", &angle_chord_constant);

  // conformal
  m.def("joukowsky", &joukowsky);
  m.def("t_plus", &t_plus);
  m.def("t_minus", &t_minus);

  py::class_<EllipseRegion>(m, "EllipseRegion")
      .def(py::init([](double rho) { return EllipseRegion{rho}; }), py::arg("rho"))
      .def_readonly("rho", &EllipseRegion::rho)
      .def_property_readonly("semi_major", &EllipseRegion::semi_major)
      .def_property_readonly("semi_minor", &EllipseRegion::semi_minor)
      .def("boundary_point", &EllipseRegion::boundary_point)
      .def("outward_normal", &EllipseRegion::outward_normal)
      .def("contains", &EllipseRegion::contains, py::arg("z"), py::arg("pad") = 0.0);

  m.def("ellipse_boundary_transform",
        [](const std::function<double(Complex)>& f, double rho) {
          return ellipse_boundary_transform(f, rho);
        },
        py::arg("f"), py::arg("rho"));

  py::class_<EllipseNeumannSolution>(m, "EllipseNeumannSolution")
      .def("__call__", &EllipseNeumannSolution::eval)
      .def("eval", &EllipseNeumannSolution::eval)
      .def("z0_star", &EllipseNeumannSolution::z0_star)
      .def_property_readonly("rho", &EllipseNeumannSolution::rho)
      .def_property_readonly("annulus_field", &EllipseNeumannSolution::annulus_field);

  m.def("neumann_on_ellipse",
        [](const std::function<double(Complex)>& f, double rho) {
          return neumann_on_ellipse(f, rho);
        },
        py::arg("f"), py::arg("rho"));

  py::class_<ConformalMapPair>(m, "ConformalMapPair")
      .def_static("identity", &ConformalMapPair::identity, py::arg("r2"))
      .def_static("scaling", &ConformalMapPair::scaling, py::arg("c"), py::arg("r2"))
      .def_static("from_expressions", &ConformalMapPair::from_expressions,
                  py::arg("g_expr"), py::arg("gprime_expr"), py::arg("f_expr"),
                  py::arg("fprime_expr") = "", py::arg("r2") = 2.0)
      .def_readonly("r2", &ConformalMapPair::r2)
      .def_readonly("name", &ConformalMapPair::name)
      .def("G", [](const ConformalMapPair& m_, Complex w) { return m_.G(w); })
      .def("F", [](const ConformalMapPair& m_, Complex z) { return m_.F(z); });

  py::class_<MapValidationReport>(m, "MapValidationReport")
      .def_readonly("ok", &MapValidationReport::pass)
      .def_readonly("roundtrip_max", &MapValidationReport::roundtrip_max)
      .def_readonly("cauchy_riemann_max", &MapValidationReport::cauchy_riemann_max)
      .def_readonly("gprime_min_abs", &MapValidationReport::gprime_min_abs)
      .def_readonly("derivative_identity_max", &MapValidationReport::derivative_identity_max)
      .def_readonly("outer_contour_is_r2", &MapValidationReport::outer_contour_is_r2)
      .def("to_json", [](const MapValidationReport& r) { return dump_json(to_json(r)); });

  m.def("validate_map", &validate_map, py::arg("map"), py::arg("samples") = 64);

  py::class_<DoublyConnectedSolution>(m, "DoublyConnectedSolution")
      .def("__call__", &DoublyConnectedSolution::eval)
      .def("eval", &DoublyConnectedSolution::eval)
      .def("gradient", &DoublyConnectedSolution::gradient)
      .def_property_readonly("normalization_point",
                             &DoublyConnectedSolution::normalization_point)
      .def_property_readonly("C", &DoublyConnectedSolution::C_const)
      .def_property_readonly("annulus_solution", &DoublyConnectedSolution::annulus_solution);

  m.def("doubly_connected_neumann",
        [](const ConformalMapPair& map, const std::function<double(Complex)>& Phi) {
          return doubly_connected_neumann(map, Phi);
        },
        py::arg("map"), py::arg("Phi"));
  m.def("doubly_connected_dirichlet_from_neumann",
        [](const ConformalMapPair& map, const std::function<Complex(Complex)>& gradU,
           Complex w) { return doubly_connected_dirichlet_from_neumann(map, gradU)(w); },
        py::arg("map"), py::arg("gradU"), py::arg("w"));

  py::class_<RiemannMapPair>(m, "RiemannMapPair")
      .def_static("identity", &RiemannMapPair::identity)
      .def_static("rotation", &RiemannMapPair::rotation, py::arg("alpha"));

  py::class_<SimplyConnectedSolution>(m, "SimplyConnectedSolution")
      .def("__call__", &SimplyConnectedSolution::eval)
      .def("eval", &SimplyConnectedSolution::eval)
      .def("gradient", &SimplyConnectedSolution::gradient);

  m.def("simply_connected_transfer",
        [](const RiemannMapPair& map, const std::function<double(Complex)>& Phi) {
          return simply_connected_transfer(map, Phi);
        },
        py::arg("map"), py::arg("Phi"));

  py::class_<ComplexExpr>(m, "ComplexExpr")
      .def_static("parse", &ComplexExpr::parse)
      .def("__call__", &ComplexExpr::eval)
      .def("eval", &ComplexExpr::eval)
      .def("to_string", &ComplexExpr::to_string);

  // verify
  py::class_<PolarGrid>(m, "PolarGrid")
      .def_readonly("r1", &PolarGrid::r1)
      .def_readonly("r2", &PolarGrid::r2)
      .def_readonly("nr", &PolarGrid::nr)
      .def_readonly("ntheta", &PolarGrid::ntheta)
      .def_readonly("values", &PolarGrid::values)
      .def("r", &PolarGrid::r)
      .def("theta", &PolarGrid::theta)
      .def("at", [](const PolarGrid& g, int i, int j) { return g.at(i, j); })
      .def("to_csv", [](const PolarGrid& g) {
        std::ostringstream out;
        g.write_csv(out);
        return out.str();
      });

  m.def("fd_dirichlet_solve",
        [](const AnnulusBoundaryData& d, int nr, int nt) {
          return fd_dirichlet_solve(d, nr, nt);
        },
        py::arg("data"), py::arg("nr"), py::arg("ntheta"));
  m.def("fd_neumann_solve",
        [](const AnnulusBoundaryData& d, int nr, int nt) {
          return fd_neumann_solve(d, nr, nt);
        },
        py::arg("data"), py::arg("nr"), py::arg("ntheta"));

  py::class_<ResidualReport>(m, "ResidualReport")
      .def_readonly("laplace_linf", &ResidualReport::laplace_linf)
      .def_readonly("bc_inner_linf", &ResidualReport::bc_inner_linf)
      .def_readonly("bc_outer_linf", &ResidualReport::bc_outer_linf)
      .def_readonly("compat_defect", &ResidualReport::compat_defect)
      .def("to_json", [](const ResidualReport& r) { return dump_json(to_json(r)); });

  m.def("residual_report",
        [](const AnnulusHarmonicSeries& u, const AnnulusBoundaryData& d, int nr, int nt) {
          return residual_report(u, d, nr, nt);
        },
        py::arg("series"), py::arg("data"), py::arg("nr"), py::arg("ntheta"));

  py::class_<HolderEstimate>(m, "HolderEstimate")
      .def_readonly("alpha_hat", &HolderEstimate::alpha_hat)
      .def_readonly("const_hat", &HolderEstimate::const_hat)
      .def_readonly("r2_fit", &HolderEstimate::r2_fit)
      .def_readonly("pairs", &HolderEstimate::pairs);

  m.def("holder_estimate",
        [](const std::function<double(double, double)>& fn, double x0, double x1,
           double y0, double y1, int pairs, double h_min, double h_max, unsigned seed) {
          return holder_estimate(fn, SampleBox{x0, x1, y0, y1}, pairs, h_min, h_max, seed);
        },
        py::arg("fn"), py::arg("x0"), py::arg("x1"), py::arg("y0") = 0.0,
        py::arg("y1") = 0.0, py::arg("pairs") = 100000, py::arg("h_min") = 1e-2,
        py::arg("h_max") = 0.5, py::arg("seed") = 1234);

  m.def("roundtrip_report", &roundtrip_report, py::arg("phi"));
}
