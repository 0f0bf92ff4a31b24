#include "hd/duality.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "hd/quadrature.hpp"

namespace hd {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Integrate one Laurent-Fourier mode of u into the corresponding mode of U
// and accumulate the normalization constant.  Shared by the general and the
// symmetric paths (the symmetric path contributes no constant).
AnnulusHarmonicSeries integrate_field(const AnnulusHarmonicSeries& u,
                                      bool with_angular_constant) {
  const double s = std::sqrt(u.r1() * u.r2());
  AnnulusHarmonicSeries U(u.r1(), u.r2());
  U.set_B(u.A());  // A log(r/s): log part
  double A0 = -u.A() * std::log(s);
  for (const HarmonicMode& m : u.modes()) {
    const double k = m.k;
    U.set_mode(m.k, m.C / k, -m.D / k, m.E / k, -m.G / k);
    if (with_angular_constant)
      A0 -= (m.C * std::pow(s, m.k) - m.D * std::pow(s, -m.k)) / k;
  }
  U.set_A(A0);
  U.dropped_modes = u.dropped_modes;
  return U;
}

AnnulusHarmonicSeries dirichlet_data_from_neumann(const AnnulusBoundaryData& phi,
                                                  const TransformOptions& opt,
                                                  AnnulusBoundaryData* out_data) {
  AnnulusBoundaryData dir;
  dir.r1 = phi.r1;
  dir.r2 = phi.r2;
  dir.inner = phi.r1 * phi.inner;
  dir.outer = phi.r2 * phi.outer;
  dir.kind = BoundaryKind::kDirichlet;
  if (out_data) *out_data = dir;
  AnnulusHarmonicSeries u = solve_dirichlet_annulus(dir, opt.solve);
  // Compatibility makes the circle means equal, so B vanishes up to rounding;
  // pin it to keep U_r = u/r exact.
  u.set_B(0.0);
  return u;
}

}  // namespace

NeumannSolution neumann_from_dirichlet_annulus(const AnnulusBoundaryData& phi,
                                               const TransformOptions& opt) {
  if (phi.kind != BoundaryKind::kNeumann)
    throw precondition_error("transform requires Neumann boundary data");
  const CompatibilityReport compat = check_neumann_compatibility(phi, opt.compat_tol);
  if (!compat.pass)
    throw precondition_error(
        "Neumann compatibility condition violated: defect = " +
        std::to_string(compat.defect));
  AnnulusHarmonicSeries u = dirichlet_data_from_neumann(phi, opt, nullptr);
  NeumannSolution sol{integrate_field(u, true),
                      PolarPoint{std::sqrt(phi.r1 * phi.r2), 0.0},
                      compute_C(u, opt.compat_tol)};
  return sol;
}

NeumannSolution neumann_from_dirichlet_symmetric(const AnnulusBoundaryData& phi,
                                                 const TransformOptions& opt) {
  if (phi.kind != BoundaryKind::kNeumann)
    throw precondition_error("transform requires Neumann boundary data");
  // r1 ϕ(r1,·) = r2 ϕ(r2,·) coefficientwise.
  const PeriodicFunction lhs = phi.r1 * phi.inner;
  const PeriodicFunction rhs = phi.r2 * phi.outer;
  const int K = std::max(lhs.order(), rhs.order());
  const double scale = std::max({1.0, lhs.scale(), rhs.scale()});
  std::string bad;
  if (std::fabs(lhs.a0() - rhs.a0()) > opt.symmetry_tol * scale) bad += " 0";
  for (int k = 1; k <= K; ++k) {
    if (std::fabs(lhs.a(k) - rhs.a(k)) > opt.symmetry_tol * scale ||
        std::fabs(lhs.b(k) - rhs.b(k)) > opt.symmetry_tol * scale)
      bad += " " + std::to_string(k);
  }
  if (!bad.empty())
    throw precondition_error("symmetric transform requires r1*phi(r1) = r2*phi(r2); offending modes:" + bad);

  AnnulusHarmonicSeries u = dirichlet_data_from_neumann(phi, opt, nullptr);
  const double s = std::sqrt(phi.r1 * phi.r2);

  // u_r(√(r1r2), ·) = 0 under the symmetry hypothesis.
  const PeriodicFunction ur_mid = u.radial_derivative_trace(s);
  if (ur_mid.scale() > 1e5 * opt.symmetry_tol * std::max(1.0, u.coefficient_scale()))
    throw numerical_error("symmetric transform: u_r at the geometric-mean circle did not vanish");

  NeumannSolution sol{integrate_field(u, false), PolarPoint{s, 0.0}, 0.0};

  // The general Theorem-1 path must agree.
  const NeumannSolution general = neumann_from_dirichlet_annulus(phi, opt);
  const double tol12 = 1e-12 * std::max(1.0, general.field.coefficient_scale());
  if (std::fabs(sol.field.A() - general.field.A()) > tol12)
    throw numerical_error("symmetric and general transforms disagree");
  return sol;
}

NeumannSolution neumann_from_dirichlet_disk(const PeriodicFunction& f, double tol) {
  if (std::fabs(kTwoPi * f.mean()) > tol * std::max(1.0, f.scale()))
    throw precondition_error("disk Neumann data must have zero mean");
  AnnulusHarmonicSeries u = solve_dirichlet_disk(f, 1.0);
  AnnulusHarmonicSeries U(0.0, 1.0);
  U.set_A(0.0);
  for (const HarmonicMode& m : u.modes())
    U.set_mode(m.k, m.C / m.k, 0.0, m.E / m.k, 0.0);
  return NeumannSolution{U, PolarPoint{0.0, 0.0}, 0.0};
}

AnnulusHarmonicSeries dirichlet_from_neumann(const NeumannSolution& U) {
  const AnnulusHarmonicSeries& F = U.field;
  AnnulusHarmonicSeries u(F.r1(), F.r2());
  u.set_A(F.B());  // r * (B/r)
  for (const HarmonicMode& m : F.modes())
    u.set_mode(m.k, m.k * m.C, -m.k * m.D, m.k * m.E, -m.k * m.G);
  u.dropped_modes = F.dropped_modes;
  return u;
}

AnnulusHarmonicSeries dirichlet_from_neumann_disk(const NeumannSolution& U) {
  return dirichlet_from_neumann(U);
}

NeumannSolution solve_punctured_neumann(const PeriodicFunction& phi_origin,
                                        const PeriodicFunction& phi_outer,
                                        double tol) {
  const PuncturedNeumannReport rep =
      check_punctured_neumann_data(phi_origin, phi_outer, tol);
  if (!rep.pass)
    throw precondition_error(
        "punctured-disk Neumann data inconsistent: mean defect = " +
        std::to_string(rep.mean_defect) +
        ", max mode error = " + std::to_string(rep.max_mode_error));
  NeumannSolution sol = neumann_from_dirichlet_disk(phi_outer, tol);

  // ∂U/∂r(0,θ) is carried by the first mode only; it must reproduce the
  // origin datum (1/π)∫ cos(t-θ) ϕ(1,t) dt.
  const double c1 = sol.field.order() >= 1 ? sol.field.mode(1).C : 0.0;
  const double e1 = sol.field.order() >= 1 ? sol.field.mode(1).E : 0.0;
  const double scale = std::max(1.0, phi_outer.scale());
  if (std::fabs(c1 - phi_outer.a(1)) > tol * scale ||
      std::fabs(e1 - phi_outer.b(1)) > tol * scale)
    throw numerical_error("punctured Neumann origin derivative mismatch");
  return sol;
}

double compute_C(const AnnulusHarmonicSeries& u, double tol) {
  if (std::fabs(u.B()) > tol * std::max(1.0, u.coefficient_scale()))
    throw precondition_error("compute_C requires a vanishing log coefficient (B = 0)");
  if (u.disk_form()) return 0.0;
  const double s = std::sqrt(u.r1() * u.r2());
  double c = 0.0;
  for (const HarmonicMode& m : u.modes())
    c += m.E * std::pow(s, m.k) - m.G * std::pow(s, -m.k);
  return c;
}

double compute_C_via_conjugate(const AnnulusHarmonicSeries& u, double tol) {
  const AnnulusHarmonicSeries v0 = harmonic_conjugate_on_cut(u, tol);
  const double s = u.disk_form() ? 0.0 : std::sqrt(u.r1() * u.r2());
  const double integral = integrate(
      [&](double theta) { return v0.eval(s, theta); }, -std::numbers::pi,
      std::numbers::pi, QuadratureOptions{});
  return integral / kTwoPi;
}

}  // namespace hd
