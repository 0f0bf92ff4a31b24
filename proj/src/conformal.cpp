#include "hd/conformal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <utility>
#include <vector>

#include "hd/geometry.hpp"
#include "hd/quadrature.hpp"

namespace hd {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}  // namespace

Complex joukowsky(Complex w) {
  if (w == Complex(0.0, 0.0))
    throw precondition_error("Joukowsky transform is undefined at w = 0");
  return 0.5 * (w + 1.0 / w);
}

Complex t_plus(Complex z) {
  if (z == Complex(-1.0, 0.0)) return z;
  // z + (z+1) sqrt((z-1)/(z+1)) keeps |T+| >= 1 on all of C, unlike the
  // naive principal-branch z + sqrt(z^2-1) which picks the small root for
  // Re z < -1.
  const Complex ratio = (z - 1.0) / (z + 1.0);
  return z + (z + 1.0) * std::sqrt(ratio);
}

Complex t_minus(Complex z) { return 1.0 / t_plus(z); }

Complex t_plus_prime(Complex z) {
  const Complex w = t_plus(z);
  const Complex root = w - z;  // = sqrt(z^2 - 1) on the chosen branch
  if (root == Complex(0.0, 0.0))
    throw precondition_error("T+' is singular at z = ±1");
  return w / root;
}

Complex EllipseRegion::boundary_point(double t) const {
  return {semi_major() * std::cos(t), semi_minor() * std::sin(t)};
}

Complex EllipseRegion::outward_normal(double t) const {
  const Complex n(std::cos(t) / semi_major(), std::sin(t) / semi_minor());
  return n / std::abs(n);
}

bool EllipseRegion::contains(Complex z, double pad) const {
  const double a = semi_major(), b = semi_minor();
  const double q = (z.real() / a) * (z.real() / a) + (z.imag() / b) * (z.imag() / b);
  return q <= 1.0 + pad;
}

AnnulusBoundaryData ellipse_boundary_transform(
    const std::function<double(Complex)>& f, double rho,
    const EllipseTransformOptions& opt) {
  if (!(rho > 1.0)) throw precondition_error("ellipse parameter must satisfy rho > 1");
  const int n = opt.samples;
  if (n < 8 || n % 2 != 0) throw precondition_error("sample count must be even and >= 8");

  // |T±'(J(w))| through the annulus side.
  const auto abs_tprime = [](Complex w) {
    const Complex w2 = w * w;
    return std::abs(2.0 * w2 / (w2 - 1.0));
  };

  // Compatibility: ∫_{∂E_ρ} f dσ = 0 by arclength quadrature on the outer
  // parametrization z = J(ρ e^{iθ}), dσ = |J'(ρe^{iθ})| ρ dθ.
  double fscale = 1.0;
  const auto arclength_integrand = [&](double theta) {
    const Complex w = std::polar(rho, theta);
    const double jac = rho / abs_tprime(w);  // ρ |J'(w)|
    const double v = f(joukowsky(w));
    fscale = std::max(fscale, std::fabs(v));
    return v * jac;
  };
  const double total_flux = integrate(arclength_integrand, 0.0, kTwoPi,
                                      QuadratureOptions{1e-12, 1e-12, 8000});
  if (std::fabs(total_flux) > opt.compat_tol * std::max(1.0, fscale * rho * kTwoPi))
    throw precondition_error(
        "ellipse Neumann data violates the zero-flux compatibility condition");

  std::vector<double> outer(static_cast<std::size_t>(n)), inner(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const double theta = kTwoPi * j / n;
    const Complex wp = std::polar(rho, theta);
    const Complex wm = std::polar(1.0 / rho, theta);
    outer[static_cast<std::size_t>(j)] = rho * f(joukowsky(wp)) / abs_tprime(wp);
    inner[static_cast<std::size_t>(j)] = -f(joukowsky(wm)) / (rho * abs_tprime(wm));
  }

  const int order = std::min(opt.order, (n - 2) / 2);
  AnnulusBoundaryData data;
  data.r1 = 1.0 / rho;
  data.r2 = rho;
  data.inner = fourier_analyze(inner, order);
  data.outer = fourier_analyze(outer, order);
  data.kind = BoundaryKind::kDirichlet;
  return data;
}

EllipseNeumannSolution::EllipseNeumannSolution(AnnulusHarmonicSeries u, double rho)
    : u_(std::move(u)), region_{rho} {
  const double scale = std::max(1.0, u_.coefficient_scale());
  if (std::fabs(u_.B()) > 1e-8 * scale)
    throw precondition_error("ellipse transfer requires a vanishing log coefficient");
  u_.set_B(0.0);
  ctilde_.resize(static_cast<std::size_t>(u_.order()));
  etilde_.resize(static_cast<std::size_t>(u_.order()));
  for (const HarmonicMode& m : u_.modes()) {
    // u_r(1,·) modes; the mid-circle of A_{1/ρ,ρ} has radius 1.
    ctilde_[static_cast<std::size_t>(m.k) - 1] = m.k * (m.C - m.D);
    etilde_[static_cast<std::size_t>(m.k) - 1] = m.k * (m.E - m.G);
  }
}

double EllipseNeumannSolution::eval(Complex z) const {
  if (!region_.contains(z, 1e-9))
    throw precondition_error("evaluation point outside the closed ellipse");
  const Complex w = t_plus(z);
  double R = std::abs(w);
  const double Theta = std::arg(w);
  R = std::clamp(R, 1.0, region_.rho * (1.0 + 1e-12));

  double value = u_.A() * std::log(R);
  for (const HarmonicMode& m : u_.modes()) {
    const double k = m.k;
    const double rp = std::pow(R, m.k), rn = std::pow(R, -m.k);
    const double ck = std::cos(k * Theta), sk = std::sin(k * Theta);
    value += ((m.C / k) * (rp - 1.0) - (m.D / k) * (rn - 1.0)) * ck +
             ((m.E / k) * (rp - 1.0) - (m.G / k) * (rn - 1.0)) * sk;
    // minus ∫_0^Θ ∫_0^t u_r(1,τ) dτ dt, termwise
    const double ct = ctilde_[static_cast<std::size_t>(m.k) - 1];
    const double et = etilde_[static_cast<std::size_t>(m.k) - 1];
    value -= ct / (k * k) * (1.0 - ck);
    value -= et * (Theta / k - sk / (k * k));
  }
  return value;
}

Complex EllipseNeumannSolution::z0_star(Complex z) const {
  const Complex w = t_plus(z);
  return {std::cos(std::arg(w)), 0.0};
}

EllipseNeumannSolution neumann_on_ellipse(const std::function<double(Complex)>& f,
                                          double rho,
                                          const EllipseTransformOptions& opt) {
  const AnnulusBoundaryData data = ellipse_boundary_transform(f, rho, opt);
  return EllipseNeumannSolution(solve_dirichlet_annulus(data), rho);
}

ConformalMapPair ConformalMapPair::identity(double r2) {
  ConformalMapPair m;
  m.G = [](Complex w) { return w; };
  m.Gprime = [](Complex) { return Complex(1.0, 0.0); };
  m.F = [](Complex z) { return z; };
  m.Fprime = [](Complex) { return Complex(1.0, 0.0); };
  m.r2 = r2;
  m.w0 = Complex(std::sqrt(r2), 0.0);
  m.name = "identity";
  return m;
}

ConformalMapPair ConformalMapPair::scaling(double c, double r2) {
  if (c == 0.0) throw precondition_error("scaling factor must be nonzero");
  ConformalMapPair m;
  m.G = [c](Complex w) { return w / c; };
  m.Gprime = [c](Complex) { return Complex(1.0 / c, 0.0); };
  m.F = [c](Complex z) { return c * z; };
  m.Fprime = [c](Complex) { return Complex(c, 0.0); };
  m.r2 = r2;
  m.w0 = Complex(c * std::sqrt(r2), 0.0);
  m.name = "scale:" + std::to_string(c);
  return m;
}

ConformalMapPair ConformalMapPair::from_expressions(const std::string& g_expr,
                                                    const std::string& gprime_expr,
                                                    const std::string& f_expr,
                                                    const std::string& fprime_expr,
                                                    double r2) {
  ConformalMapPair m;
  const ComplexExpr G = ComplexExpr::parse(g_expr);
  const ComplexExpr Gp = ComplexExpr::parse(gprime_expr);
  const ComplexExpr F = ComplexExpr::parse(f_expr);
  m.G = [G](Complex w) { return G.eval(w); };
  m.Gprime = [Gp](Complex w) { return Gp.eval(w); };
  m.F = [F](Complex z) { return F.eval(z); };
  if (fprime_expr.empty()) {
    // F' = 1/(G'∘F) (Lemma 3 iv)
    auto f_fn = m.F;
    auto gp_fn = m.Gprime;
    m.Fprime = [f_fn, gp_fn](Complex z) { return 1.0 / gp_fn(f_fn(z)); };
  } else {
    const ComplexExpr Fp = ComplexExpr::parse(fprime_expr);
    m.Fprime = [Fp](Complex z) { return Fp.eval(z); };
  }
  m.r2 = r2;
  m.F(Complex(std::sqrt(r2), 0.0));  // probe once; throws surface early
  m.w0 = m.F(Complex(std::sqrt(r2), 0.0));
  m.name = "expr:" + g_expr;
  return m;
}

namespace {

// Discrete winding number of a sampled closed curve around p.
int winding_number(const std::vector<Complex>& curve, Complex p) {
  double total = 0.0;
  for (std::size_t j = 0; j < curve.size(); ++j) {
    const Complex a = curve[j] - p;
    const Complex b = curve[(j + 1) % curve.size()] - p;
    total += std::arg(b / a);
  }
  return static_cast<int>(std::lround(total / kTwoPi));
}

}  // namespace

MapValidationReport validate_map(const ConformalMapPair& map, int samples) {
  if (samples < 16) samples = 16;
  if (!(map.r2 > 1.0)) throw precondition_error("canonical annulus needs r2 > 1");
  MapValidationReport rep;

  const double radii[3] = {1.0, std::sqrt(map.r2), map.r2};
  double gmin = std::numeric_limits<double>::infinity();
  for (double rr : radii) {
    for (int j = 0; j < samples; ++j) {
      const Complex z = std::polar(rr, kTwoPi * j / samples);
      const Complex w = map.F(z);
      const Complex back = map.G(w);
      rep.roundtrip_max = std::max(rep.roundtrip_max, std::abs(back - z));
      if (rr == 1.0)
        rep.inner_modulus_max_dev = std::max(rep.inner_modulus_max_dev,
                                             std::fabs(std::abs(back) - 1.0));
      if (rr == map.r2)
        rep.outer_modulus_max_dev = std::max(rep.outer_modulus_max_dev,
                                             std::fabs(std::abs(back) - map.r2));
      const Complex gp = map.Gprime(w);
      gmin = std::min(gmin, std::abs(gp));
      rep.derivative_identity_max = std::max(rep.derivative_identity_max,
                                             std::abs(map.Fprime(z) * gp - 1.0));
      if (rr != 1.0 && rr != map.r2) {
        // Cauchy-Riemann finite-difference residual of G at interior points.
        const double h = 1e-6 * std::max(1.0, std::abs(w));
        const Complex dx = (map.G(w + h) - map.G(w - h)) / (2.0 * h);
        const Complex dy = (map.G(w + Complex(0.0, h)) - map.G(w - Complex(0.0, h))) /
                           Complex(0.0, 2.0 * h);
        rep.cauchy_riemann_max = std::max(rep.cauchy_riemann_max, std::abs(dx - dy));
      }
    }
  }
  rep.gprime_min_abs = gmin;

  // Orientation record (Lemma 3 labels the contours the other way around in
  // one display): which circle maps to the outer contour of D.
  std::vector<Complex> outer_curve(static_cast<std::size_t>(samples));
  for (int j = 0; j < samples; ++j)
    outer_curve[static_cast<std::size_t>(j)] = map.F(std::polar(map.r2, kTwoPi * j / samples));
  const Complex probe = map.F(Complex(1.0, 0.0));
  rep.outer_contour_is_r2 = winding_number(outer_curve, probe) != 0;

  rep.pass = rep.roundtrip_max <= 1e-8 && rep.inner_modulus_max_dev <= 1e-6 &&
             rep.outer_modulus_max_dev <= 1e-6 && rep.cauchy_riemann_max <= 1e-5 &&
             rep.derivative_identity_max <= 1e-8 && rep.gprime_min_abs > 1e-12;
  return rep;
}

DoublyConnectedSolution::DoublyConnectedSolution(ConformalMapPair map,
                                                 NeumannSolution annulus)
    : map_(std::move(map)), annulus_(std::move(annulus)) {
  norm_point_ = map_.F(Complex(std::sqrt(map_.r2), 0.0));
}

double DoublyConnectedSolution::eval(Complex w) const {
  const Complex z = map_.G(w);
  return annulus_.field.eval(std::abs(z), std::arg(z));
}

Complex DoublyConnectedSolution::gradient(Complex w) const {
  const Complex z = map_.G(w);
  const double r = std::abs(z), theta = std::arg(z);
  PolarPartials p;
  p.u_r = annulus_.field.deriv(r, theta, 1, 0);
  p.u_theta = annulus_.field.deriv(r, theta, 0, 1);
  const CartesianPartials cart = polar_cartesian_derivative_bridge(p, r, theta);
  const Complex grad_v_bar(cart.w_x, -cart.w_y);
  const Complex grad_u_bar = grad_v_bar * map_.Gprime(w);
  return std::conj(grad_u_bar);  // U_ξ + i U_η
}

DoublyConnectedSolution doubly_connected_neumann(
    const ConformalMapPair& map, const std::function<double(Complex)>& Phi,
    const TransferOptions& opt) {
  const MapValidationReport rep = validate_map(map, opt.validation_samples);
  if (!rep.pass)
    throw precondition_error("conformal map failed validation (round trip " +
                             std::to_string(rep.roundtrip_max) + ")");

  const int n = opt.samples;
  std::vector<double> outer(static_cast<std::size_t>(n)), inner(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const double theta = kTwoPi * j / n;
    const Complex zo = std::polar(map.r2, theta);
    const Complex zi = std::polar(1.0, theta);
    // Φ_V(z) = Φ(F(z)) |F'(z)|, with the annulus sign convention at r1.
    outer[static_cast<std::size_t>(j)] = Phi(map.F(zo)) * std::abs(map.Fprime(zo));
    inner[static_cast<std::size_t>(j)] = -Phi(map.F(zi)) * std::abs(map.Fprime(zi));
  }
  const int order = std::min(opt.order, (n - 2) / 2);
  AnnulusBoundaryData data;
  data.r1 = 1.0;
  data.r2 = map.r2;
  data.inner = fourier_analyze(inner, order);
  data.outer = fourier_analyze(outer, order);
  data.kind = BoundaryKind::kNeumann;

  TransformOptions topt = opt.transform;
  topt.compat_tol = std::max(topt.compat_tol, opt.compat_tol);
  NeumannSolution V = neumann_from_dirichlet_annulus(data, topt);
  return DoublyConnectedSolution(map, std::move(V));
}

std::function<double(Complex)> doubly_connected_dirichlet_from_neumann(
    const ConformalMapPair& map, const std::function<Complex(Complex)>& gradU) {
  auto G = map.G;
  auto Gp = map.Gprime;
  return [G, Gp, gradU](Complex w) {
    const Complex g = G(w);
    if (g == Complex(0.0, 0.0))
      throw precondition_error("map value G(w) = 0 outside the canonical annulus");
    const Complex p = Gp(w) / g;
    const double p2 = std::norm(p);
    if (p2 < 1e-24)
      throw precondition_error("∇ω vanishes at the evaluation point");
    // <∇U; ∇ω>/|∇ω|^2 with ∇ω = conj(p)
    return (gradU(w) * p).real() / p2;
  };
}

RiemannMapPair RiemannMapPair::identity() {
  RiemannMapPair m;
  m.f = [](Complex z) { return z; };
  m.fprime = [](Complex) { return Complex(1.0, 0.0); };
  m.g = [](Complex w) { return w; };
  m.gprime = [](Complex) { return Complex(1.0, 0.0); };
  m.w0 = Complex(0.0, 0.0);
  m.name = "identity";
  return m;
}

RiemannMapPair RiemannMapPair::rotation(double alpha) {
  RiemannMapPair m;
  const Complex e = std::polar(1.0, alpha);
  m.f = [e](Complex z) { return e * z; };
  m.fprime = [e](Complex) { return e; };
  m.g = [e](Complex w) { return w / e; };
  m.gprime = [e](Complex) { return 1.0 / e; };
  m.w0 = Complex(0.0, 0.0);
  m.name = "rotate:" + std::to_string(alpha);
  return m;
}

RiemannValidationReport validate_riemann_map(const RiemannMapPair& map, int samples) {
  if (samples < 16) samples = 16;
  RiemannValidationReport rep;
  rep.base_point_dev = std::abs(map.f(Complex(0.0, 0.0)) - map.w0);
  rep.fprime0 = map.fprime(Complex(0.0, 0.0));
  rep.riemann_normalized =
      rep.fprime0.real() > 0.0 &&
      std::fabs(rep.fprime0.imag()) <= 1e-10 * std::abs(rep.fprime0);
  for (double rr : {0.3, 0.7, 1.0}) {
    for (int j = 0; j < samples; ++j) {
      const Complex z = std::polar(rr, kTwoPi * j / samples);
      const Complex w = map.f(z);
      rep.roundtrip_max = std::max(rep.roundtrip_max, std::abs(map.g(w) - z));
      rep.derivative_identity_max = std::max(
          rep.derivative_identity_max, std::abs(map.fprime(z) * map.gprime(w) - 1.0));
    }
  }
  rep.pass = rep.base_point_dev <= 1e-8 && rep.roundtrip_max <= 1e-8 &&
             rep.derivative_identity_max <= 1e-8;
  return rep;
}

SimplyConnectedSolution::SimplyConnectedSolution(RiemannMapPair map,
                                                 NeumannSolution disk)
    : map_(std::move(map)), disk_(std::move(disk)) {}

double SimplyConnectedSolution::eval(Complex w) const {
  const Complex z = map_.g(w);
  return disk_.field.eval(std::abs(z), std::arg(z));
}

Complex SimplyConnectedSolution::gradient(Complex w) const {
  const Complex z = map_.g(w);
  const double r = std::abs(z), theta = std::arg(z);
  Complex grad_v_bar;
  if (r < 1e-14) {
    // ∇V at the origin is carried by the first mode alone.
    const double c1 = disk_.field.order() >= 1 ? disk_.field.mode(1).C : 0.0;
    const double e1 = disk_.field.order() >= 1 ? disk_.field.mode(1).E : 0.0;
    grad_v_bar = Complex(c1, -e1);
  } else {
    PolarPartials p;
    p.u_r = disk_.field.deriv(r, theta, 1, 0);
    p.u_theta = disk_.field.deriv(r, theta, 0, 1);
    const CartesianPartials cart = polar_cartesian_derivative_bridge(p, r, theta);
    grad_v_bar = Complex(cart.w_x, -cart.w_y);
  }
  return std::conj(grad_v_bar * map_.gprime(w));
}

SimplyConnectedSolution simply_connected_transfer(
    const RiemannMapPair& map, const std::function<double(Complex)>& Phi,
    const TransferOptions& opt) {
  const RiemannValidationReport rep = validate_riemann_map(map, opt.validation_samples);
  if (!rep.pass)
    throw precondition_error("Riemann map failed validation");
  const int n = opt.samples;
  std::vector<double> boundary(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const Complex z = std::polar(1.0, kTwoPi * j / n);
    // φ = (Φ∘f)/|g'∘f| = Φ(f(z)) |f'(z)|
    boundary[static_cast<std::size_t>(j)] = Phi(map.f(z)) * std::abs(map.fprime(z));
  }
  const int order = std::min(opt.order, (n - 2) / 2);
  const PeriodicFunction phi = fourier_analyze(boundary, order);
  NeumannSolution U = neumann_from_dirichlet_disk(phi, opt.compat_tol);
  return SimplyConnectedSolution(map, std::move(U));
}

std::function<double(Complex)> simply_connected_dirichlet_from_neumann(
    const RiemannMapPair& map, const std::function<Complex(Complex)>& gradU) {
  auto g = map.g;
  auto gp = map.gprime;
  return [g, gp, gradU](Complex w) {
    // u(w) = Re(conj(∇U)(w) g(w)/g'(w))
    return (std::conj(gradU(w)) * g(w) / gp(w)).real();
  };
}

}  // namespace hd
