#pragma once

// Elliptic-region machinery (Joukowsky transform, the T± inverse branches,
// boundary-data transfer to the symmetric annulus A_{1/ρ,ρ}) and solution
// transfer through user-supplied conformal maps between a doubly-connected
// region and its canonical annulus A_{1,r2} (or the unit disk for the
// simply-connected case), with runtime validation of the supplied maps.

#include <complex>
#include <functional>
#include <string>

#include "hd/duality.hpp"
#include "hd/expr.hpp"
#include "hd/fourier.hpp"
#include "hd/series.hpp"

namespace hd {

using Complex = std::complex<double>;

// J(w) = (w + 1/w)/2.  Throws on w = 0.
Complex joukowsky(Complex w);

// Inverse branch with |T+(z)| >= 1 for all z, computed as
// z + (z+1)·sqrt((z-1)/(z+1)) (branch-correct form of z + sqrt(z^2-1));
// on the slit [-1,1], T+(cos θ) = e^{iθ} for θ in [0, π].
Complex t_plus(Complex z);

// 1/T+(z); |T-| <= 1 and J∘T- = id identically.
Complex t_minus(Complex z);

// dT+/dz = T+/(T+ - z); defined off [-1, 1].
Complex t_plus_prime(Complex z);

struct EllipseRegion {
  double rho = 2.0;  // > 1
  double semi_major() const { return 0.5 * (rho + 1.0 / rho); }
  double semi_minor() const { return 0.5 * (rho - 1.0 / rho); }
  // boundary point and unit outward normal at parameter t in [0, 2π)
  Complex boundary_point(double t) const;
  Complex outward_normal(double t) const;
  bool contains(Complex z, double pad = 0.0) const;
};

struct EllipseTransformOptions {
  int samples = 512;
  int order = kDefaultOrder;
  double compat_tol = kDefaultTol;
};

// Theorem-7 boundary transfer: Dirichlet data on A_{1/ρ,ρ} obtained from
// Neumann data f on ∂E_ρ:
//   outer circle: φ+(θ) =  ρ f(J(w)) / |T+'(J(w))|,  w = ρ e^{iθ},
//   inner circle: φ-(θ) = -f(J(w)) / (ρ |T-'(J(w))|),  w = e^{iθ}/ρ,
// with |T±'(J(w))| = |2w²/(w²-1)| evaluated on the annulus side.  The sign
// on the inner circle is the inward/outward correction of the appendix
// derivation; it makes the data exactly the |J'|-weighted pullback of f with
// the annulus normal convention.  Requires ∫_{∂E_ρ} f dσ = 0 (arclength
// quadrature).
AnnulusBoundaryData ellipse_boundary_transform(
    const std::function<double(Complex)>& f, double rho,
    const EllipseTransformOptions& opt = {});

// The Neumann solution on the closed ellipse, evaluated through
//   U(z) = Σ-form of ∫_{1/R}^1 u(t T+(z))/t dt - ∫_0^{Θ} ∫_0^t u_r(1,τ) dτ dt,
// R e^{iΘ} = T+(z); U(1) = 0.
class EllipseNeumannSolution {
 public:
  EllipseNeumannSolution(AnnulusHarmonicSeries u, double rho);

  double eval(Complex z) const;        // throws outside the closed ellipse
  // Diagnostic from the appendix remark: the intersection of the hyperbola
  // through z with [-1,1]; U(z0_star) is the angular term's value.
  Complex z0_star(Complex z) const;
  const AnnulusHarmonicSeries& annulus_field() const { return u_; }
  double rho() const { return region_.rho; }
  const EllipseRegion& region() const { return region_; }

 private:
  AnnulusHarmonicSeries u_;
  EllipseRegion region_;
  std::vector<double> ctilde_, etilde_;  // Fourier modes of u_r(1,·)
};

EllipseNeumannSolution neumann_on_ellipse(const std::function<double(Complex)>& f,
                                          double rho,
                                          const EllipseTransformOptions& opt = {});

// User-supplied conformal pair between a doubly-connected region D and its
// canonical annulus A_{1,r2}: G maps D to the annulus, F = G^{-1}.
struct ConformalMapPair {
  std::function<Complex(Complex)> G, Gprime, F, Fprime;
  double r2 = 2.0;        // outer modulus e^{λ1}
  Complex w0{0.0, 0.0};   // basepoint in D (diagnostics only)
  std::string name;

  static ConformalMapPair identity(double r2);
  static ConformalMapPair scaling(double c, double r2);  // G(w) = w/c on A_{c, c r2}
  static ConformalMapPair from_expressions(const std::string& g_expr,
                                           const std::string& gprime_expr,
                                           const std::string& f_expr,
                                           const std::string& fprime_expr,
                                           double r2);
};

struct MapValidationReport {
  bool pass = false;
  double roundtrip_max = 0.0;            // |G(F(z)) - z|
  double inner_modulus_max_dev = 0.0;    // | |G|-1 | on the circle |z| = 1
  double outer_modulus_max_dev = 0.0;    // | |G|-r2 | on the circle |z| = r2
  double cauchy_riemann_max = 0.0;       // FD analyticity residual of G
  double gprime_min_abs = 0.0;           // min |G'| over samples
  double derivative_identity_max = 0.0;  // |F'·(G'∘F) - 1|
  bool outer_contour_is_r2 = true;       // orientation actually used by the map
};

MapValidationReport validate_map(const ConformalMapPair& map, int samples = 64);

struct TransferOptions {
  int samples = 512;
  int order = kDefaultOrder;
  double compat_tol = kDefaultTol;
  int validation_samples = 64;
  TransformOptions transform;
};

// Theorem-5 transfer: pulls Φ back to annulus Neumann data
// Φ_V(z) = Φ(F(z))·|F'(z)| (sign-adjusted on the inner circle), solves the
// annulus problem, and composes with G.  U(F(√r2)) = 0.
class DoublyConnectedSolution {
 public:
  DoublyConnectedSolution(ConformalMapPair map, NeumannSolution annulus);

  double eval(Complex w) const;
  Complex gradient(Complex w) const;  // U_ξ + i U_η
  Complex normalization_point() const { return norm_point_; }
  double C_const() const { return annulus_.C_const; }
  const NeumannSolution& annulus_solution() const { return annulus_; }
  const ConformalMapPair& map() const { return map_; }

 private:
  ConformalMapPair map_;
  NeumannSolution annulus_;
  Complex norm_point_;
};

DoublyConnectedSolution doubly_connected_neumann(
    const ConformalMapPair& map, const std::function<double(Complex)>& Phi,
    const TransferOptions& opt = {});

// Theorem-5 converse: u(w) = <∇U(w); ∇ω(w)> / |∇ω(w)|² with ∇ω = conj(p),
// p = G'/G.  Throws where ∇ω vanishes.
std::function<double(Complex)> doubly_connected_dirichlet_from_neumann(
    const ConformalMapPair& map, const std::function<Complex(Complex)>& gradU);

// Riemann pair for a simply-connected region: f maps the unit disk onto D.
struct RiemannMapPair {
  std::function<Complex(Complex)> f, fprime, g, gprime;
  Complex w0{0.0, 0.0};  // f(0)
  std::string name;

  static RiemannMapPair identity();
  static RiemannMapPair rotation(double alpha);  // f(z) = e^{iα} z
};

struct RiemannValidationReport {
  bool pass = false;
  double base_point_dev = 0.0;  // |f(0) - w0|
  Complex fprime0{0.0, 0.0};
  bool riemann_normalized = false;  // f'(0) real and positive
  double roundtrip_max = 0.0;
  double derivative_identity_max = 0.0;  // |g'·(f'∘g) - 1|
};

RiemannValidationReport validate_riemann_map(const RiemannMapPair& map,
                                             int samples = 64);

// Theorem-6 transfer on a simply-connected region.
class SimplyConnectedSolution {
 public:
  SimplyConnectedSolution(RiemannMapPair map, NeumannSolution disk);

  double eval(Complex w) const;
  Complex gradient(Complex w) const;
  Complex normalization_point() const { return map_.w0; }
  const NeumannSolution& disk_solution() const { return disk_; }

 private:
  RiemannMapPair map_;
  NeumannSolution disk_;
};

SimplyConnectedSolution simply_connected_transfer(
    const RiemannMapPair& map, const std::function<double(Complex)>& Phi,
    const TransferOptions& opt = {});

// Theorem-6 converse: u(w) = Re(conj(∇U)(w) · g(w)/g'(w)).
std::function<double(Complex)> simply_connected_dirichlet_from_neumann(
    const RiemannMapPair& map, const std::function<Complex(Complex)>& gradU);

}  // namespace hd
