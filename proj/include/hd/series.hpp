#pragma once

// Exact series solutions of the Laplace equation in polar coordinates:
//
//   u(r,θ) = A + B log r + Σ_k [(C_k r^k + D_k r^{-k}) cos kθ
//                             + (E_k r^k + G_k r^{-k}) sin kθ],
//
// every term harmonic on any annulus.  The disk form reuses the same type
// with r1 = 0 and B = D_k = G_k = 0, so downstream transforms are written
// once.  Partial derivatives up to order three are available analytically.

#include <vector>

#include "hd/fourier.hpp"
#include "hd/geometry.hpp"

namespace hd {

struct HarmonicMode {
  int k = 0;
  double C = 0.0, D = 0.0, E = 0.0, G = 0.0;
};

// Mean over the circle of radius r of 2π-periodic data:
// ∫_0^{2π} u(r,θ) dθ = alpha log r + beta.
struct CircleMeanProfile {
  double alpha = 0.0;  // 2π B
  double beta = 0.0;   // 2π A
};

class AnnulusHarmonicSeries {
 public:
  AnnulusHarmonicSeries() = default;
  AnnulusHarmonicSeries(double r1, double r2);

  double r1() const { return r1_; }
  double r2() const { return r2_; }
  bool disk_form() const { return r1_ == 0.0; }

  double A() const { return A_; }
  double B() const { return B_; }
  int order() const { return static_cast<int>(modes_.size()); }
  const HarmonicMode& mode(int k) const;  // k in [1, order]
  const std::vector<HarmonicMode>& modes() const { return modes_; }

  void set_A(double v) { A_ = v; }
  void set_B(double v);  // rejected for disk form
  void set_mode(int k, double C, double D, double E, double G);

  // Evaluation and termwise partial derivatives ∂_r^{nr} ∂_θ^{nt} u with
  // nr + nt <= 3.  Throws precondition_error outside [r1, r2] (small slack).
  double eval(double r, double theta) const;
  double deriv(double r, double theta, int nr, int ntheta) const;
  PolarPartials partials(double r, double theta) const;  // up to 2nd order

  // Boundary traces as PeriodicFunction (exact coefficient algebra).
  PeriodicFunction trace(double r) const;
  PeriodicFunction radial_derivative_trace(double r) const;

  double coefficient_scale() const;  // max |A|,|B|,|C_k|,|D_k|,|E_k|,|G_k|

  // Modes k with (r2/r1)^k beyond the conditioning limit are dropped by the
  // annulus solver; their indices are recorded here.
  std::vector<int> dropped_modes;

 private:
  void check_radius(double r) const;

  double r1_ = 0.0, r2_ = 1.0;
  double A_ = 0.0, B_ = 0.0;
  std::vector<HarmonicMode> modes_;  // index k-1
};

struct DirichletSolveOptions {
  // Modes with (r2/r1)^k above this are dropped (floating-point blowup guard).
  double condition_limit = 1e15;
};

// Exact Dirichlet solve on the annulus 0 < r1 < r2: mode 0 through the
// {A + B log r} system, mode k through the well-conditioned scaled 2x2
// system in the basis {(r/r2)^k, (r1/r)^k}.  The boundary traces match the
// input coefficients exactly in the truncated space.
AnnulusHarmonicSeries solve_dirichlet_annulus(
    const AnnulusBoundaryData& data, const DirichletSolveOptions& opt = {});

// Classical disk solution u = a0 + Σ (r/r2)^k (a_k cos kθ + b_k sin kθ).
AnnulusHarmonicSeries solve_dirichlet_disk(const PeriodicFunction& phi,
                                           double r2);

// Punctured-disk Dirichlet problem: requires mean(phi) = 0 (Zaremba
// solvability); the solution is the unit-disk solve, with u(0) = 0.
AnnulusHarmonicSeries solve_dirichlet_punctured(const PeriodicFunction& phi,
                                                double tol = kDefaultTol);

CircleMeanProfile circle_mean(const AnnulusHarmonicSeries& u);

// Single-valued harmonic conjugate on the cut annulus, normalized by
// v0(√(r1 r2), 0) = 0.  Requires B = 0 (throws precondition_error).
//
//   v0 = Σ_k [(C_k r^k - D_k r^{-k}) sin kθ - (E_k r^k - G_k r^{-k}) cos kθ]
//        + Σ_k (E_k s^k - G_k s^{-k}),   s = √(r1 r2).
AnnulusHarmonicSeries harmonic_conjugate_on_cut(const AnnulusHarmonicSeries& u,
                                                double tol = kDefaultTol);

}  // namespace hd
