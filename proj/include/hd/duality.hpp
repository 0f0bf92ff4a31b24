#pragma once

// Dirichlet-Neumann equivalences on annuli and disks.
//
// Forward (Neumann data ϕ -> Neumann solution U): build Dirichlet data
// φ(r,θ) = r ϕ(r,θ), solve for u, then integrate mode by mode:
//
//   U(r,θ) = ∫_{s/r}^1 u(rρ,θ)/ρ dρ + s ∫_0^θ ( C* - ∫_0^t u_r(s,τ) dτ ) dt,
//
// with s = √(r1 r2) and C* the mean over [0,2π] of t ↦ ∫_0^t u_r(s,τ) dτ
// (the scaled-annulus construction; see also compute_C).  In closed form the
// angular term's periodic part cancels against the radial one and
//
//   U = -A log s - Σ_k (C_k s^k - D_k s^{-k})/k  +  A log r
//       + Σ_k [ (C_k/k) r^k - (D_k/k) r^{-k} ] cos kθ
//       + Σ_k [ (E_k/k) r^k - (G_k/k) r^{-k} ] sin kθ,
//
// which satisfies U_r = u/r (so U_r = ϕ on both circles) and U(s, 0) = 0.
// Converse: u(r,θ) = r U_r(r,θ).

#include "hd/fourier.hpp"
#include "hd/geometry.hpp"
#include "hd/series.hpp"

namespace hd {

struct NeumannSolution {
  AnnulusHarmonicSeries field;
  PolarPoint normalization;  // where the field vanishes
  double C_const = 0.0;      // the scalar 𝒞 recorded at construction
};

struct TransformOptions {
  double compat_tol = kDefaultTol;
  double symmetry_tol = 1e-10;
  DirichletSolveOptions solve;
};

// Theorem-1 path.  Compatibility violations are hard errors.
NeumannSolution neumann_from_dirichlet_annulus(const AnnulusBoundaryData& phi,
                                               const TransformOptions& opt = {});

// Symmetric shortcut: requires r1 ϕ(r1,·) = r2 ϕ(r2,·) coefficientwise;
// skips the angular term, asserts u_r(√(r1r2),·) = 0, and checks agreement
// with the general path to 1e-12.
NeumannSolution neumann_from_dirichlet_symmetric(
    const AnnulusBoundaryData& phi, const TransformOptions& opt = {});

// Disk corollary on the unit disk: requires mean(f) = 0; U(0) = 0 and
// ∂U/∂ν = f on the unit circle (a_k r^k -> (a_k/k) r^k).
NeumannSolution neumann_from_dirichlet_disk(const PeriodicFunction& f,
                                            double tol = kDefaultTol);

// u = r U_r, termwise.
AnnulusHarmonicSeries dirichlet_from_neumann(const NeumannSolution& U);
AnnulusHarmonicSeries dirichlet_from_neumann_disk(const NeumannSolution& U);

// Punctured-disk Neumann problem: data must pass
// check_punctured_neumann_data; the field is the unit-disk solution and the
// origin radial derivative equals the first harmonic of ϕ(1,·).
NeumannSolution solve_punctured_neumann(const PeriodicFunction& phi_origin,
                                        const PeriodicFunction& phi_outer,
                                        double tol = kDefaultTol);

// 𝒞 = (√(r1r2)/2π) ∫_0^{2π} ∫_0^t u_r(√(r1r2),τ) dτ dt, in closed form
// s Σ_k ẽ_k/k = Σ_k (E_k s^k - G_k s^{-k}).  Requires B = 0.
double compute_C(const AnnulusHarmonicSeries& u, double tol = kDefaultTol);

// Same constant through the harmonic conjugate: mean of v0 over the circle
// of radius √(r1r2), computed by quadrature.  Requires B = 0.
double compute_C_via_conjugate(const AnnulusHarmonicSeries& u,
                               double tol = kDefaultTol);

}  // namespace hd
