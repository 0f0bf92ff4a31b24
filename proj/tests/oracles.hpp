#pragma once

// Test-only oracles, independent of the closed-form transform paths they
// check: direct quadrature of the Neumann-from-Dirichlet integral formula,
// quadrature circle means, and random compatible boundary data.

#include <cmath>
#include <numbers>
#include <random>

#include "hd/fourier.hpp"
#include "hd/quadrature.hpp"
#include "hd/series.hpp"

namespace hd::oracle {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// U(r,θ) = ∫_{s/r}^1 u(rρ,θ)/ρ dρ + s ∫_0^θ (C* - I(t)) dt with
// I(t) = ∫_0^t u_r(s,τ) dτ and C* = (1/2π)∫_0^{2π} I.  The double integrals
// collapse by Fubini to single ones: ∫_0^θ I = ∫_0^θ (θ-τ) u_r(s,τ) dτ.
// This is the scaling-construction centering (C* = mean of I); see the
// closed-form transform it cross-checks.
inline double neumann_transform_quadrature(const AnnulusHarmonicSeries& u,
                                           double r, double theta) {
  const double s = std::sqrt(u.r1() * u.r2());
  const QuadratureOptions opt{1e-12, 1e-14, 8000};

  const double radial = integrate(
      [&](double rho) { return u.eval(r * rho, theta) / rho; }, s / r, 1.0, opt);

  const double twopi_cstar = integrate(
      [&](double tau) { return u.deriv(s, tau, 1, 0) * (kTwoPi - tau); }, 0.0,
      kTwoPi, opt);
  const double cstar = twopi_cstar / kTwoPi;

  const double int_I = integrate(
      [&](double tau) { return u.deriv(s, tau, 1, 0) * (theta - tau); }, 0.0,
      theta, opt);

  return radial + s * (cstar * theta - int_I);
}

// Quadrature mean over the circle of radius r (trapezoid; spectrally exact
// for trigonometric polynomials).
inline double circle_mean_quadrature(const AnnulusHarmonicSeries& u, double r,
                                     int nodes = 4096) {
  double sum = 0.0;
  for (int j = 0; j < nodes; ++j) sum += u.eval(r, kTwoPi * j / nodes);
  return kTwoPi * sum / nodes;
}

// Random band-limited Neumann data satisfying the compatibility condition
// r1·mean(inner) = r2·mean(outer) by construction.
inline AnnulusBoundaryData random_compatible_neumann(std::mt19937& rng, double r1,
                                                     double r2, int order) {
  std::uniform_real_distribution<double> un(-1.0, 1.0);
  std::vector<double> ai(static_cast<std::size_t>(order)), bi(ai), ao(ai), bo(ai);
  for (int k = 0; k < order; ++k) {
    ai[static_cast<std::size_t>(k)] = un(rng);
    bi[static_cast<std::size_t>(k)] = un(rng);
    ao[static_cast<std::size_t>(k)] = un(rng);
    bo[static_cast<std::size_t>(k)] = un(rng);
  }
  const double mean_outer = un(rng);
  AnnulusBoundaryData d;
  d.r1 = r1;
  d.r2 = r2;
  d.outer = PeriodicFunction::from_coefficients(mean_outer, ao, bo);
  d.inner = PeriodicFunction::from_coefficients(mean_outer * r2 / r1, ai, bi);
  d.kind = BoundaryKind::kNeumann;
  return d;
}

inline AnnulusBoundaryData random_dirichlet(std::mt19937& rng, double r1, double r2,
                                            int order) {
  std::uniform_real_distribution<double> un(-1.0, 1.0);
  std::vector<double> ai(static_cast<std::size_t>(order)), bi(ai), ao(ai), bo(ai);
  for (int k = 0; k < order; ++k) {
    ai[static_cast<std::size_t>(k)] = un(rng);
    bi[static_cast<std::size_t>(k)] = un(rng);
    ao[static_cast<std::size_t>(k)] = un(rng);
    bo[static_cast<std::size_t>(k)] = un(rng);
  }
  AnnulusBoundaryData d;
  d.r1 = r1;
  d.r2 = r2;
  d.inner = PeriodicFunction::from_coefficients(un(rng), ai, bi);
  d.outer = PeriodicFunction::from_coefficients(un(rng), ao, bo);
  d.kind = BoundaryKind::kDirichlet;
  return d;
}

}  // namespace hd::oracle
