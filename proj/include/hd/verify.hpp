#pragma once

// Independent brute-force verification: a second-order finite-difference
// Laplace solver on polar grids (Dirichlet rows pinned to data; Neumann via
// ghost nodes, one node pinned and the result renormalized), residual
// reports, the empirical Hölder-exponent estimator, and the Theorem-1
// round-trip defect.  Deliberately low-tech and independent of the series
// machinery it checks.

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "hd/fourier.hpp"
#include "hd/series.hpp"

namespace hd {

struct PolarGrid {
  double r1 = 0.0, r2 = 1.0;
  int nr = 0, ntheta = 0;
  std::vector<double> values;  // row-major [i * ntheta + j]

  double dr() const { return (r2 - r1) / (nr - 1); }
  double dtheta() const;
  double r(int i) const { return r1 + i * dr(); }
  double theta(int j) const;
  double& at(int i, int j) { return values[static_cast<std::size_t>(i) * ntheta + j]; }
  double at(int i, int j) const { return values[static_cast<std::size_t>(i) * ntheta + j]; }

  void write_csv(std::ostream& out) const;  // header "r,theta,value"
};

struct FdOptions {
  // Unknown-count budget for the direct sparse factorization; larger systems
  // fall back to SOR.
  int direct_budget = 300000;
  double sor_omega = 1.8;
  int sor_max_iter = 400000;
  double sor_tol = 1e-10;
};

// Second-order FD solve of u_rr + u_r/r + u_θθ/r² = 0 with boundary rows
// pinned to the Dirichlet data.  Requires r1 > 0, nr >= 3, ntheta >= 8 even.
PolarGrid fd_dirichlet_solve(const AnnulusBoundaryData& data, int nr, int ntheta,
                             const FdOptions& opt = {});

// Ghost-node Neumann rows (U_r = ϕ at both circles), one node pinned to
// break the constant kernel, then renormalized to vanish at the node nearest
// (√(r1 r2), 0).  Compatibility is checked first (hard error).
PolarGrid fd_neumann_solve(const AnnulusBoundaryData& data, int nr, int ntheta,
                           const FdOptions& opt = {});

struct ResidualReport {
  double laplace_linf = 0.0;   // max interior FD residual
  double bc_inner_linf = 0.0;  // boundary-condition residual per circle
  double bc_outer_linf = 0.0;
  double compat_defect = 0.0;  // signed
  std::string notes;
};

// Samples the evaluator on an (nr × ntheta) grid; FD Laplace residual on
// interior nodes, boundary residuals by trace (Dirichlet) or one-sided FD
// radial derivative (Neumann).
ResidualReport residual_report(const std::function<double(double, double)>& fn,
                               const AnnulusBoundaryData& data, int nr, int ntheta);

// Same, but boundary residuals use the series' analytic traces.
ResidualReport residual_report(const AnnulusHarmonicSeries& series,
                               const AnnulusBoundaryData& data, int nr, int ntheta);

struct HolderEstimate {
  double alpha_hat = 0.0;  // reported in (0, 1.5]
  double const_hat = 0.0;
  double r2_fit = 0.0;  // regression quality
  int pairs = 0;
};

struct SampleBox {
  double x0 = 0.0, x1 = 1.0;
  double y0 = 0.0, y1 = 0.0;  // y0 == y1 degenerates to a 1-D section
};

// Pairs at log-spaced separations h in [h_min, h_max]; per bin the sup of
// |fn(x) - fn(y)| over random pairs; alpha_hat is the least-squares slope of
// log sup vs log h.  Requires h_max/h_min >= 100 and pairs >= 1000.
HolderEstimate holder_estimate(const std::function<double(double, double)>& fn,
                               const SampleBox& box, int pairs, double h_min,
                               double h_max, unsigned seed = 1234);

// ‖r·U_r − u‖_∞ over a 64×128 grid, with U from the Theorem-1 transform and
// u the Dirichlet solution for data rϕ.
double roundtrip_report(const AnnulusBoundaryData& phi);

}  // namespace hd
