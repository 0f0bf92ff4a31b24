#include "hd/verify.hpp"

#include <Eigen/Sparse>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <random>

#include "hd/duality.hpp"

namespace hd {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_grid(int nr, int ntheta) {
  if (nr < 3) throw precondition_error("polar grid needs nr >= 3");
  if (ntheta < 8 || ntheta % 2 != 0)
    throw precondition_error("polar grid needs even ntheta >= 8");
}

struct Stencil {
  double dr, dth;
  std::vector<double> r;
};

Stencil make_stencil(double r1, double r2, int nr, int ntheta) {
  Stencil s;
  s.dr = (r2 - r1) / (nr - 1);
  s.dth = kTwoPi / ntheta;
  s.r.resize(static_cast<std::size_t>(nr));
  for (int i = 0; i < nr; ++i) s.r[static_cast<std::size_t>(i)] = r1 + i * s.dr;
  return s;
}

using Triplet = Eigen::Triplet<double>;

// Shared assembly: rows are the FD Laplacian for interior nodes; boundary
// rows are filled by the caller.  Column index = i*ntheta + j.
void add_interior_row(std::vector<Triplet>& trip, Eigen::VectorXd& rhs,
                      const Stencil& s, int ntheta, int i, int j) {
  const double ri = s.r[static_cast<std::size_t>(i)];
  const double cr = 1.0 / (s.dr * s.dr);
  const double cr1 = 1.0 / (2.0 * ri * s.dr);
  const double ct = 1.0 / (ri * ri * s.dth * s.dth);
  const int row = i * ntheta + j;
  const int jm = (j + ntheta - 1) % ntheta;
  const int jp = (j + 1) % ntheta;
  trip.emplace_back(row, (i + 1) * ntheta + j, cr + cr1);
  trip.emplace_back(row, (i - 1) * ntheta + j, cr - cr1);
  trip.emplace_back(row, i * ntheta + jm, ct);
  trip.emplace_back(row, i * ntheta + jp, ct);
  trip.emplace_back(row, row, -2.0 * cr - 2.0 * ct);
  rhs[row] = 0.0;
}

PolarGrid solve_system(const std::vector<Triplet>& trip, Eigen::VectorXd& rhs,
                       double r1, double r2, int nr, int ntheta,
                       const FdOptions& opt) {
  const int n = nr * ntheta;
  PolarGrid grid{r1, r2, nr, ntheta, std::vector<double>(static_cast<std::size_t>(n), 0.0)};
  Eigen::SparseMatrix<double> A(n, n);
  A.setFromTriplets(trip.begin(), trip.end());

  Eigen::VectorXd x;
  if (n <= opt.direct_budget) {
    Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
    lu.compute(A);
    if (lu.info() != Eigen::Success)
      throw numerical_error("sparse factorization of the FD system failed");
    x = lu.solve(rhs);
    if (lu.info() != Eigen::Success)
      throw numerical_error("sparse solve of the FD system failed");
  } else {
    // SOR fallback, ω fixed by the options.
    x = Eigen::VectorXd::Zero(n);
    Eigen::VectorXd diag(n);
    for (int k = 0; k < A.outerSize(); ++k)
      for (Eigen::SparseMatrix<double>::InnerIterator it(A, k); it; ++it)
        if (it.row() == it.col()) diag[it.row()] = it.value();
    const double scale = std::max(1.0, rhs.cwiseAbs().maxCoeff());
    int iter = 0;
    Eigen::SparseMatrix<double, Eigen::RowMajor> Ar(A);
    for (; iter < opt.sor_max_iter; ++iter) {
      for (int row = 0; row < n; ++row) {
        double sum = rhs[row];
        for (Eigen::SparseMatrix<double, Eigen::RowMajor>::InnerIterator it(Ar, row); it; ++it)
          if (it.col() != row) sum -= it.value() * x[it.col()];
        const double xnew = sum / diag[row];
        x[row] += opt.sor_omega * (xnew - x[row]);
      }
      if (iter % 16 == 0) {
        const double res = (A * x - rhs).cwiseAbs().maxCoeff();
        if (res <= opt.sor_tol * scale) break;
      }
    }
    const double res = (A * x - rhs).cwiseAbs().maxCoeff();
    if (res > opt.sor_tol * scale)
      throw numerical_error("SOR did not converge after " + std::to_string(iter) +
                            " iterations (residual " + std::to_string(res) + ")");
  }
  for (int k = 0; k < n; ++k) grid.values[static_cast<std::size_t>(k)] = x[k];
  return grid;
}

}  // namespace

double PolarGrid::dtheta() const { return kTwoPi / ntheta; }

double PolarGrid::theta(int j) const { return j * dtheta(); }

void PolarGrid::write_csv(std::ostream& out) const {
  out << "r,theta,value\n";
  char line[96];
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < ntheta; ++j) {
      std::snprintf(line, sizeof line, "%.17g,%.17g,%.17g\n", r(i), theta(j), at(i, j));
      out << line;
    }
}

PolarGrid fd_dirichlet_solve(const AnnulusBoundaryData& data, int nr, int ntheta,
                             const FdOptions& opt) {
  data.validate();
  check_grid(nr, ntheta);
  if (data.kind != BoundaryKind::kDirichlet)
    throw precondition_error("fd_dirichlet_solve requires Dirichlet data");
  if (!(data.r1 > 0.0)) throw precondition_error("fd solver requires r1 > 0");

  const Stencil s = make_stencil(data.r1, data.r2, nr, ntheta);
  std::vector<Triplet> trip;
  trip.reserve(static_cast<std::size_t>(5 * nr * ntheta));
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(nr * ntheta);
  for (int j = 0; j < ntheta; ++j) {
    const double th = j * s.dth;
    trip.emplace_back(j, j, 1.0);
    rhs[j] = data.inner.eval(th);
    const int row = (nr - 1) * ntheta + j;
    trip.emplace_back(row, row, 1.0);
    rhs[row] = data.outer.eval(th);
  }
  for (int i = 1; i < nr - 1; ++i)
    for (int j = 0; j < ntheta; ++j) add_interior_row(trip, rhs, s, ntheta, i, j);
  return solve_system(trip, rhs, data.r1, data.r2, nr, ntheta, opt);
}

PolarGrid fd_neumann_solve(const AnnulusBoundaryData& data, int nr, int ntheta,
                           const FdOptions& opt) {
  data.validate();
  check_grid(nr, ntheta);
  if (data.kind != BoundaryKind::kNeumann)
    throw precondition_error("fd_neumann_solve requires Neumann data");
  const CompatibilityReport compat = check_neumann_compatibility(data);
  if (!compat.pass)
    throw precondition_error("fd_neumann_solve: incompatible Neumann data (defect " +
                             std::to_string(compat.defect) + ")");

  const Stencil s = make_stencil(data.r1, data.r2, nr, ntheta);
  std::vector<Triplet> trip;
  trip.reserve(static_cast<std::size_t>(5 * nr * ntheta));
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(nr * ntheta);

  // Pin the node nearest (√(r1 r2), 0); bias removed after the solve.
  const double s_mid = std::sqrt(data.r1 * data.r2);
  const int pin_i = static_cast<int>(std::lround((s_mid - data.r1) / s.dr));
  const int pin = pin_i * ntheta + 0;

  for (int i = 0; i < nr; ++i) {
    const bool inner_row = (i == 0), outer_row = (i == nr - 1);
    for (int j = 0; j < ntheta; ++j) {
      const int row = i * ntheta + j;
      if (row == pin) {
        trip.emplace_back(row, row, 1.0);
        rhs[row] = 0.0;
        continue;
      }
      if (!inner_row && !outer_row) {
        add_interior_row(trip, rhs, s, ntheta, i, j);
        continue;
      }
      // Ghost elimination: u_{-1} = u_1 - 2Δr ϕ_in, u_{nr} = u_{nr-2} + 2Δr ϕ_out.
      const double ri = s.r[static_cast<std::size_t>(i)];
      const double cr = 1.0 / (s.dr * s.dr);
      const double cr1 = 1.0 / (2.0 * ri * s.dr);
      const double ct = 1.0 / (ri * ri * s.dth * s.dth);
      const double th = j * s.dth;
      const int jm = (j + ntheta - 1) % ntheta;
      const int jp = (j + 1) % ntheta;
      trip.emplace_back(row, i * ntheta + jm, ct);
      trip.emplace_back(row, i * ntheta + jp, ct);
      trip.emplace_back(row, row, -2.0 * cr - 2.0 * ct);
      if (inner_row) {
        const double phi = data.inner.eval(th);
        trip.emplace_back(row, (i + 1) * ntheta + j, 2.0 * cr);
        rhs[row] = 2.0 * s.dr * (cr - cr1) * phi;
      } else {
        const double phi = data.outer.eval(th);
        trip.emplace_back(row, (i - 1) * ntheta + j, 2.0 * cr);
        rhs[row] = -2.0 * s.dr * (cr + cr1) * phi;
      }
    }
  }
  PolarGrid grid = solve_system(trip, rhs, data.r1, data.r2, nr, ntheta, opt);

  // Renormalize to vanish at the node nearest (√(r1 r2), 0).
  const double offset = grid.at(pin_i, 0);
  for (double& v : grid.values) v -= offset;
  return grid;
}

namespace {

ResidualReport residual_core(const std::function<double(double, double)>& fn,
                             const AnnulusBoundaryData& data, int nr, int ntheta,
                             const PeriodicFunction* inner_trace,
                             const PeriodicFunction* outer_trace) {
  data.validate();
  check_grid(nr, ntheta);
  const Stencil s = make_stencil(data.r1, data.r2, nr, ntheta);
  ResidualReport rep;

  std::vector<double> grid(static_cast<std::size_t>(nr * ntheta));
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < ntheta; ++j)
      grid[static_cast<std::size_t>(i * ntheta + j)] =
          fn(s.r[static_cast<std::size_t>(i)], j * s.dth);

  for (int i = 1; i < nr - 1; ++i) {
    const double ri = s.r[static_cast<std::size_t>(i)];
    for (int j = 0; j < ntheta; ++j) {
      const int jm = (j + ntheta - 1) % ntheta;
      const int jp = (j + 1) % ntheta;
      const double c = grid[static_cast<std::size_t>(i * ntheta + j)];
      const double rr = (grid[static_cast<std::size_t>((i + 1) * ntheta + j)] - 2 * c +
                         grid[static_cast<std::size_t>((i - 1) * ntheta + j)]) /
                        (s.dr * s.dr);
      const double r1d = (grid[static_cast<std::size_t>((i + 1) * ntheta + j)] -
                          grid[static_cast<std::size_t>((i - 1) * ntheta + j)]) /
                         (2 * s.dr * ri);
      const double tt = (grid[static_cast<std::size_t>(i * ntheta + jp)] - 2 * c +
                         grid[static_cast<std::size_t>(i * ntheta + jm)]) /
                        (s.dth * s.dth * ri * ri);
      rep.laplace_linf = std::max(rep.laplace_linf, std::fabs(rr + r1d + tt));
    }
  }

  const bool neumann = data.kind == BoundaryKind::kNeumann;
  for (int j = 0; j < ntheta; ++j) {
    const double th = j * s.dth;
    double got_in, got_out;
    if (inner_trace) {
      got_in = inner_trace->eval(th);
      got_out = outer_trace->eval(th);
    } else if (neumann) {
      // one-sided second-order radial derivatives
      got_in = (-3.0 * grid[static_cast<std::size_t>(j)] +
                4.0 * grid[static_cast<std::size_t>(ntheta + j)] -
                grid[static_cast<std::size_t>(2 * ntheta + j)]) /
               (2.0 * s.dr);
      got_out = (3.0 * grid[static_cast<std::size_t>((nr - 1) * ntheta + j)] -
                 4.0 * grid[static_cast<std::size_t>((nr - 2) * ntheta + j)] +
                 grid[static_cast<std::size_t>((nr - 3) * ntheta + j)]) /
                (2.0 * s.dr);
    } else {
      got_in = grid[static_cast<std::size_t>(j)];
      got_out = grid[static_cast<std::size_t>((nr - 1) * ntheta + j)];
    }
    rep.bc_inner_linf = std::max(rep.bc_inner_linf, std::fabs(got_in - data.inner.eval(th)));
    rep.bc_outer_linf = std::max(rep.bc_outer_linf, std::fabs(got_out - data.outer.eval(th)));
  }

  if (neumann && data.r1 > 0.0)
    rep.compat_defect = check_neumann_compatibility(data).defect;
  else if (!neumann)
    rep.compat_defect = check_dirichlet_mean_compatibility(data).defect;
  return rep;
}

}  // namespace

ResidualReport residual_report(const std::function<double(double, double)>& fn,
                               const AnnulusBoundaryData& data, int nr, int ntheta) {
  return residual_core(fn, data, nr, ntheta, nullptr, nullptr);
}

ResidualReport residual_report(const AnnulusHarmonicSeries& series,
                               const AnnulusBoundaryData& data, int nr, int ntheta) {
  const bool neumann = data.kind == BoundaryKind::kNeumann;
  const PeriodicFunction inner = neumann ? series.radial_derivative_trace(data.r1)
                                         : series.trace(data.r1);
  const PeriodicFunction outer = neumann ? series.radial_derivative_trace(data.r2)
                                         : series.trace(data.r2);
  ResidualReport rep = residual_core(
      [&](double r, double th) { return series.eval(r, th); }, data, nr, ntheta,
      &inner, &outer);
  rep.notes = "analytic traces";
  return rep;
}

HolderEstimate holder_estimate(const std::function<double(double, double)>& fn,
                               const SampleBox& box, int pairs, double h_min,
                               double h_max, unsigned seed) {
  if (!(h_min > 0.0) || !(h_max > h_min) || h_max / h_min < 100.0)
    throw precondition_error("holder_estimate needs h_max/h_min >= 100");
  if (pairs < 1000) throw precondition_error("holder_estimate needs >= 1000 pairs");

  const bool one_dim = box.y0 == box.y1;
  constexpr int kBins = 16;
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> ux(box.x0, box.x1);
  std::uniform_real_distribution<double> uy(box.y0, box.y1);
  std::uniform_real_distribution<double> uang(0.0, kTwoPi);

  std::vector<double> log_h(kBins), log_sup(kBins);
  const int per_bin = pairs / kBins;
  for (int bin = 0; bin < kBins; ++bin) {
    const double h = h_min * std::pow(h_max / h_min, bin / double(kBins - 1));
    double sup = 0.0;
    int got = 0;
    int attempts = 0;
    while (got < per_bin && attempts < 50 * per_bin) {
      ++attempts;
      const double x = ux(rng);
      const double y = one_dim ? box.y0 : uy(rng);
      double x2, y2;
      if (one_dim) {
        x2 = x + (rng() & 1u ? h : -h);
        y2 = y;
      } else {
        const double ang = uang(rng);
        x2 = x + h * std::cos(ang);
        y2 = y + h * std::sin(ang);
      }
      if (x2 < box.x0 || x2 > box.x1 || y2 < box.y0 || y2 > box.y1) continue;
      sup = std::max(sup, std::fabs(fn(x2, y2) - fn(x, y)));
      ++got;
    }
    if (got == 0) throw numerical_error("holder_estimate: could not place pairs in the domain");
    log_h[static_cast<std::size_t>(bin)] = std::log(h);
    log_sup[static_cast<std::size_t>(bin)] = std::log(std::max(sup, 1e-300));
  }

  // least squares slope/intercept
  double mh = 0, ms = 0;
  for (int b = 0; b < kBins; ++b) {
    mh += log_h[static_cast<std::size_t>(b)];
    ms += log_sup[static_cast<std::size_t>(b)];
  }
  mh /= kBins;
  ms /= kBins;
  double sxx = 0, sxy = 0, syy = 0;
  for (int b = 0; b < kBins; ++b) {
    const double dx = log_h[static_cast<std::size_t>(b)] - mh;
    const double dy = log_sup[static_cast<std::size_t>(b)] - ms;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  HolderEstimate est;
  const double slope = sxy / sxx;
  est.alpha_hat = std::clamp(slope, 1e-6, 1.5);
  est.const_hat = std::exp(ms - slope * mh);
  est.r2_fit = syy > 0 ? (sxy * sxy) / (sxx * syy) : 1.0;
  est.pairs = pairs;
  return est;
}

double roundtrip_report(const AnnulusBoundaryData& phi) {
  if (phi.kind != BoundaryKind::kNeumann)
    throw precondition_error("roundtrip_report requires Neumann data");
  const NeumannSolution U = neumann_from_dirichlet_annulus(phi);
  AnnulusBoundaryData dir;
  dir.r1 = phi.r1;
  dir.r2 = phi.r2;
  dir.inner = phi.r1 * phi.inner;
  dir.outer = phi.r2 * phi.outer;
  dir.kind = BoundaryKind::kDirichlet;
  const AnnulusHarmonicSeries u = solve_dirichlet_annulus(dir);

  double defect = 0.0;
  const int nr = 64, nth = 128;
  for (int i = 0; i < nr; ++i) {
    const double r = phi.r1 + (phi.r2 - phi.r1) * i / (nr - 1);
    for (int j = 0; j < nth; ++j) {
      const double th = kTwoPi * j / nth;
      const double lhs = r * U.field.deriv(r, th, 1, 0);
      defect = std::max(defect, std::fabs(lhs - u.eval(r, th)));
    }
  }
  return defect;
}

}  // namespace hd
