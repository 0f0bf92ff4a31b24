#include "hd/series.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace hd {

namespace {

// d^n/dr^n r^p as (falling factorial, exponent).  A zero factor makes the
// whole term vanish regardless of r.
double power_derivative(double r, int p, int n) {
  double coef = 1.0;
  for (int j = 0; j < n; ++j) coef *= static_cast<double>(p - j);
  if (coef == 0.0) return 0.0;
  return coef * std::pow(r, p - n);
}

// d^n/dr^n log r, n >= 1: (-1)^{n-1} (n-1)! r^{-n}.
double log_derivative(double r, int n) {
  if (n == 0) return std::log(r);
  double coef = 1.0;
  for (int j = 1; j < n; ++j) coef *= -static_cast<double>(j);
  return coef * std::pow(r, -n);
}

}  // namespace

AnnulusHarmonicSeries::AnnulusHarmonicSeries(double r1, double r2)
    : r1_(r1), r2_(r2) {
  if (!std::isfinite(r1) || !std::isfinite(r2) || r1 < 0.0 || !(r1 < r2))
    throw precondition_error("series radii must satisfy 0 <= r1 < r2");
}

const HarmonicMode& AnnulusHarmonicSeries::mode(int k) const {
  if (k < 1 || k > order()) throw precondition_error("mode index out of range");
  return modes_[static_cast<std::size_t>(k) - 1];
}

void AnnulusHarmonicSeries::set_B(double v) {
  if (disk_form() && v != 0.0)
    throw precondition_error("disk-form series cannot carry a log term");
  B_ = v;
}

void AnnulusHarmonicSeries::set_mode(int k, double C, double D, double E, double G) {
  if (k < 1) throw precondition_error("mode index must be >= 1");
  if (disk_form() && (D != 0.0 || G != 0.0))
    throw precondition_error("disk-form series cannot carry r^{-k} terms");
  if (k > order()) modes_.resize(static_cast<std::size_t>(k));
  for (int j = 1; j <= k; ++j) modes_[static_cast<std::size_t>(j) - 1].k = j;
  modes_[static_cast<std::size_t>(k) - 1] = HarmonicMode{k, C, D, E, G};
}

void AnnulusHarmonicSeries::check_radius(double r) const {
  const double slack = 1e-12 * std::max(1.0, r2_);
  if (!(r >= r1_ - slack) || !(r <= r2_ + slack))
    throw precondition_error("evaluation radius outside [r1, r2]");
}

double AnnulusHarmonicSeries::eval(double r, double theta) const {
  check_radius(r);
  double u = A_;
  if (B_ != 0.0) u += B_ * std::log(r);
  const double c1 = std::cos(theta), s1 = std::sin(theta);
  double ck = 1.0, sk = 0.0;
  double rp = 1.0;                      // r^k
  const double ri = r > 0.0 ? 1.0 / r : 0.0;
  double rn = 1.0;                      // r^{-k}
  for (const HarmonicMode& m : modes_) {
    const double c = ck * c1 - sk * s1;
    const double sn = sk * c1 + ck * s1;
    ck = c;
    sk = sn;
    rp *= r;
    rn *= ri;
    const double rad_c = m.C * rp + m.D * rn;
    const double rad_s = m.E * rp + m.G * rn;
    u += rad_c * c + rad_s * sn;
  }
  return u;
}

double AnnulusHarmonicSeries::deriv(double r, double theta, int nr, int ntheta) const {
  if (nr < 0 || ntheta < 0 || nr + ntheta > 3)
    throw precondition_error("derivative order must satisfy 0 <= nr + ntheta <= 3");
  if (nr == 0 && ntheta == 0) return eval(r, theta);
  check_radius(r);
  double u = 0.0;
  if (ntheta == 0) {
    if (B_ != 0.0) u += B_ * log_derivative(r, nr);
  }
  for (const HarmonicMode& m : modes_) {
    const int k = m.k;
    // θ-derivative of cos kθ cycles through -k sin, -k² cos, ...
    double ang_c, ang_s;  // n-th θ-derivative of cos kθ, sin kθ
    const double kn = std::pow(static_cast<double>(k), ntheta);
    switch (ntheta % 4) {
      case 0: ang_c = std::cos(k * theta); ang_s = std::sin(k * theta); break;
      case 1: ang_c = -std::sin(k * theta); ang_s = std::cos(k * theta); break;
      case 2: ang_c = -std::cos(k * theta); ang_s = -std::sin(k * theta); break;
      default: ang_c = std::sin(k * theta); ang_s = -std::cos(k * theta); break;
    }
    ang_c *= kn;
    ang_s *= kn;
    double rad_c = 0.0, rad_s = 0.0;
    if (m.C != 0.0) rad_c += m.C * power_derivative(r, k, nr);
    if (m.D != 0.0) rad_c += m.D * power_derivative(r, -k, nr);
    if (m.E != 0.0) rad_s += m.E * power_derivative(r, k, nr);
    if (m.G != 0.0) rad_s += m.G * power_derivative(r, -k, nr);
    u += rad_c * ang_c + rad_s * ang_s;
  }
  return u;
}

PolarPartials AnnulusHarmonicSeries::partials(double r, double theta) const {
  PolarPartials p;
  p.u_r = deriv(r, theta, 1, 0);
  p.u_theta = deriv(r, theta, 0, 1);
  p.u_rr = deriv(r, theta, 2, 0);
  p.u_rtheta = deriv(r, theta, 1, 1);
  p.u_thetatheta = deriv(r, theta, 0, 2);
  return p;
}

PeriodicFunction AnnulusHarmonicSeries::trace(double r) const {
  check_radius(r);
  const int K = order();
  std::vector<double> a(static_cast<std::size_t>(K)), b(static_cast<std::size_t>(K));
  for (const HarmonicMode& m : modes_) {
    const double rp = std::pow(r, m.k), rn = std::pow(r, -m.k);
    a[static_cast<std::size_t>(m.k) - 1] = m.C * rp + m.D * rn;
    b[static_cast<std::size_t>(m.k) - 1] = m.E * rp + m.G * rn;
  }
  const double a0 = A_ + (B_ != 0.0 ? B_ * std::log(r) : 0.0);
  return PeriodicFunction::from_coefficients(a0, std::move(a), std::move(b));
}

PeriodicFunction AnnulusHarmonicSeries::radial_derivative_trace(double r) const {
  check_radius(r);
  const int K = order();
  std::vector<double> a(static_cast<std::size_t>(K)), b(static_cast<std::size_t>(K));
  for (const HarmonicMode& m : modes_) {
    const double rp = power_derivative(r, m.k, 1), rn = power_derivative(r, -m.k, 1);
    a[static_cast<std::size_t>(m.k) - 1] = m.C * rp + m.D * rn;
    b[static_cast<std::size_t>(m.k) - 1] = m.E * rp + m.G * rn;
  }
  const double a0 = (B_ != 0.0 && r > 0.0) ? B_ / r : 0.0;
  return PeriodicFunction::from_coefficients(a0, std::move(a), std::move(b));
}

double AnnulusHarmonicSeries::coefficient_scale() const {
  double m = std::max(std::fabs(A_), std::fabs(B_));
  for (const HarmonicMode& h : modes_)
    m = std::max({m, std::fabs(h.C), std::fabs(h.D), std::fabs(h.E), std::fabs(h.G)});
  return m;
}

AnnulusHarmonicSeries solve_dirichlet_annulus(const AnnulusBoundaryData& data,
                                              const DirichletSolveOptions& opt) {
  data.validate();
  if (data.kind != BoundaryKind::kDirichlet)
    throw precondition_error("annulus Dirichlet solve requires Dirichlet data");
  if (!(data.r1 > 0.0))
    throw precondition_error("annulus Dirichlet solve requires r1 > 0");

  const double r1 = data.r1, r2 = data.r2;
  const double q = r2 / r1;
  AnnulusHarmonicSeries u(r1, r2);

  // Mode 0: A + B log r through both circle means.
  const double a0_in = data.inner.mean(), a0_out = data.outer.mean();
  const double B = (a0_out - a0_in) / std::log(q);
  u.set_B(B);
  u.set_A(a0_in - B * std::log(r1));

  // Mode k in the scaled basis α (r/r2)^k + β (r1/r)^k with t = (r1/r2)^k:
  //   α t + β = inner_k,  α + β t = outer_k.
  const int K = std::max(data.inner.order(), data.outer.order());
  for (int k = 1; k <= K; ++k) {
    if (std::pow(q, k) > opt.condition_limit) {
      u.dropped_modes.push_back(k);
      continue;
    }
    const double t = std::pow(r1 / r2, k);
    const double det = 1.0 - t * t;
    const double sc2k = std::pow(r2, -k);  // scale factors back to C, D
    const double sc1k = std::pow(r1, k);
    const double ain = data.inner.a(k), aout = data.outer.a(k);
    const double bin = data.inner.b(k), bout = data.outer.b(k);
    const double alpha_c = (aout - ain * t) / det, beta_c = (ain - aout * t) / det;
    const double alpha_s = (bout - bin * t) / det, beta_s = (bin - bout * t) / det;
    u.set_mode(k, alpha_c * sc2k, beta_c * sc1k, alpha_s * sc2k, beta_s * sc1k);
  }
  return u;
}

AnnulusHarmonicSeries solve_dirichlet_disk(const PeriodicFunction& phi, double r2) {
  if (!(r2 > 0.0) || !std::isfinite(r2))
    throw precondition_error("disk radius must be positive and finite");
  AnnulusHarmonicSeries u(0.0, r2);
  u.set_A(phi.mean());
  for (int k = 1; k <= phi.order(); ++k) {
    const double scale = std::pow(r2, -k);
    u.set_mode(k, phi.a(k) * scale, 0.0, phi.b(k) * scale, 0.0);
  }
  return u;
}

AnnulusHarmonicSeries solve_dirichlet_punctured(const PeriodicFunction& phi,
                                                double tol) {
  const double mean_integral = 2.0 * std::numbers::pi * phi.mean();
  if (std::fabs(mean_integral) > tol * std::max(1.0, phi.scale()))
    throw precondition_error(
        "punctured-disk Dirichlet data must have zero mean (Zaremba condition)");
  AnnulusHarmonicSeries u = solve_dirichlet_disk(phi, 1.0);
  u.set_A(0.0);  // u(0) = 0 exactly
  return u;
}

CircleMeanProfile circle_mean(const AnnulusHarmonicSeries& u) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  return {two_pi * u.B(), two_pi * u.A()};
}

AnnulusHarmonicSeries harmonic_conjugate_on_cut(const AnnulusHarmonicSeries& u,
                                                double tol) {
  if (std::fabs(u.B()) > tol * std::max(1.0, u.coefficient_scale()))
    throw precondition_error(
        "harmonic conjugate requires a vanishing log coefficient (B = 0)");
  const double s = u.disk_form() ? 0.0 : std::sqrt(u.r1() * u.r2());
  AnnulusHarmonicSeries v(u.r1(), u.r2());
  double constant = 0.0;
  for (const HarmonicMode& m : u.modes()) {
    v.set_mode(m.k, -m.E, m.G, m.C, -m.D);
    if (!u.disk_form())
      constant += (m.E * std::pow(s, m.k) - m.G * std::pow(s, -m.k));
  }
  // v0(√(r1 r2), 0) = 0; for the disk form the normalization point is the
  // origin and the modes already vanish there.
  v.set_A(constant);
  return v;
}

}  // namespace hd
