#include "hd/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

namespace hd {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw precondition_error(std::string(what) + " is not finite");
}
}  // namespace

PeriodicFunction PeriodicFunction::from_coefficients(double a0,
                                                     std::vector<double> a,
                                                     std::vector<double> b) {
  if (a.size() != b.size())
    throw precondition_error("coefficient arrays a and b must have equal length");
  require_finite(a0, "a0");
  for (double v : a) require_finite(v, "a coefficient");
  for (double v : b) require_finite(v, "b coefficient");
  PeriodicFunction f;
  f.a0_ = a0;
  f.a_ = std::move(a);
  f.b_ = std::move(b);
  return f;
}

PeriodicFunction PeriodicFunction::from_samples(std::span<const double> samples,
                                                int order) {
  const int n = static_cast<int>(samples.size());
  if (n < 4 || n % 2 != 0)
    throw precondition_error("sample count must be even and >= 4");
  if (order < 0) order = (n - 2) / 2;
  PeriodicFunction f = fourier_analyze(samples, order);
  f.sample_count_ = n;
  return f;
}

PeriodicFunction PeriodicFunction::constant(double c) {
  return from_coefficients(c, {}, {});
}

PeriodicFunction PeriodicFunction::harmonic_cos(int k, double amplitude) {
  if (k < 1) throw precondition_error("harmonic index must be >= 1");
  std::vector<double> a(static_cast<std::size_t>(k), 0.0), b(static_cast<std::size_t>(k), 0.0);
  a[static_cast<std::size_t>(k) - 1] = amplitude;
  return from_coefficients(0.0, std::move(a), std::move(b));
}

PeriodicFunction PeriodicFunction::harmonic_sin(int k, double amplitude) {
  if (k < 1) throw precondition_error("harmonic index must be >= 1");
  std::vector<double> a(static_cast<std::size_t>(k), 0.0), b(static_cast<std::size_t>(k), 0.0);
  b[static_cast<std::size_t>(k) - 1] = amplitude;
  return from_coefficients(0.0, std::move(a), std::move(b));
}

double PeriodicFunction::a(int k) const {
  if (k < 1) throw precondition_error("coefficient index must be >= 1");
  return k <= order() ? a_[static_cast<std::size_t>(k) - 1] : 0.0;
}

double PeriodicFunction::b(int k) const {
  if (k < 1) throw precondition_error("coefficient index must be >= 1");
  return k <= order() ? b_[static_cast<std::size_t>(k) - 1] : 0.0;
}

double PeriodicFunction::eval(double theta) const {
  // Clenshaw-free direct sum with angle recurrence; K is small here.
  double s = a0_;
  const double c1 = std::cos(theta), s1 = std::sin(theta);
  double ck = 1.0, sk = 0.0;
  for (int k = 1; k <= order(); ++k) {
    const double c = ck * c1 - sk * s1;  // cos kθ
    const double sn = sk * c1 + ck * s1; // sin kθ
    ck = c;
    sk = sn;
    s += a_[static_cast<std::size_t>(k) - 1] * c + b_[static_cast<std::size_t>(k) - 1] * sn;
  }
  return s;
}

double PeriodicFunction::eval_derivative(double theta) const {
  double s = 0.0;
  const double c1 = std::cos(theta), s1 = std::sin(theta);
  double ck = 1.0, sk = 0.0;
  for (int k = 1; k <= order(); ++k) {
    const double c = ck * c1 - sk * s1;
    const double sn = sk * c1 + ck * s1;
    ck = c;
    sk = sn;
    s += k * (b_[static_cast<std::size_t>(k) - 1] * c - a_[static_cast<std::size_t>(k) - 1] * sn);
  }
  return s;
}

std::vector<double> PeriodicFunction::sample(int n) const {
  if (n < 1) throw precondition_error("sample count must be positive");
  std::vector<double> out(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) out[static_cast<std::size_t>(j)] = eval(kTwoPi * j / n);
  return out;
}

double PeriodicFunction::scale() const {
  double m = std::fabs(a0_);
  for (double v : a_) m = std::max(m, std::fabs(v));
  for (double v : b_) m = std::max(m, std::fabs(v));
  return m;
}

PeriodicFunction PeriodicFunction::truncated(int order) const {
  if (order < 0) throw precondition_error("truncation order must be >= 0");
  const auto n = static_cast<std::size_t>(std::min(order, this->order()));
  return from_coefficients(a0_, {a_.begin(), a_.begin() + static_cast<std::ptrdiff_t>(n)},
                           {b_.begin(), b_.begin() + static_cast<std::ptrdiff_t>(n)});
}

PeriodicFunction PeriodicFunction::rotated(double c) const {
  // f(θ + c): a_k' = a_k cos kc + b_k sin kc, b_k' = b_k cos kc - a_k sin kc.
  std::vector<double> a(a_.size()), b(b_.size());
  for (int k = 1; k <= order(); ++k) {
    const double ck = std::cos(k * c), sk = std::sin(k * c);
    const std::size_t i = static_cast<std::size_t>(k) - 1;
    a[i] = a_[i] * ck + b_[i] * sk;
    b[i] = b_[i] * ck - a_[i] * sk;
  }
  return from_coefficients(a0_, std::move(a), std::move(b));
}

PeriodicFunction PeriodicFunction::first_harmonic() const {
  if (order() < 1) return PeriodicFunction();
  return from_coefficients(0.0, {a_[0]}, {b_[0]});
}

PeriodicFunction& PeriodicFunction::operator*=(double s) {
  a0_ *= s;
  for (double& v : a_) v *= s;
  for (double& v : b_) v *= s;
  return *this;
}

PeriodicFunction PeriodicFunction::operator+(const PeriodicFunction& g) const {
  const int K = std::max(order(), g.order());
  std::vector<double> a(static_cast<std::size_t>(K)), b(static_cast<std::size_t>(K));
  for (int k = 1; k <= K; ++k) {
    a[static_cast<std::size_t>(k) - 1] = this->a(k) + g.a(k);
    b[static_cast<std::size_t>(k) - 1] = this->b(k) + g.b(k);
  }
  return from_coefficients(a0_ + g.a0_, std::move(a), std::move(b));
}

PeriodicFunction PeriodicFunction::operator-(const PeriodicFunction& g) const {
  return *this + (-1.0 * g);
}

PeriodicFunction fourier_analyze(std::span<const double> samples, int order) {
  const int n = static_cast<int>(samples.size());
  if (order < 0) throw precondition_error("analysis order must be >= 0");
  if (n < 2 * order + 2)
    throw precondition_error("too few samples: need N >= 2K + 2");
  for (double v : samples)
    if (!std::isfinite(v)) throw precondition_error("sample is not finite");

  double a0 = 0.0;
  for (double v : samples) a0 += v;
  a0 /= n;

  std::vector<double> a(static_cast<std::size_t>(order), 0.0);
  std::vector<double> b(static_cast<std::size_t>(order), 0.0);
  for (int k = 1; k <= order; ++k) {
    double ca = 0.0, cb = 0.0;
    for (int j = 0; j < n; ++j) {
      const double t = kTwoPi * k * j / n;
      ca += samples[static_cast<std::size_t>(j)] * std::cos(t);
      cb += samples[static_cast<std::size_t>(j)] * std::sin(t);
    }
    a[static_cast<std::size_t>(k) - 1] = 2.0 * ca / n;
    b[static_cast<std::size_t>(k) - 1] = 2.0 * cb / n;
  }
  PeriodicFunction f = PeriodicFunction::from_coefficients(a0, std::move(a), std::move(b));

  // RMS of what the truncation discarded, measured on the sample grid.
  double tail2 = 0.0;
  for (int j = 0; j < n; ++j) {
    const double d = samples[static_cast<std::size_t>(j)] - f.eval(kTwoPi * j / n);
    tail2 += d * d;
  }
  f.tail_ = std::sqrt(tail2 / n);
  f.sample_count_ = n;
  return f;
}

void AnnulusBoundaryData::validate() const {
  require_finite(r1, "r1");
  require_finite(r2, "r2");
  if (r1 < 0.0 || !(r1 < r2)) throw precondition_error("radii must satisfy 0 <= r1 < r2");
}

AnnulusBoundaryData neumann_data_from_cartesian(const PeriodicFunction& f_inner,
                                                const PeriodicFunction& f_outer,
                                                double r1, double r2) {
  AnnulusBoundaryData d;
  d.r1 = r1;
  d.r2 = r2;
  d.inner = -1.0 * f_inner;
  d.outer = f_outer;
  d.kind = BoundaryKind::kNeumann;
  d.validate();
  return d;
}

CompatibilityReport check_neumann_compatibility(const AnnulusBoundaryData& data,
                                                double tol) {
  data.validate();
  if (data.kind != BoundaryKind::kNeumann)
    throw precondition_error("neumann compatibility check requires Neumann data");
  if (!(data.r1 > 0.0))
    throw precondition_error("neumann compatibility check requires r1 > 0");
  CompatibilityReport rep;
  rep.tol = tol;
  rep.defect = kTwoPi * (data.r1 * data.inner.mean() - data.r2 * data.outer.mean());
  rep.scale = std::max({1.0, data.r1 * data.inner.scale(), data.r2 * data.outer.scale()});
  rep.pass = std::fabs(rep.defect) <= tol * rep.scale;
  return rep;
}

CompatibilityReport check_dirichlet_mean_compatibility(
    const AnnulusBoundaryData& data, double tol) {
  data.validate();
  if (data.kind != BoundaryKind::kDirichlet)
    throw precondition_error("dirichlet mean check requires Dirichlet data");
  CompatibilityReport rep;
  rep.tol = tol;
  rep.defect = kTwoPi * (data.inner.mean() - data.outer.mean());
  rep.scale = std::max({1.0, data.inner.scale(), data.outer.scale()});
  rep.pass = std::fabs(rep.defect) <= tol * rep.scale;
  return rep;
}

PuncturedNeumannReport check_punctured_neumann_data(
    const PeriodicFunction& phi_origin, const PeriodicFunction& phi_outer,
    double tol) {
  PuncturedNeumannReport rep;
  rep.mean_defect = kTwoPi * phi_outer.mean();
  const double scale = std::max(1.0, phi_outer.scale());

  // ϕ(0,θ) = (1/π) ∫ cos(t-θ) ϕ(1,t) dt = a1 cos θ + b1 sin θ.
  const int K = std::max(phi_origin.order(), phi_outer.order());
  rep.mode_errors.assign(static_cast<std::size_t>(K) + 1, 0.0);
  rep.mode_errors[0] = std::fabs(phi_origin.mean());
  for (int k = 1; k <= K; ++k) {
    const double want_a = (k == 1) ? phi_outer.a(1) : 0.0;
    const double want_b = (k == 1) ? phi_outer.b(1) : 0.0;
    rep.mode_errors[static_cast<std::size_t>(k)] = std::max(
        std::fabs(phi_origin.a(k) - want_a), std::fabs(phi_origin.b(k) - want_b));
  }
  rep.max_mode_error = *std::max_element(rep.mode_errors.begin(), rep.mode_errors.end());
  rep.pass = std::fabs(rep.mean_defect) <= tol * scale &&
             rep.max_mode_error <= tol * std::max(scale, phi_origin.scale());
  return rep;
}

}  // namespace hd
