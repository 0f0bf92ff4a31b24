#pragma once

// 2π-periodic boundary data as truncated Fourier series
//
//   f(θ) = a0 + Σ_{k=1..K} a_k cos kθ + b_k sin kθ,
//
// conversion from equispaced samples, and the compatibility checks that the
// annulus transforms rely on (zero total flux for Neumann data, equal circle
// means for Dirichlet data, and the punctured-disk origin condition).

#include <span>
#include <vector>

#include "hd/errors.hpp"

namespace hd {

inline constexpr int kDefaultOrder = 64;
inline constexpr double kDefaultTol = 1e-9;  // relative

class PeriodicFunction {
 public:
  PeriodicFunction() = default;  // identically zero

  static PeriodicFunction from_coefficients(double a0, std::vector<double> a,
                                            std::vector<double> b);
  // Equispaced samples on [0, 2π).  Analyzed at floor((N-2)/2) unless a
  // non-negative order is given.  N must be even and >= 4.
  static PeriodicFunction from_samples(std::span<const double> samples,
                                       int order = -1);
  static PeriodicFunction constant(double c);
  static PeriodicFunction harmonic_cos(int k, double amplitude = 1.0);
  static PeriodicFunction harmonic_sin(int k, double amplitude = 1.0);

  int order() const { return static_cast<int>(a_.size()); }
  double a0() const { return a0_; }
  double a(int k) const;  // k in [1, order]; 0 beyond
  double b(int k) const;
  double mean() const { return a0_; }

  double eval(double theta) const;
  double eval_derivative(double theta) const;  // d/dθ
  std::vector<double> sample(int n) const;

  // Largest coefficient magnitude; scale for relative tolerances.
  double scale() const;

  PeriodicFunction truncated(int order) const;
  PeriodicFunction rotated(double c) const;  // f(· + c)
  PeriodicFunction first_harmonic() const;   // projection onto cos θ, sin θ

  PeriodicFunction& operator*=(double s);
  friend PeriodicFunction operator*(double s, PeriodicFunction f) {
    f *= s;
    return f;
  }
  PeriodicFunction operator+(const PeriodicFunction& g) const;
  PeriodicFunction operator-(const PeriodicFunction& g) const;

  // Set only for sampled input: RMS of the DFT modes discarded at analysis.
  double analysis_tail() const { return tail_; }
  int sample_count() const { return sample_count_; }

 private:
  friend PeriodicFunction fourier_analyze(std::span<const double>, int);

  double a0_ = 0.0;
  std::vector<double> a_, b_;
  int sample_count_ = 0;
  double tail_ = 0.0;
};

// Discrete Fourier analysis of N equispaced samples on [0, 2π) at the given
// truncation order.  Requires N >= 2K + 2 (throws precondition_error).
PeriodicFunction fourier_analyze(std::span<const double> samples, int order);

enum class BoundaryKind { kDirichlet, kNeumann };

// Boundary data on {r1, r2} × R in the paper's polar convention: for
// kind = Neumann, `inner`/`outer` are ϕ(r1,·)/ϕ(r2,·) with the sign already
// adjusted (ϕ = f at r2, ϕ = -f at r1 for Cartesian normal data f).
struct AnnulusBoundaryData {
  double r1 = 0.0;
  double r2 = 1.0;
  PeriodicFunction inner, outer;
  BoundaryKind kind = BoundaryKind::kDirichlet;

  void validate() const;  // finite radii, 0 <= r1 < r2
};

// Cartesian-facing helper: applies the outward-normal sign convention
// (ϕ = f_outer at r2, ϕ = -f_inner at r1).
AnnulusBoundaryData neumann_data_from_cartesian(const PeriodicFunction& f_inner,
                                                const PeriodicFunction& f_outer,
                                                double r1, double r2);

struct CompatibilityReport {
  bool pass = false;
  double defect = 0.0;  // signed
  double scale = 1.0;   // max(1, data scale) used for the relative test
  double tol = kDefaultTol;
};

// Neumann solvability: ∫ r1 ϕ(r1,θ) dθ = ∫ r2 ϕ(r2,θ) dθ, i.e. in
// coefficients 2π (r1 a0_inner - r2 a0_outer) = 0.  Report only.
CompatibilityReport check_neumann_compatibility(const AnnulusBoundaryData& data,
                                                double tol = kDefaultTol);

// Equal circle means of Dirichlet data; when it passes the log coefficient B
// of the solved series vanishes.  Report only.
CompatibilityReport check_dirichlet_mean_compatibility(
    const AnnulusBoundaryData& data, double tol = kDefaultTol);

struct PuncturedNeumannReport {
  bool pass = false;
  double mean_defect = 0.0;          // ∫ ϕ(1,θ) dθ
  double max_mode_error = 0.0;       // worst per-mode mismatch
  std::vector<double> mode_errors;   // index k-1 -> mode-k mismatch (k >= 0 at [0])
};

// Punctured-disk Neumann data check: ϕ(1,·) has zero mean and
// ϕ(0,θ) = (1/π) ∫ cos(t-θ) ϕ(1,t) dt, i.e. ϕ(0,·) equals the first
// harmonic of ϕ(1,·) and carries no other modes.
PuncturedNeumannReport check_punctured_neumann_data(
    const PeriodicFunction& phi_origin, const PeriodicFunction& phi_outer,
    double tol = kDefaultTol);

}  // namespace hd
