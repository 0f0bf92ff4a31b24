#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "hd/series.hpp"
#include "oracles.hpp"

using namespace hd;

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

TEST_CASE("mode-0 annulus solve: log r fixture") {
  AnnulusBoundaryData d;
  d.r1 = 1.0;
  d.r2 = std::exp(1.0);
  d.inner = PeriodicFunction::constant(0.0);
  d.outer = PeriodicFunction::constant(1.0);
  const AnnulusHarmonicSeries u = solve_dirichlet_annulus(d);
  CHECK(u.A() == doctest::Approx(0.0).epsilon(0).scale(1).margin(1e-14));
  CHECK(u.B() == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("symmetric cos fixture: u = (r + 1/r)/(a + 1/a) cos θ") {
  const double a = 2.0;
  AnnulusBoundaryData d;
  d.r1 = 1.0 / a;
  d.r2 = a;
  d.inner = PeriodicFunction::harmonic_cos(1);
  d.outer = PeriodicFunction::harmonic_cos(1);
  const AnnulusHarmonicSeries u = solve_dirichlet_annulus(d);
  const double want = 1.0 / (a + 1.0 / a);
  CHECK(u.mode(1).C == doctest::Approx(want).epsilon(1e-14));
  CHECK(u.mode(1).D == doctest::Approx(want).epsilon(1e-14));
  CHECK(std::fabs(u.B()) < 1e-15);
}

TEST_CASE("constant data stays constant") {
  AnnulusBoundaryData d;
  d.r1 = 0.5;
  d.r2 = 2.0;
  d.inner = PeriodicFunction::constant(4.5);
  d.outer = PeriodicFunction::constant(4.5);
  const AnnulusHarmonicSeries u = solve_dirichlet_annulus(d);
  CHECK(u.A() == doctest::Approx(4.5).epsilon(1e-14));
  CHECK(std::fabs(u.B()) < 1e-14);
}

TEST_CASE("boundary traces match input coefficients exactly, mode by mode") {
  for (double r1 : {0.3, 1.0}) {
    const double r2 = r1 * 3.7;
    for (int k = 0; k <= 12; ++k) {
      AnnulusBoundaryData d;
      d.r1 = r1;
      d.r2 = r2;
      if (k == 0) {
        d.inner = PeriodicFunction::constant(0.7);
        d.outer = PeriodicFunction::constant(-1.2);
      } else {
        d.inner = PeriodicFunction::harmonic_cos(k, 0.8) + PeriodicFunction::harmonic_sin(k, -0.4);
        d.outer = PeriodicFunction::harmonic_sin(k, 1.1);
      }
      const AnnulusHarmonicSeries u = solve_dirichlet_annulus(d);
      const PeriodicFunction ti = u.trace(r1), to = u.trace(r2);
      CHECK(std::fabs(ti.a0() - d.inner.a0()) < 1e-12);
      CHECK(std::fabs(to.a0() - d.outer.a0()) < 1e-12);
      for (int m = 1; m <= std::max(1, k); ++m) {
        CHECK(std::fabs(ti.a(m) - d.inner.a(m)) < 1e-12);
        CHECK(std::fabs(ti.b(m) - d.inner.b(m)) < 1e-12);
        CHECK(std::fabs(to.a(m) - d.outer.a(m)) < 1e-12);
        CHECK(std::fabs(to.b(m) - d.outer.b(m)) < 1e-12);
      }
    }
  }
}

TEST_CASE("evaluate with derivatives: hand-differentiated fixture") {
  // u = (4/5)(r + 1/r) cos θ at (2, 0)
  AnnulusHarmonicSeries u(0.5, 2.0);
  u.set_mode(1, 0.8, 0.8, 0.0, 0.0);
  CHECK(u.eval(2.0, 0.0) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(u.deriv(2.0, 0.0, 1, 0) == doctest::Approx(0.6).epsilon(1e-14));

  // u = log r at r = e
  AnnulusHarmonicSeries v(1.0, 3.0);
  v.set_B(1.0);
  CHECK(v.eval(std::exp(1.0), 0.3) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(v.deriv(std::exp(1.0), 0.3, 1, 0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
}

TEST_CASE("harmonicity: u_θθ = -r²(u_rr + u_r/r) for any series") {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> un(-1.0, 1.0);
  AnnulusHarmonicSeries u(0.5, 2.0);
  u.set_A(un(rng));
  u.set_B(un(rng));
  for (int k = 1; k <= 8; ++k) u.set_mode(k, un(rng), un(rng), un(rng), un(rng));
  std::uniform_real_distribution<double> ur(0.5, 2.0), ut(-3.0, 3.0);
  for (int i = 0; i < 200; ++i) {
    const double r = ur(rng), th = ut(rng);
    const double lhs = u.deriv(r, th, 0, 2);
    const double rhs = -r * r * (u.deriv(r, th, 2, 0) + u.deriv(r, th, 1, 0) / r);
    CHECK(lhs == doctest::Approx(rhs).epsilon(0).scale(1).margin(1e-9 * (1 + std::fabs(lhs))));
  }
}

TEST_CASE("evaluate range checking and derivative-order limit") {
  AnnulusHarmonicSeries u(0.5, 2.0);
  u.set_mode(1, 1.0, 0.0, 0.0, 0.0);
  CHECK_THROWS_AS(u.eval(0.4, 0.0), precondition_error);
  CHECK_THROWS_AS(u.eval(2.1, 0.0), precondition_error);
  CHECK_THROWS_AS(u.deriv(1.0, 0.0, 2, 2), precondition_error);
  CHECK_NOTHROW(u.deriv(1.0, 0.0, 3, 0));
}

TEST_CASE("disk solve fixtures") {
  SUBCASE("cos θ on the unit disk is Re z") {
    const AnnulusHarmonicSeries u = solve_dirichlet_disk(PeriodicFunction::harmonic_cos(1), 1.0);
    CHECK(u.mode(1).C == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(u.eval(0.0, 0.0) == doctest::Approx(0.0).epsilon(0).scale(1).margin(1e-15));
    CHECK(u.eval(0.5, 1.1) == doctest::Approx(0.5 * std::cos(1.1)).epsilon(1e-14));
  }
  SUBCASE("constant 5") {
    const AnnulusHarmonicSeries u = solve_dirichlet_disk(PeriodicFunction::constant(5.0), 1.0);
    CHECK(u.eval(0.7, 2.0) == doctest::Approx(5.0).epsilon(1e-15));
  }
  SUBCASE("cos 2θ + sin θ on radius 2: u = (r/2)² cos 2θ + (r/2) sin θ") {
    const PeriodicFunction phi =
        PeriodicFunction::harmonic_cos(2) + PeriodicFunction::harmonic_sin(1);
    const AnnulusHarmonicSeries u = solve_dirichlet_disk(phi, 2.0);
    CHECK(u.mode(2).C == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(u.mode(1).E == doctest::Approx(0.5).epsilon(1e-15));
  }
}

TEST_CASE("punctured disk solve") {
  SUBCASE("sin θ gives r sin θ with u(0) = 0") {
    const AnnulusHarmonicSeries u = solve_dirichlet_punctured(PeriodicFunction::harmonic_sin(1));
    CHECK(u.eval(0.0, 0.3) == 0.0);
    CHECK(u.eval(0.8, 0.3) == doctest::Approx(0.8 * std::sin(0.3)).epsilon(1e-14));
  }
  SUBCASE("nonzero mean is rejected") {
    CHECK_THROWS_AS(solve_dirichlet_punctured(PeriodicFunction::constant(1.0)),
                    precondition_error);
  }
  SUBCASE("cos 3θ gives r³ cos 3θ") {
    const AnnulusHarmonicSeries u = solve_dirichlet_punctured(PeriodicFunction::harmonic_cos(3));
    CHECK(u.mode(3).C == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(u.eval(0.5, 0.7) == doctest::Approx(0.125 * std::cos(2.1)).epsilon(1e-13));
  }
}

TEST_CASE("circle means") {
  SUBCASE("log r has alpha = 2π") {
    AnnulusHarmonicSeries u(0.5, 2.0);
    u.set_B(1.0);
    const CircleMeanProfile p = circle_mean(u);
    CHECK(p.alpha == doctest::Approx(kTwoPi).epsilon(1e-15));
    CHECK(p.beta == 0.0);
  }
  SUBCASE("B = 0 means constant in r") {
    AnnulusHarmonicSeries u(0.5, 2.0);
    u.set_A(2.0);
    u.set_mode(3, 0.5, -0.2, 0.1, 0.4);
    CHECK(circle_mean(u).alpha == 0.0);
    const double m1 = oracle::circle_mean_quadrature(u, 0.7);
    const double m2 = oracle::circle_mean_quadrature(u, 1.9);
    CHECK(m1 == doctest::Approx(m2).epsilon(1e-12));
  }
  SUBCASE("u = 3 + 2 log r + r cos θ against the quadrature oracle") {
    AnnulusHarmonicSeries u(0.5, 2.0);
    u.set_A(3.0);
    u.set_B(2.0);
    u.set_mode(1, 1.0, 0.0, 0.0, 0.0);
    const CircleMeanProfile p = circle_mean(u);
    CHECK(p.alpha == doctest::Approx(2 * kTwoPi).epsilon(1e-15));
    CHECK(p.beta == doctest::Approx(3 * kTwoPi).epsilon(1e-15));
    for (double r : {0.6, 1.0, 1.7}) {
      CHECK(oracle::circle_mean_quadrature(u, r) ==
            doctest::Approx(p.alpha * std::log(r) + p.beta).epsilon(1e-10));
    }
  }
}

TEST_CASE("harmonic conjugate on the cut annulus") {
  SUBCASE("u = r cos θ -> v0 = r sin θ") {
    AnnulusHarmonicSeries u(0.5, 2.0);
    u.set_mode(1, 1.0, 0.0, 0.0, 0.0);
    const AnnulusHarmonicSeries v = harmonic_conjugate_on_cut(u);
    CHECK(v.mode(1).E == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(std::fabs(v.A()) < 1e-15);
    CHECK(std::fabs(v.eval(1.0, 0.0)) < 1e-15);  // √(r1r2) = 1
  }
  SUBCASE("u = (r + 1/r) cos θ with r1 r2 = 1 -> v0 = (r - 1/r) sin θ") {
    AnnulusHarmonicSeries u(0.5, 2.0);
    u.set_mode(1, 1.0, 1.0, 0.0, 0.0);
    const AnnulusHarmonicSeries v = harmonic_conjugate_on_cut(u);
    CHECK(v.mode(1).E == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(v.mode(1).G == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(std::fabs(v.A()) < 1e-15);
  }
  SUBCASE("constants have zero conjugate") {
    AnnulusHarmonicSeries u(0.5, 2.0);
    u.set_A(3.0);
    const AnnulusHarmonicSeries v = harmonic_conjugate_on_cut(u);
    CHECK(v.coefficient_scale() == 0.0);
  }
  SUBCASE("nonzero B is rejected") {
    AnnulusHarmonicSeries u(0.5, 2.0);
    u.set_B(1.0);
    CHECK_THROWS_AS(harmonic_conjugate_on_cut(u), precondition_error);
  }
}

TEST_CASE("Cauchy-Riemann residual of conjugate pairs at random points") {
  std::mt19937 rng(29);
  std::uniform_real_distribution<double> un(-1.0, 1.0), ur(0.5, 2.0), ut(-3.1, 3.1);
  AnnulusHarmonicSeries u(0.5, 2.0);
  u.set_A(un(rng));
  for (int k = 1; k <= 6; ++k) u.set_mode(k, un(rng), un(rng), un(rng), un(rng));
  const AnnulusHarmonicSeries v = harmonic_conjugate_on_cut(u);
  for (int i = 0; i < 10000; ++i) {
    const double r = ur(rng), th = ut(rng);
    // u_r = v_θ / r and v_r = -u_θ / r
    CHECK(std::fabs(u.deriv(r, th, 1, 0) - v.deriv(r, th, 0, 1) / r) < 1e-9);
    CHECK(std::fabs(v.deriv(r, th, 1, 0) + u.deriv(r, th, 0, 1) / r) < 1e-9);
  }
}

TEST_CASE("weak maximum principle on random band-limited data") {
  std::mt19937 rng(31);
  for (int rep = 0; rep < 100; ++rep) {
    const AnnulusBoundaryData d = oracle::random_dirichlet(rng, 0.5, 2.0, 6);
    const AnnulusHarmonicSeries u = solve_dirichlet_annulus(d);
    double boundary_max = -1e300, interior_max = -1e300;
    for (int j = 0; j < 512; ++j) {
      const double th = kTwoPi * j / 512;
      boundary_max = std::max({boundary_max, d.inner.eval(th), d.outer.eval(th)});
    }
    for (int i = 1; i < 24; ++i) {
      const double r = 0.5 + 1.5 * i / 24.0;
      for (int j = 0; j < 96; ++j)
        interior_max = std::max(interior_max, u.eval(r, kTwoPi * j / 96));
    }
    CHECK(interior_max <= boundary_max + 1e-9);
  }
}

TEST_CASE("Laplace residual of a series sampled by finite differences is O(h²)") {
  AnnulusHarmonicSeries u(0.5, 2.0);
  u.set_A(0.3);
  u.set_B(-0.7);
  u.set_mode(1, 0.5, 0.2, -0.3, 0.1);
  u.set_mode(4, -0.1, 0.05, 0.2, 0.0);
  double prev = -1.0;
  for (int n : {16, 32, 64}) {
    const double dr = 1.5 / n, dth = kTwoPi / (2 * n);
    double worst = 0.0;
    for (int i = 1; i < n; ++i) {
      const double r = 0.5 + 1.5 * i / n;
      if (r + dr > 2.0) continue;
      for (int j = 0; j < 2 * n; ++j) {
        const double th = kTwoPi * j / (2 * n);
        const double lap =
            (u.eval(r + dr, th) - 2 * u.eval(r, th) + u.eval(r - dr, th)) / (dr * dr) +
            (u.eval(r + dr, th) - u.eval(r - dr, th)) / (2 * dr * r) +
            (u.eval(r, th + dth) - 2 * u.eval(r, th) + u.eval(r, th - dth)) /
                (dth * dth * r * r);
        worst = std::max(worst, std::fabs(lap));
      }
    }
    if (prev > 0) CHECK(worst < prev / 3.0);  // h² decay gives a factor 4
    prev = worst;
  }
}

TEST_CASE("overflow guard drops badly conditioned modes with a warning") {
  AnnulusBoundaryData d;
  d.r1 = 0.01;
  d.r2 = 10.0;  // q = 1000: q^k > 1e15 for k >= 6
  d.inner = PeriodicFunction::harmonic_cos(8);
  d.outer = PeriodicFunction::harmonic_cos(8);
  const AnnulusHarmonicSeries u = solve_dirichlet_annulus(d);
  CHECK(!u.dropped_modes.empty());
  CHECK(u.dropped_modes.front() == 6);
  CHECK(std::isfinite(u.eval(1.0, 0.5)));
}
