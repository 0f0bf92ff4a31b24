#pragma once

// Adaptive Gauss-Kronrod (G7/K15) quadrature on a bisection stack.

#include <cmath>
#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "hd/errors.hpp"

namespace hd {

struct QuadratureOptions {
  double rel_tol = 1e-12;
  double abs_tol = 1e-14;
  int max_intervals = 4000;
};

namespace detail {

// G7/K15 nodes and weights on [-1, 1]; column 0 node, 1 Gauss weight,
// 2 Kronrod weight (node 0 plus symmetric pairs).
inline constexpr double kGk15[8][3] = {
    {0.000000000000000, 0.417959183673469, 0.209482141084728},
    {0.405845151377397, 0.381830050505119, 0.190350578064785},
    {0.741531185599394, 0.279705391489277, 0.140653259715525},
    {0.949107912342759, 0.129484966168870, 0.063092092629979},
    {0.207784955007898, 0.0, 0.204432940075298},
    {0.586087235467691, 0.0, 0.169004726639267},
    {0.864864423359769, 0.0, 0.104790010322250},
    {0.991455371120813, 0.0, 0.022935322010529}};

template <class F>
double gk15(const F& f, double a, double b, double& err) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double y0 = f(mid);
  double g7 = kGk15[0][1] * y0;
  double k15 = kGk15[0][2] * y0;
  for (int i = 1; i < 8; ++i) {
    const double dx = half * kGk15[i][0];
    const double yi = f(mid + dx) + f(mid - dx);
    g7 += kGk15[i][1] * yi;
    k15 += kGk15[i][2] * yi;
  }
  g7 *= half;
  k15 *= half;
  const double d = std::fabs(k15 - g7);
  err = d * std::sqrt(d) * 200.0;  // standard (200 |K-G|)^{3/2} estimate
  return k15;
}

}  // namespace detail

// ∫_a^b f.  Orientation-aware (a > b integrates backwards).
template <class F>
double integrate(const F& f, double a, double b,
                 const QuadratureOptions& opt = {}) {
  if (a == b) return 0.0;
  double sign = 1.0;
  if (a > b) {
    std::swap(a, b);
    sign = -1.0;
  }
  struct Interval {
    double a, b, value, error;
  };
  std::vector<Interval> stack;
  stack.reserve(64);
  double err0 = 0.0;
  double v0 = detail::gk15(f, a, b, err0);
  stack.push_back({a, b, v0, err0});
  double total = v0;
  double total_err = err0;
  int used = 1;
  while (total_err > opt.abs_tol && total_err > opt.rel_tol * std::fabs(total)) {
    // split the worst interval
    std::size_t worst = 0;
    for (std::size_t i = 1; i < stack.size(); ++i)
      if (stack[i].error > stack[worst].error) worst = i;
    Interval iv = stack[worst];
    stack.erase(stack.begin() + static_cast<std::ptrdiff_t>(worst));
    const double mid = 0.5 * (iv.a + iv.b);
    double el = 0.0, er = 0.0;
    const double vl = detail::gk15(f, iv.a, mid, el);
    const double vr = detail::gk15(f, mid, iv.b, er);
    stack.push_back({iv.a, mid, vl, el});
    stack.push_back({mid, iv.b, vr, er});
    total += vl + vr - iv.value;
    total_err += el + er - iv.error;
    if (++used > opt.max_intervals)
      throw numerical_error("adaptive quadrature: interval budget exhausted");
    if (mid == iv.a || mid == iv.b) break;  // can no longer bisect
  }
  return sign * total;
}

inline double integrate(const std::function<double(double)>& f, double a,
                        double b, const QuadratureOptions& opt) {
  return integrate<std::function<double(double)>>(f, a, b, opt);
}

}  // namespace hd
