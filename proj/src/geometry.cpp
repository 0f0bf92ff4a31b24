#include "hd/geometry.hpp"

#include <cmath>
#include <numbers>

namespace hd {

namespace {
constexpr double kPi = std::numbers::pi;
}

double canonical_angle(double theta) {
  if (!std::isfinite(theta)) throw precondition_error("angle is not finite");
  double t = std::remainder(theta, 2.0 * kPi);  // [-π, π]
  if (t <= -kPi) t = kPi;
  return t;
}

PolarPoint to_polar(CartesianPoint p) {
  if (!std::isfinite(p.x) || !std::isfinite(p.y))
    throw precondition_error("point is not finite");
  if (p.x == 0.0 && p.y == 0.0) return {0.0, 0.0};
  return {std::hypot(p.x, p.y), std::atan2(p.y, p.x)};
}

CartesianPoint to_cartesian(PolarPoint p) {
  return {p.r * std::cos(p.theta), p.r * std::sin(p.theta)};
}

double normal_derivative_from_radial(double u_r_value, double at_radius,
                                     double r1, double r2) {
  if (at_radius == r2) return u_r_value;
  if (at_radius == r1) return -u_r_value;
  throw precondition_error("radius is not on the annulus boundary");
}

double angle_chord_constant(double r1) {
  if (!(r1 > 0.0)) throw precondition_error("inner radius must be positive");
  // sin t >= (2/π) t on [0, π/2] gives L0 = 2/π in L = 1/(L0 r1).
  return kPi / (2.0 * r1);
}

CartesianPartials polar_cartesian_derivative_bridge(const PolarPartials& p,
                                                    double r, double theta) {
  if (!(r > 0.0)) throw precondition_error("derivative bridge is singular at r = 0");
  const double c = std::cos(theta), s = std::sin(theta);
  const double r2 = r * r;
  CartesianPartials w;
  w.w_x = p.u_r * c - p.u_theta * s / r;
  w.w_y = p.u_r * s + p.u_theta * c / r;
  w.w_xx = p.u_rr * c * c - 2.0 * p.u_rtheta * s * c / r +
           p.u_thetatheta * s * s / r2 + p.u_r * s * s / r +
           2.0 * p.u_theta * s * c / r2;
  w.w_yy = p.u_rr * s * s + 2.0 * p.u_rtheta * s * c / r +
           p.u_thetatheta * c * c / r2 + p.u_r * c * c / r -
           2.0 * p.u_theta * s * c / r2;
  w.w_xy = p.u_rr * s * c + p.u_rtheta * (c * c - s * s) / r -
           p.u_thetatheta * s * c / r2 - p.u_r * s * c / r +
           p.u_theta * (s * s - c * c) / r2;
  return w;
}

}  // namespace hd
