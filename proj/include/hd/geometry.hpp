#pragma once

// Polar/Cartesian conversions with the principal argument in (-π, π], the
// outward-normal sign convention on annulus boundaries, the angle-chord
// constant L of the closed annulus, and the chain-rule bridge between polar
// and Cartesian partial derivatives up to second order.

#include "hd/errors.hpp"

namespace hd {

struct PolarPoint {
  double r = 0.0;
  double theta = 0.0;
};

struct CartesianPoint {
  double x = 0.0;
  double y = 0.0;
};

// Canonical representative in (-π, π].
double canonical_angle(double theta);

PolarPoint to_polar(CartesianPoint p);  // origin maps to (0, 0)
CartesianPoint to_cartesian(PolarPoint p);

// ∂w/∂ν at a boundary circle: +u_r at r = r2, -u_r at r = r1.
// Throws precondition_error if at_radius is neither.
double normal_derivative_from_radial(double u_r_value, double at_radius,
                                     double r1, double r2);

// L = π/(2 r1): |θ2 - θ1| <= L |z2 - z1| for points of the closed annulus
// with inner radius r1 > 0 and |θ2 - θ1| <= π (Jordan's inequality bound).
double angle_chord_constant(double r1);

struct PolarPartials {
  double u_r = 0.0;
  double u_theta = 0.0;
  double u_rr = 0.0;
  double u_rtheta = 0.0;
  double u_thetatheta = 0.0;
};

struct CartesianPartials {
  double w_x = 0.0;
  double w_y = 0.0;
  double w_xx = 0.0;
  double w_xy = 0.0;
  double w_yy = 0.0;
};

// Unique Cartesian partials at z = r e^{iθ} consistent with the polar
// chain-rule identities.  Requires r > 0.
CartesianPartials polar_cartesian_derivative_bridge(const PolarPartials& p,
                                                    double r, double theta);

}  // namespace hd
