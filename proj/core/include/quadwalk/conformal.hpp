#pragma once

#include <complex>

#include "quadwalk/kernel.hpp"

namespace quadwalk {

// Conformal gluing map w of the domain bounded by the curve X([y1,1]).
//
// Construction: with delta the discriminant of the kernel and r4 the outer
// branch point, the rational pre-map
//   f(x) = delta''(r4)/6 + delta'(r4)/(x-r4)        (r4 finite)
//   f(x) = delta''(0)/6 + delta'''(0) x/6           (r4 infinite)
// and T(x) = [1/3 - 2 f(x)/delta''(1)]^{-1/2} feed the gluing expression
//   w(x) = sin^2( (pi/theta) (arcsin T(x) - pi/2) ),
// continued across |T| >= 1 by
//   w(x) = -1/4 [ (T+sqrt(T^2-1))^{2 pi/theta} - 2 + (T-sqrt(T^2-1))^{2 pi/theta} ].
// T is a Moebius map sending 1 -> infinity, r1 -> 1, r4 -> 0; when the two
// outer branch points collide (r1 = r4) that triple degenerates and the map
// reduces to the limit shape [(x - r1)/(1 - x)]^{pi/theta}.
//
// The map is normalized to w(0) = 0 with the sign fixed so w -> +infinity as
// x -> 1 along (0,1); the remaining positive scale is free and carried in
// `scale` (downstream quantities must be invariant under it).
class ConformalMap {
public:
  enum class Kind { FinitePole, InfinitePole, DegeneratePair };

  // normalized map: scale * sign * (raw(x) - raw(0))
  Complex operator()(const Complex& x) const;

  // unnormalized expressions (exposed for the seam cross-check)
  Complex raw(const Complex& x) const;
  Complex raw_arcsin(const Complex& x) const;  // sine/arcsine form
  Complex raw_log(const Complex& x) const;     // exponential continuation
  Complex T(const Complex& x) const;

  double theta() const { return theta_; }
  double exponent() const { return exponent_; }  // pi/theta
  Kind kind() const { return kind_; }
  double sign() const { return sign_; }
  double scale() const { return scale_; }
  double raw_offset() const { return raw_offset_; }

  // c in w(x) = (c+o(1))/(1-x)^{pi/theta}; positive by the sign convention
  double growth_constant() const { return growth_c_; }
  double growth_constant_error() const { return growth_c_err_; }

  double pole_r1() const { return r1_; }
  double pole_r4() const { return r4_; }
  double d1_at_r4() const { return d1_r4_; }
  double d2_at_1() const { return d2_1_; }
  double d3_at_0() const { return d3_0_; }

  double deriv1_at_0() const { return deriv1_0_; }
  double deriv2_at_0() const { return deriv2_0_; }

  // returns a copy with the free scale multiplied by k (k > 0)
  ConformalMap scaled(double k) const;

  friend ConformalMap build_w(const KernelData& kd, double theta, double scale);

private:
  double theta_ = 0, exponent_ = 0;
  Kind kind_ = Kind::FinitePole;
  double r1_ = 0, r4_ = 0;
  double d1_r4_ = 0, d2_r4_ = 0;  // delta', delta'' at r4
  double d2_0_ = 0, d3_0_ = 0;    // delta'', delta''' at 0
  double d2_1_ = 0;               // delta'' at 1
  double raw_offset_ = 0;
  double sign_ = 1.0;
  double scale_ = 1.0;
  double growth_c_ = 0, growth_c_err_ = 0;
  double deriv1_0_ = 0, deriv2_0_ = 0;
};

ConformalMap build_w(const KernelData& kd, double theta, double scale = 1.0);

// Log-log slope of w(1-eps) against 1/eps at the deepest usable eps pair;
// converges to pi/theta.
double fit_growth_exponent(const ConformalMap& w);

}  // namespace quadwalk
