#include "quadwalk/conformal.hpp"

#include <cmath>
#include <numbers>
#include <tuple>
#include <vector>

#include "quadwalk/errors.hpp"

namespace quadwalk {

namespace {
constexpr double kHalfPi = std::numbers::pi / 2.0;
}

Complex ConformalMap::T(const Complex& x) const {
  Complex f;
  if (kind_ == Kind::FinitePole) {
    f = d2_r4_ / 6.0 + d1_r4_ / (x - r4_);
  } else {
    f = d2_0_ / 6.0 + d3_0_ * x / 6.0;
  }
  const Complex g = 1.0 / 3.0 - 2.0 * f / d2_1_;
  return 1.0 / std::sqrt(g);
}

Complex ConformalMap::raw_arcsin(const Complex& x) const {
  const Complex t = T(x);
  const Complex psi = exponent_ * (std::asin(t) - kHalfPi);
  const Complex s = std::sin(psi);
  return s * s;
}

Complex ConformalMap::raw_log(const Complex& x) const {
  const Complex t = T(x);
  const Complex u = t + std::sqrt(t * t - 1.0);
  const Complex p = std::pow(u, 2.0 * exponent_);
  return -0.25 * (p - 2.0 + 1.0 / p);
}

Complex ConformalMap::raw(const Complex& x) const {
  if (kind_ == Kind::DegeneratePair)
    return std::pow((x - r1_) / (1.0 - x), exponent_);
  return std::abs(T(x)) <= 1.0 ? raw_arcsin(x) : raw_log(x);
}

Complex ConformalMap::operator()(const Complex& x) const {
  if (std::abs(x - 1.0) < 1e-12)
    fail(ErrorCode::PoleAtOne, "gluing map evaluated at the pole");
  return scale_ * sign_ * (raw(x) - raw_offset_);
}

ConformalMap ConformalMap::scaled(double k) const {
  ConformalMap m = *this;
  m.scale_ *= k;
  m.growth_c_ *= k;
  m.growth_c_err_ *= k;
  m.deriv1_0_ *= k;
  m.deriv2_0_ *= k;
  return m;
}

namespace {

// closed form of c = lim eps^a w(1-eps): the pre-map T^{-2} =: g has a simple
// zero at 1 and w ~ -sign/4 (4/g)^a there, so c = scale/4 * (4/|g'(1)|)^a
// (and (1-r1)^a for the collided-branch-point map).
double growth_closed_form(const ConformalMap& w) {
  double c;
  switch (w.kind()) {
    case ConformalMap::Kind::DegeneratePair:
      c = std::pow(1.0 - w.pole_r1(), w.exponent());
      break;
    case ConformalMap::Kind::FinitePole: {
      const double f1 = -w.d1_at_r4() / ((1.0 - w.pole_r4()) * (1.0 - w.pole_r4()));
      const double gp1 = -2.0 * f1 / w.d2_at_1();
      c = 0.25 * std::pow(4.0 / std::abs(gp1), w.exponent());
      break;
    }
    case ConformalMap::Kind::InfinitePole:
    default: {
      const double f1 = w.d3_at_0() / 6.0;
      const double gp1 = -2.0 * f1 / w.d2_at_1();
      c = 0.25 * std::pow(4.0 / std::abs(gp1), w.exponent());
      break;
    }
  }
  return w.scale() * c;
}

// Richardson estimate of the same limit on eps = 2^-4 .. 2^-20; cross-checks
// the closed form and supplies the error estimate.
std::pair<double, double> estimate_growth(const ConformalMap& w, double a) {
  std::vector<double> c;
  for (int k = 4; k <= 20; ++k) {
    if (a * (k + 2) > 900)  // keep w(1-eps) inside double range
      break;
    const double eps = std::ldexp(1.0, -k);
    const Complex v = w(Complex(1.0 - eps, 0.0));
    const double ck = std::pow(eps, a) * v.real();
    if (!std::isfinite(ck)) break;
    c.push_back(ck);
  }
  if (c.size() < 3) fail(ErrorCode::NonConvergentLimit, "too few usable samples near 1");
  std::vector<double> rich(c.size() - 1);
  for (size_t k = 0; k + 1 < c.size(); ++k) rich[k] = 2.0 * c[k + 1] - c[k];
  const double last = rich.back();
  const double prev = rich[rich.size() - 2];
  if (std::abs(last - prev) > 1e-4 * std::abs(last))
    fail(ErrorCode::NonConvergentLimit,
         "growth-constant estimates differ by " + std::to_string(std::abs(last - prev)));
  return {last, std::abs(last - prev)};
}

// First two Taylor coefficients at 0 by trapezoidal Cauchy integrals on a
// small circle; beats difference quotients because the integrand never
// cancels against the w(0) offset.
std::pair<double, double> taylor_at_0(const ConformalMap& w) {
  constexpr int kPoints = 64;
  constexpr double kRadius = 0.3;
  Complex c1 = 0, c2 = 0;
  for (int k = 0; k < kPoints; ++k) {
    const double ang = 2.0 * std::numbers::pi * k / kPoints;
    const Complex rot(std::cos(ang), std::sin(ang));
    const Complex v = w(kRadius * rot);
    c1 += v / rot;
    c2 += v / (rot * rot);
  }
  c1 /= kPoints * kRadius;
  c2 /= kPoints * kRadius * kRadius;
  return {c1.real(), 2.0 * c2.real()};  // w'(0), w''(0)
}

}  // namespace

ConformalMap build_w(const KernelData& kd, double theta, double scale) {
  ConformalMap w;
  w.theta_ = theta;
  w.exponent_ = std::numbers::pi / theta;
  w.scale_ = scale;

  const Poly d1 = kd.x.delta.derivative();
  const Poly d2 = d1.derivative();
  const Poly d3 = d2.derivative();
  w.r1_ = kd.x.r1;
  w.r4_ = kd.x.r4;
  w.d2_1_ = d2(1.0);
  if (std::abs(w.d2_1_) < 1e-14)
    fail(ErrorCode::NormalizationFailure, "delta''(1) vanishes");

  if (kd.x.degenerate) {
    w.kind_ = ConformalMap::Kind::DegeneratePair;
  } else if (kd.x.r4_infinite) {
    w.kind_ = ConformalMap::Kind::InfinitePole;
    w.d2_0_ = d2(0.0);
    w.d3_0_ = d3(0.0);
  } else {
    w.kind_ = ConformalMap::Kind::FinitePole;
    w.d1_r4_ = d1(kd.x.r4);
    w.d2_r4_ = d2(kd.x.r4);
  }

  const Complex at0 = w.raw(Complex(0.0, 0.0));
  if (!std::isfinite(at0.real()) || std::abs(at0.imag()) > 1e-9 * (1.0 + std::abs(at0)))
    fail(ErrorCode::NormalizationFailure, "map not real-finite at 0");
  w.raw_offset_ = at0.real();

  const Complex probe = w.raw(Complex(1.0 - 1e-6, 0.0));
  if (!std::isfinite(probe.real()))
    fail(ErrorCode::NormalizationFailure, "map not finite near 1");
  w.sign_ = (probe.real() - w.raw_offset_) >= 0.0 ? 1.0 : -1.0;

  const double closed = growth_closed_form(w);
  const auto [estimated, richardson_err] = estimate_growth(w, w.exponent_);
  if (std::abs(estimated - closed) > 1e-4 * std::abs(closed) + 10.0 * richardson_err)
    fail(ErrorCode::NonConvergentLimit,
         "limit estimate " + std::to_string(estimated) +
             " disagrees with the closed form " + std::to_string(closed));
  w.growth_c_ = closed;
  w.growth_c_err_ = std::abs(estimated - closed);
  if (w.growth_c_ <= 0)
    fail(ErrorCode::NormalizationFailure, "growth constant not positive");

  std::tie(w.deriv1_0_, w.deriv2_0_) = taylor_at_0(w);
  return w;
}

double fit_growth_exponent(const ConformalMap& w) {
  const double a = w.exponent();
  int k = 20;
  while (a * (k + 2) > 900 && k > 6) --k;
  const double e1 = std::ldexp(1.0, -(k - 1));
  const double e0 = std::ldexp(1.0, -k);
  const double w0 = w(Complex(1.0 - e0, 0.0)).real();
  const double w1 = w(Complex(1.0 - e1, 0.0)).real();
  return std::log(w0 / w1) / std::log(e1 / e0);
}

}  // namespace quadwalk
