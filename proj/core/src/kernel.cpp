#include "quadwalk/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "quadwalk/errors.hpp"

namespace quadwalk {

namespace {

// Sections for the orientation that solves for `s` given `t`:
//   a(t) = p(-1,-1) t^2 + p(0,-1) t + p(1,-1)   (coefficients of s^2)
//   b(t) = p(-1,0)  t^2 -        t + p(1,0)
//   c(t) = p(-1,1)  t^2 + p(0,1)  t + p(1,1)
// The transposed orientation is the same construction on the transposed walk.
KernelSide build_side(const WalkModel& m) {
  KernelSide s;
  s.a = Poly{{m.prob(1, -1), m.prob(0, -1), m.prob(-1, -1)}};
  s.b = Poly{{m.prob(1, 0), -1.0, m.prob(-1, 0)}};
  s.c = Poly{{m.prob(1, 1), m.prob(0, 1), m.prob(-1, 1)}};
  s.delta = s.b * s.b - (s.a * s.c).scaled(4.0);

  double scale = 0;
  for (double v : s.delta.c) scale = std::max(scale, std::abs(v));
  if (scale == 0) fail(ErrorCode::RootFindingFailure, "discriminant vanishes identically");

  // Zero drift forces a double root at 1; deflate it exactly.
  double rem1 = 0, rem2 = 0;
  Poly q1 = s.delta.deflate(1.0, &rem1);
  s.residual = q1.deflate(1.0, &rem2);
  if (std::abs(rem1) > 1e-10 * scale || std::abs(rem2) > 1e-10 * scale)
    fail(ErrorCode::RootFindingFailure,
         "discriminant does not have a double root at 1 (non-zero drift?)");

  // Residual quadratic q(t) = q2 t^2 + q1 t + q0 carries the outer roots.
  const double q0 = s.residual.c.size() > 0 ? s.residual.c[0] : 0.0;
  const double qa = s.residual.c.size() > 1 ? s.residual.c[1] : 0.0;
  const double q2 = s.residual.c.size() > 2 ? s.residual.c[2] : 0.0;

  if (std::abs(q2) < 1e-14 * scale) {
    // cubic discriminant: single finite root, the other at infinity
    if (std::abs(qa) < 1e-14 * scale)
      fail(ErrorCode::RootFindingFailure, "residual polynomial is constant");
    s.r1 = -q0 / qa;
    s.r4 = std::numeric_limits<double>::infinity();
    s.r4_infinite = true;
  } else {
    double disc = qa * qa - 4.0 * q2 * q0;
    if (disc < -1e-12 * scale * scale)
      fail(ErrorCode::RootFindingFailure, "residual quadratic has complex roots");
    disc = std::max(disc, 0.0);
    const double sq = std::sqrt(disc);
    double ra, rb;
    if (qa >= 0) {
      const double t = -(qa + sq) / 2.0;
      ra = t / q2;
      rb = (t != 0.0) ? q0 / t : 0.0;
    } else {
      const double t = -(qa - sq) / 2.0;
      ra = t / q2;
      rb = (t != 0.0) ? q0 / t : 0.0;
    }
    if (std::abs(ra) > std::abs(rb)) std::swap(ra, rb);
    s.r1 = ra;
    s.r4 = rb;
    s.degenerate = std::abs(ra - rb) <= 1e-9 * std::max(1.0, std::abs(rb));
  }
  return s;
}

constexpr double kSectionTol = 1e-13;

}  // namespace

KernelData build_kernel(const WalkModel& model) {
  KernelData kd;
  kd.model = model;
  kd.x = build_side(model);
  kd.y = build_side(model.transposed());
  return kd;
}

Complex kernel_L(const KernelData& kd, const Complex& x, const Complex& y) {
  return kd.x.a(x) * y * y + kd.x.b(x) * y + kd.x.c(x);
}

Complex kernel_L_transposed_form(const KernelData& kd, const Complex& x, const Complex& y) {
  return kd.y.a(y) * x * x + kd.y.b(y) * x + kd.y.c(y);
}

Complex kernel_Q(const WalkModel& model, const Complex& x, const Complex& y) {
  Complex e = -1.0;
  for (int i = -1; i <= 1; ++i)
    for (int j = -1; j <= 1; ++j) {
      const double p = model.prob(i, j);
      if (p == 0.0) continue;
      e += p * std::pow(x, i) * std::pow(y, j);
    }
  return x * y * e;
}

namespace {

// Roots of A s^2 + B s + C ordered by modulus (negative imaginary part first
// on ties, matching the conjugate-cut convention).
std::pair<BranchValue, BranchValue> section_roots(const Complex& A, const Complex& B,
                                                  const Complex& C) {
  const double scale = std::abs(A) + std::abs(B) + std::abs(C);
  if (scale == 0.0) fail(ErrorCode::BothBranchesInfinite, "zero section polynomial");

  if (std::abs(A) <= kSectionTol * scale) {
    if (std::abs(B) <= kSectionTol * scale)
      fail(ErrorCode::BothBranchesInfinite, "leading and middle sections vanish");
    BranchValue finite{-C / B, false};
    BranchValue inf{Complex(0, 0), true};
    return {finite, inf};
  }

  Complex s = std::sqrt(B * B - 4.0 * A * C);
  if (std::real(std::conj(B) * s) < 0.0) s = -s;
  const Complex t = -(B + s) / 2.0;
  Complex big, small;
  if (std::abs(t) > 0.0) {
    big = t / A;
    small = C / t;
  } else {
    big = small = Complex(0, 0);  // B = 0 and C = 0
  }

  BranchValue v0{small, false}, v1{big, false};
  const double m0 = std::abs(v0.value), m1 = std::abs(v1.value);
  if (m0 > m1 * (1.0 + 1e-12)) std::swap(v0, v1);
  else if (std::abs(m0 - m1) <= 1e-12 * std::max(m0, m1)) {
    if (v0.value.imag() > v1.value.imag()) std::swap(v0, v1);
  }
  return {v0, v1};
}

}  // namespace

BranchValue branch_X(const KernelData& kd, const Complex& y, int which) {
  const auto [v0, v1] = section_roots(kd.y.a(y), kd.y.b(y), kd.y.c(y));
  return which == 0 ? v0 : v1;
}

BranchValue branch_Y(const KernelData& kd, const Complex& x, int which) {
  const auto [v0, v1] = section_roots(kd.x.a(x), kd.x.b(x), kd.x.c(x));
  return which == 0 ? v0 : v1;
}

std::vector<Complex> boundary_curve(const KernelData& kd, int n_samples) {
  std::vector<Complex> pts;
  if (n_samples < 4) return pts;
  pts.reserve(n_samples);
  const double y1 = kd.y1();
  const int half = n_samples / 2;
  auto sample = [&](int which, double t) {
    const double y = y1 + (1.0 - y1) * t;
    BranchValue v;
    try {
      v = branch_X(kd, y, which);
    } catch (const Error&) {
      return;  // degenerate section (curve through infinity)
    }
    if (!v.at_infinity) pts.push_back(v.value);
  };
  // first branch forward over [y1, 1], second branch back
  for (int k = 0; k < half; ++k) sample(0, static_cast<double>(k) / (half - 1));
  const int rest = n_samples - half;
  for (int k = rest; k > 0; --k) sample(1, static_cast<double>(k - 1) / (rest - 1));
  return pts;
}

namespace {

Complex laurent_row(double pm, double p0, double pp, const Complex& x) {
  // pm/x + p0 + pp*x, the section sum over one row or column of steps
  if (std::abs(x) == 0.0) fail(ErrorCode::DivisionByZero, "generator at x = 0");
  return pm / x + p0 + pp * x;
}

}  // namespace

std::pair<Complex, Complex> xi(const WalkModel& m, const Complex& x, const Complex& y) {
  const Complex num = laurent_row(m.prob(-1, -1), m.prob(0, -1), m.prob(1, -1), x);
  const Complex den = laurent_row(m.prob(-1, 1), m.prob(0, 1), m.prob(1, 1), x);
  if (std::abs(den) < 1e-300) fail(ErrorCode::DivisionByZero, "xi denominator vanishes");
  if (std::abs(y) == 0.0) fail(ErrorCode::DivisionByZero, "xi at y = 0");
  return {x, num / (y * den)};
}

std::pair<Complex, Complex> eta(const WalkModel& m, const Complex& x, const Complex& y) {
  const Complex num = laurent_row(m.prob(-1, -1), m.prob(-1, 0), m.prob(-1, 1), y);
  const Complex den = laurent_row(m.prob(1, -1), m.prob(1, 0), m.prob(1, 1), y);
  if (std::abs(den) < 1e-300) fail(ErrorCode::DivisionByZero, "eta denominator vanishes");
  if (std::abs(x) == 0.0) fail(ErrorCode::DivisionByZero, "eta at x = 0");
  return {num / (x * den), y};
}

}  // namespace quadwalk
