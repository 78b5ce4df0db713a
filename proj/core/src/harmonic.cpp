#include "quadwalk/harmonic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "quadwalk/classify.hpp"
#include "quadwalk/errors.hpp"
#include "quadwalk/fft.hpp"

namespace quadwalk {

namespace {

struct Constants {
  double mu = 0, nu = 0, dev = 0;
};

// mu and nu for one orientation. kd/w_self belong to that orientation,
// w_other is the transposed-side map; the free scales cancel because only
// the product mu*(w+nu) matters.
//
// Routes: with mu*nu = p(1,1) f(1,1) and w normalized to w(0) = 0,
//   p(1,1) != 0:  mu = -p(1,1) / [ w(X0(y)) + wt(y) ],   nu = p(1,1)/mu,
//     the bracket being constant in y once wt carries the matched growth
//     constant (checked on three samples);
//   p(1,1) == 0:  nu = 0 and mu matches the lowest non-vanishing Taylor
//     coefficient of L(x,0) H(x,0) = mu w(x) at 0:
//       mu = p(0,1)/w'(0), or mu = 2 p(-1,1)/w''(0) if p(0,1) = 0 too.
//
// Growth matching: the kernel branch through (1,1) has slope
// X0(y) - 1 = sqrt(m_yy/m_xx) e^{+-i theta} (y-1) + o(y-1), so w(X0(y))
// blows up like -c (m_xx/m_yy)^{a/2} (1-y)^{-a}. The transposed map must
// carry exactly that constant:
//   wt_matched = kappa * wt,  kappa = c (m_xx/m_yy)^{a/2} / c_t.
// (For models with m_xx = m_yy this is the plain equal-constant matching.)
double growth_match_factor(const Moments& mom, const ConformalMap& w_self,
                           const ConformalMap& w_other) {
  const double a = w_self.exponent();
  return w_self.growth_constant() * std::pow(mom.m_xx / mom.m_yy, a / 2.0) /
         w_other.growth_constant();
}

Constants orientation_constants(const WalkModel& m, const KernelData& kd,
                                const ConformalMap& w_self, const ConformalMap& w_other) {
  Constants out;
  const double p11 = m.prob(1, 1);
  const double p01 = m.prob(0, 1);
  const double pm11 = m.prob(-1, 1);

  if (p11 == 0.0) {
    out.nu = 0.0;
    if (p01 > 0.0) {
      if (std::abs(w_self.deriv1_at_0()) < 1e-12)
        fail(ErrorCode::DegenerateMu, "w'(0) vanishes but p(0,1) > 0");
      out.mu = p01 / w_self.deriv1_at_0();
    } else if (pm11 > 0.0) {
      if (std::abs(w_self.deriv2_at_0()) < 1e-12)
        fail(ErrorCode::DegenerateMu, "w''(0) vanishes but p(-1,1) > 0");
      out.mu = 2.0 * pm11 / w_self.deriv2_at_0();
    } else {
      // all north-pointing steps zero: excluded by the non-degeneracy check
      fail(ErrorCode::DegenerateMu, "no step into the upper half plane");
    }
    return out;
  }

  const double c_ratio = growth_match_factor(moments(m), w_self, w_other);

  const double y1 = kd.y.r1;
  const double candidates[] = {y1 / 2,  y1 / 4, -y1 / 4, -0.25, -0.125,
                               0.125,   -0.3,   0.2,     -0.4,  0.35};
  std::vector<double> values;
  for (double ys : candidates) {
    if (std::abs(ys) < 0.01 || std::abs(ys) > 0.92) continue;
    try {
      const BranchValue x0 = branch_X(kd, Complex(ys, 0.0), 0);
      if (x0.at_infinity) continue;
      const Complex d = w_self(x0.value) + c_ratio * w_other(Complex(ys, 0.0));
      if (!std::isfinite(d.real()) || std::abs(d.imag()) > 1e-6 * (1.0 + std::abs(d)))
        continue;
      values.push_back(d.real());
    } catch (const Error&) {
      continue;
    }
    if (values.size() == 3) break;
  }
  if (values.size() < 3)
    fail(ErrorCode::ConstancyViolation, "could not place three evaluation samples");

  const double mean = (values[0] + values[1] + values[2]) / 3.0;
  double dev = 0;
  for (double v : values) dev = std::max(dev, std::abs(v - mean));
  if (dev > 1e-6 * std::max(1.0, std::abs(mean)))
    fail(ErrorCode::ConstancyViolation,
         "boundary constant varies by " + std::to_string(dev) + " across samples");

  out.dev = dev;
  out.mu = -p11 / mean;
  out.nu = p11 / out.mu;
  return out;
}

}  // namespace

HarmonicSolution HarmonicSolution::solve(const WalkModel& model, double w_scale) {
  HarmonicSolution s;
  s.model_ = model;
  s.model_t_ = model.transposed();
  const Moments mom = validate(model, /*require_zero_drift=*/true);
  s.theta_ = angle(mom);
  s.kd_ = build_kernel(model);
  s.kd_t_ = build_kernel(s.model_t_);
  s.w_ = build_w(s.kd_, s.theta_, w_scale);
  s.w_t_ = build_w(s.kd_t_, s.theta_);

  const Constants fwd = orientation_constants(model, s.kd_, s.w_, s.w_t_);
  const Constants bwd = orientation_constants(s.model_t_, s.kd_t_, s.w_t_, s.w_);
  s.mu_ = fwd.mu;
  s.nu_ = fwd.nu;
  s.mu_t_ = bwd.mu;
  s.nu_t_ = bwd.nu;
  s.constancy_dev_ = std::max(fwd.dev, bwd.dev);

  if (!(s.mu_ > 0.0) || !(s.mu_t_ > 0.0))
    fail(ErrorCode::ConstancyViolation, "mu not positive; sign normalization broken");
  return s;
}

double HarmonicSolution::growth_match_kappa() const {
  return growth_match_factor(moments(model_), w_, w_t_);
}

Complex HarmonicSolution::boundary_product_x(const Complex& x) const {
  return mu_ * (w_(x) + nu_);
}

Complex HarmonicSolution::boundary_product_y(const Complex& y) const {
  return mu_t_ * (w_t_(y) + nu_t_);
}

Complex HarmonicSolution::eval_Hx0(const Complex& x) const {
  if (std::abs(x) < 1e-13) return Complex(1.0, 0.0);
  const Complex lx0 = kd_.x.c(x);  // L(x,0)
  if (std::abs(lx0) < 1e-14)
    fail(ErrorCode::KernelZero, "L(x,0) vanishes at the evaluation point");
  return boundary_product_x(x) / lx0;
}

Complex HarmonicSolution::eval_H0y(const Complex& y) const {
  if (std::abs(y) < 1e-13) return Complex(1.0, 0.0);
  const Complex l0y = kd_t_.x.c(y);  // L(0,y), the transposed L(y,0)
  if (std::abs(l0y) < 1e-14)
    fail(ErrorCode::KernelZero, "L(0,y) vanishes at the evaluation point");
  return boundary_product_y(y) / l0y;
}

Complex HarmonicSolution::eval_H(const Complex& x, const Complex& y) const {
  const Complex l = kernel_L(kd_, x, y);
  if (std::abs(l) < 1e-10)
    fail(ErrorCode::KernelZero, "kernel vanishes at the evaluation point");
  const double l00 = model_.prob(1, 1);
  return (boundary_product_x(x) + boundary_product_y(y) - l00) / l;
}

namespace {

// smallest |L| on the r-torus, sampled on a k-by-k grid
double min_kernel_on_torus(const KernelData& kd, double r, int k) {
  std::vector<Complex> xs(k);
  for (int i = 0; i < k; ++i) {
    const double ang = 2.0 * std::numbers::pi * i / k;
    xs[i] = Complex(r * std::cos(ang), r * std::sin(ang));
  }
  double min_l = std::numeric_limits<double>::max();
  for (int i = 0; i < k; ++i) {
    const Complex a = kd.x.a(xs[i]), b = kd.x.b(xs[i]), c = kd.x.c(xs[i]);
    for (int j = 0; j < k; ++j)
      min_l = std::min(min_l, std::abs(a * xs[j] * xs[j] + b * xs[j] + c));
  }
  return min_l;
}

}  // namespace

CoeffGrid HarmonicSolution::extract_coefficients(int n) const {
  if (n < 1) fail(ErrorCode::ImaginaryResidue, "grid side must be >= 1");
  const double l00 = model_.prob(1, 1);

  // Torus radius: 1/2 by default, moved towards 1 for larger grids. The
  // recovered coefficient is the FFT bin divided by r^{i+j-2}, so the noise
  // gain r^{-(2n-2)} is kept at or below ~1e8; the grid size is then refined
  // with the radius so the aliasing tail r^m stays negligible.
  const double tuned =
      std::max(0.5, std::min(0.85, std::exp(-18.4 / (2.0 * n - 2.0))));
  double radius = 0;
  for (const double r : {tuned, tuned + 0.02, tuned - 0.02, tuned + 0.05, tuned - 0.04}) {
    if (r < 0.3 || r > 0.88) continue;
    if (min_kernel_on_torus(kd_, r, 256) >= 1e-6) {
      radius = r;
      break;
    }
  }
  if (radius == 0)
    fail(ErrorCode::TorusThroughZero, "kernel vanishes on every candidate torus");

  int m = std::max({128, next_pow2(4 * n),
                    next_pow2(static_cast<int>(32.0 / std::log(1.0 / radius)))});
  for (int attempt = 0; attempt < 3; ++attempt, m *= 2) {
    const double r = radius;
    std::vector<Complex> xs(m);
    for (int k = 0; k < m; ++k) {
      const double ang = 2.0 * std::numbers::pi * k / m;
      xs[k] = Complex(r * std::cos(ang), r * std::sin(ang));
    }

    std::vector<Complex> ax(m), bx(m), cx(m), bp_x(m), bp_y(m);
    for (int k = 0; k < m; ++k) {
      ax[k] = kd_.x.a(xs[k]);
      bx[k] = kd_.x.b(xs[k]);
      cx[k] = kd_.x.c(xs[k]);
      bp_x[k] = boundary_product_x(xs[k]);
      bp_y[k] = boundary_product_y(xs[k]);
    }
    std::vector<Complex> grid(static_cast<size_t>(m) * m);
    for (int k = 0; k < m; ++k)
      for (int l = 0; l < m; ++l) {
        const Complex lv = ax[k] * xs[l] * xs[l] + bx[k] * xs[l] + cx[k];
        grid[static_cast<size_t>(k) * m + l] = (bp_x[k] + bp_y[l] - l00) / lv;
      }

    fft2_pow2(grid, m);

    // coefficient of x^{i-1} y^{j-1} sits at bin (i-1, j-1), scaled by m^2 r^{i+j-2}
    CoeffGrid out;
    out.n = n;
    out.values.resize(static_cast<size_t>(n) * n);
    const double inv_m2 = 1.0 / (static_cast<double>(m) * m);
    bool imag_ok = true;
    for (int i = 1; i <= n && imag_ok; ++i)
      for (int j = 1; j <= n; ++j) {
        const Complex c = grid[static_cast<size_t>(i - 1) * m + (j - 1)] * inv_m2 /
                          std::pow(r, i + j - 2);
        if (std::abs(c.imag()) > 1e-8 * std::max(1.0, std::abs(c.real()))) {
          imag_ok = false;
          break;
        }
        out.at(i, j) = c.real();
      }
    if (!imag_ok) continue;  // retry with a finer grid

    const double f11 = out.f(1, 1);
    if (!(std::abs(f11) > 1e-8))
      fail(ErrorCode::ImaginaryResidue, "f(1,1) extracted as zero");
    for (double& v : out.values) v /= f11;
    return out;
  }
  fail(ErrorCode::ImaginaryResidue, "coefficients stayed complex after grid refinement");
}

}  // namespace quadwalk
