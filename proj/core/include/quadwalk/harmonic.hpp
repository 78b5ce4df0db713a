#pragma once

#include <vector>

#include "quadwalk/conformal.hpp"
#include "quadwalk/kernel.hpp"
#include "quadwalk/walk_model.hpp"

namespace quadwalk {

// Taylor coefficients f(i,j) of H(x,y) = sum f(i,j) x^{i-1} y^{j-1},
// 1 <= i,j <= n, normalized to f(1,1) = 1. Values outside the quadrant
// interior are zero by the boundary condition.
struct CoeffGrid {
  int n = 0;
  std::vector<double> values;  // row-major, (i-1)*n + (j-1)

  double f(int i, int j) const {
    if (i < 1 || j < 1) return 0.0;
    return values[static_cast<size_t>(i - 1) * n + (j - 1)];
  }
  double& at(int i, int j) { return values[static_cast<size_t>(i - 1) * n + (j - 1)]; }
};

// The positive harmonic function of a zero-drift walk killed at the boundary,
// in generating-function form:
//   H(x,0) = mu (w(x) + nu) / L(x,0),
// the transposed orientation giving H(0,y), and the full H(x,y) recovered
// from the kernel functional equation
//   L(x,y) H(x,y) = L(x,0) H(x,0) + L(0,y) H(0,y) - L(0,0) H(0,0).
// Everything is normalized to f(1,1) = H(0,0) = 1.
class HarmonicSolution {
public:
  // w_scale exercises the scale-freedom of the gluing map; every H value
  // must be independent of it.
  static HarmonicSolution solve(const WalkModel& model, double w_scale = 1.0);

  const WalkModel& model() const { return model_; }
  const KernelData& kernel() const { return kd_; }
  const KernelData& kernel_transposed() const { return kd_t_; }
  const ConformalMap& w() const { return w_; }
  const ConformalMap& w_transposed() const { return w_t_; }
  double theta() const { return theta_; }

  double mu() const { return mu_; }
  double nu() const { return nu_; }
  double mu_transposed() const { return mu_t_; }
  double nu_transposed() const { return nu_t_; }
  // max deviation of the boundary-constant samples (0 when p(1,1) = 0)
  double constancy_deviation() const { return constancy_dev_; }

  // kappa with w_tilde = kappa * w_transposed carrying the growth constant
  // c (m_xx/m_yy)^{pi/(2 theta)} required along the branch through (1,1)
  double growth_match_kappa() const;

  // L(x,0) H(x,0) and L(0,y) H(0,y); polynomial-free building blocks of H
  Complex boundary_product_x(const Complex& x) const;
  Complex boundary_product_y(const Complex& y) const;

  Complex eval_Hx0(const Complex& x) const;
  Complex eval_H0y(const Complex& y) const;
  Complex eval_H(const Complex& x, const Complex& y) const;

  // Cauchy coefficient extraction on a sub-unit torus via FFT.
  CoeffGrid extract_coefficients(int n) const;

private:
  WalkModel model_, model_t_;
  KernelData kd_, kd_t_;
  double theta_ = 0;
  ConformalMap w_, w_t_;
  double mu_ = 0, nu_ = 0, mu_t_ = 0, nu_t_ = 0;
  double constancy_dev_ = 0;
};

}  // namespace quadwalk
