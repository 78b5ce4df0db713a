#include "quadwalk/verify.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "quadwalk/classify.hpp"
#include "quadwalk/conformal.hpp"
#include "quadwalk/errors.hpp"
#include "quadwalk/oracle.hpp"

namespace quadwalk {

namespace {

// boundary samples y in (y1, 1); the top margin keeps |w| small enough that
// absolute tolerances are meaningful against the double noise floor
std::vector<double> curve_parameters(double y1, int n) {
  std::vector<double> ys;
  ys.reserve(n);
  for (int k = 1; k <= n; ++k)
    ys.push_back(y1 + (1.0 - y1) * (0.005 + 0.89 * k / n));
  return ys;
}

bool is_transpose_symmetric(const WalkModel& m) {
  for (int i = -1; i <= 1; ++i)
    for (int j = -1; j <= 1; ++j)
      if (std::abs(m.prob(i, j) - m.prob(j, i)) > 0) return false;
  return true;
}

}  // namespace

VerifyReport verify_model(const WalkModel& model, int grid_side, int boundary_samples) {
  VerifyReport rep;
  const HarmonicSolution sol = HarmonicSolution::solve(model);
  const KernelData& kd = sol.kernel();
  const ConformalMap& w = sol.w();
  const double theta = sol.theta();

  std::mt19937_64 rng(20240901);
  auto unit = [&rng]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };

  // kernel: both section forms agree pointwise
  {
    double worst = 0;
    for (int k = 0; k < 200; ++k) {
      const Complex x(2 * unit() - 1, 2 * unit() - 1);
      const Complex y(2 * unit() - 1, 2 * unit() - 1);
      worst = std::max(worst, std::abs(kernel_L(kd, x, y) -
                                       kernel_L_transposed_form(kd, x, y)));
    }
    rep.add("kernel_two_forms_agree", worst, 1e-12);
  }

  // branches solve the kernel
  {
    double worst = 0;
    for (int k = 0; k < 300; ++k) {
      const Complex y(2 * unit() - 1, 2 * unit() - 1);
      for (int which : {0, 1}) {
        BranchValue v;
        try {
          v = branch_X(kd, y, which);
        } catch (const Error&) {
          continue;
        }
        if (v.at_infinity) continue;
        const double scale = 1e-10 * (1.0 + std::norm(y)) * (1.0 + std::norm(v.value));
        worst = std::max(worst, std::abs(kernel_L(kd, v.value, y)) / std::max(scale, 1e-30));
      }
    }
    rep.add("branch_on_kernel(scaled)", worst, 1.0);
  }

  // gluing map real and conjugation-symmetric on the curve
  {
    double worst_im = 0, worst_conj = 0;
    for (double ys : curve_parameters(kd.y1(), boundary_samples)) {
      BranchValue b;
      try {
        b = branch_X(kd, Complex(ys, 0.0), 0);
      } catch (const Error&) {
        continue;
      }
      if (b.at_infinity || std::abs(b.value) > 1e3) continue;
      const Complex wx = w(b.value);
      const Complex wxc = w(std::conj(b.value));
      worst_im = std::max(worst_im, std::abs(wx.imag()));
      worst_conj = std::max(worst_conj, std::abs(wx - wxc));
    }
    rep.add("w_real_on_curve", worst_im, 1e-8);
    rep.add("w_conjugation_symmetric", worst_conj, 1e-8);
  }

  // the two expressions of w agree across the |T| = 1 seam (the collided
  // branch-point map evaluates directly, without the seam)
  if (w.kind() == ConformalMap::Kind::DegeneratePair) {
    rep.add("seam_two_formulas_agree(skipped_degenerate)", 0.0, 1e-9);
  } else {
    double worst = 0;
    int found = 0;
    const double ring = std::max(0.05, 0.2 * std::abs(1.0 - kd.x1()));
    for (double radius : {0.25 * ring, 0.5 * ring, ring, 2.0 * ring}) {
      for (int k = 0; k < 64; ++k) {
        const double ang = 2.0 * std::numbers::pi * k / 64;
        const Complex x = kd.x1() + radius * Complex(std::cos(ang), std::sin(ang));
        if (std::abs(x - 1.0) < 1e-6) continue;
        const double t_mod = std::abs(w.T(x));
        if (t_mod < 0.9 || t_mod > 1.1) continue;
        ++found;
        worst = std::max(worst, std::abs(w.raw_arcsin(x) - w.raw_log(x)));
      }
    }
    rep.add("seam_two_formulas_agree", found > 0 ? worst : 1.0, 1e-9);
  }

  // pole exponent of w at 1
  rep.add("growth_exponent_error",
          std::abs(fit_growth_exponent(w) - std::numbers::pi / theta), 1e-3);

  // boundary constant stayed constant across samples
  rep.add("mu_constancy_deviation", sol.constancy_deviation(), 1e-6);

  // transposed constant equals the primary one after growth matching
  {
    const double mu_matched = sol.mu_transposed() / sol.growth_match_kappa();
    rep.add("mu_transposed_match",
            std::abs(mu_matched - sol.mu()) / std::abs(sol.mu()), 1e-6);
  }

  // nu = -w(X0(0)) whenever the branch value at 0 is finite
  {
    bool checked = false;
    try {
      const BranchValue x0 = branch_X(kd, Complex(0.0, 0.0), 0);
      if (!x0.at_infinity) {
        const Complex w0 = w(x0.value);
        rep.add("nu_matches_branch_at_zero",
                std::abs(sol.nu() + w0.real()) / (1.0 + std::abs(sol.nu())), 1e-6);
        checked = true;
      }
    } catch (const Error&) {
    }
    if (!checked) rep.add("nu_matches_branch_at_zero(skipped)", 0.0, 1.0);
  }

  // functional equation along the curve:
  // mu (w(X0(y)) + nu) + mu~ (w~(y) + nu~) = L(0,0)
  {
    double worst = 0;
    const double l00 = model.prob(1, 1);
    for (double ys : curve_parameters(kd.y1(), 50)) {
      BranchValue b;
      try {
        b = branch_X(kd, Complex(ys, 0.0), 0);
      } catch (const Error&) {
        continue;
      }
      if (b.at_infinity) continue;
      const Complex lhs = sol.mu() * (w(b.value) + sol.nu()) +
                          sol.boundary_product_y(Complex(ys, 0.0)) - l00;
      worst = std::max(worst, std::abs(lhs));
    }
    rep.add("functional_equation_residual", worst, 1e-6);
  }

  // boundary condition: L(x,0) H(x,0) real on the curve
  {
    double worst = 0;
    for (double ys : curve_parameters(kd.y1(), boundary_samples)) {
      BranchValue b;
      try {
        b = branch_X(kd, Complex(ys, 0.0), 0);
      } catch (const Error&) {
        continue;
      }
      if (b.at_infinity || std::abs(b.value) > 1e3) continue;
      worst = std::max(worst, std::abs(sol.boundary_product_x(b.value).imag()));
    }
    rep.add("boundary_product_imaginary", worst, 1e-8);
  }

  // H invariant under rescaling the gluing map
  {
    const HarmonicSolution doubled = HarmonicSolution::solve(model, 2.0);
    double worst = 0;
    for (int k = 0; k < 100; ++k) {
      const double ang = 2.0 * std::numbers::pi * k / 100;
      const Complex x = 0.6 * Complex(std::cos(ang), std::sin(ang));
      worst = std::max(worst, std::abs(sol.eval_Hx0(x) - doubled.eval_Hx0(x)));
    }
    rep.add("scale_invariance", worst, 1e-10);
  }

  // extracted coefficients: discrete harmonicity, positivity, symmetry
  {
    const CoeffGrid grid = sol.extract_coefficients(grid_side);
    const ResidualReport res = harmonicity_residual(grid, model);
    rep.add("extraction_harmonicity_residual", res.max_relative_residual, 1e-6);
    rep.add("extraction_positivity", res.positivity_ok ? 0.0 : 1.0, 0.5);
    rep.add("f11_normalized", std::abs(grid.f(1, 1) - 1.0), 1e-12);
    if (is_transpose_symmetric(model)) {
      double worst = 0;
      for (int i = 1; i <= grid.n; ++i)
        for (int j = 1; j <= grid.n; ++j)
          worst = std::max(worst, std::abs(grid.f(i, j) - grid.f(j, i)));
      rep.add("grid_transpose_symmetry", worst, 1e-8);
    }
  }

  // coefficient growth along the first row: ratios head to 1
  {
    const CoeffGrid big = sol.extract_coefficients(64);
    double lo = std::numeric_limits<double>::max(), hi = 0;
    for (int i = 32; i < 64; ++i) {
      const double ratio = big.f(i + 1, 1) / big.f(i, 1);
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
    }
    rep.add("row_ratio_above", std::max(0.0, 0.8 - lo), 0.0);
    rep.add("row_ratio_below", std::max(0.0, hi - 1.25), 0.0);
  }

  return rep;
}

}  // namespace quadwalk
