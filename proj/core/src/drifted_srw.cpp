#include "quadwalk/drifted_srw.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "quadwalk/errors.hpp"
#include "quadwalk/oracle.hpp"

namespace quadwalk {

namespace {

constexpr double kResidualTol = 1e-10;
constexpr double kEndpointTol = 1e-12;

// Radius from the published pattern, written in rationalized form so the
// removable singularity at argument 1 disappears:
//   r = A / (2 denom (1 + sqrt(1 - (1-c) A))),   A = 1 - 4qq + 4pp c,
// which extends continuously to c -> infinity as sqrt(pp)/denom.
double radius(double c, bool c_infinite, double pp, double qq, double denom) {
  if (c_infinite) return std::sqrt(pp) / denom;
  const double A = 1.0 - 4.0 * qq + 4.0 * pp * c;
  const double inner = 1.0 - (1.0 - c) * A;
  if (inner < 0)
    fail(ErrorCode::FormulaInconsistency, "radius square root turned negative");
  return A / (2.0 * denom * (1.0 + std::sqrt(inner)));
}

// s+- = r +- sqrt(r^2 - ratio); discriminants at rounding scale collapse to
// the exact double root (the endpoint cases are double roots analytically).
bool split_pair(double r, double ratio, double& plus, double& minus) {
  double disc = r * r - ratio;
  if (disc < -1e-12) return false;
  if (std::abs(disc) < 1e-13) disc = 0.0;
  const double root = std::sqrt(disc);
  plus = r + root;
  minus = r - root;
  return true;
}

double family_residual(const GammaFamily& fam, const WalkModel& walk, int box) {
  if (!std::isfinite(fam.stp) || !std::isfinite(fam.stm) || !std::isfinite(fam.sp) ||
      !std::isfinite(fam.sm))
    return std::numeric_limits<double>::infinity();
  const ResidualReport rep = harmonicity_residual(
      [&fam](int i, int j) { return f_gamma(fam, i, j); }, box, walk);
  if (!rep.positivity_ok) return std::numeric_limits<double>::infinity();
  return rep.max_relative_residual;
}

}  // namespace

WalkModel DriftedSRW::to_walk_model() const {
  std::array<double, 9> p{};
  p[WalkModel::index(1, 0)] = p10;
  p[WalkModel::index(-1, 0)] = pm10;
  p[WalkModel::index(0, 1)] = p01;
  p[WalkModel::index(0, -1)] = p0m1;
  return WalkModel::from_doubles(p, "drifted_srw");
}

void DriftedSRW::validate() const {
  if (!(p10 > 0) || !(pm10 > 0) || !(p01 > 0) || !(p0m1 > 0))
    fail(ErrorCode::DegenerateSteps, "all four axial probabilities must be positive");
  if (std::abs(p10 + pm10 + p01 + p0m1 - 1.0) > 1e-12)
    fail(ErrorCode::SumNotOne, "axial probabilities must sum to one");
  if (std::abs(p10 - pm10) < 1e-14 && std::abs(p01 - p0m1) < 1e-14)
    fail(ErrorCode::NonZeroDrift, "the gamma family needs a non-zero drift");
}

GammaFamily gamma_family(const DriftedSRW& model, double gamma) {
  model.validate();
  const double half_pi = std::numbers::pi / 2.0;
  if (gamma < -kEndpointTol || gamma > half_pi + kEndpointTol)
    fail(ErrorCode::FormulaInconsistency, "gamma outside [0, pi/2]");

  GammaFamily fam;
  fam.gamma = gamma;
  if (gamma < kEndpointTol) fam.kind = GammaFamily::Kind::AtZero;
  else if (gamma > half_pi - kEndpointTol) fam.kind = GammaFamily::Kind::AtHalfPi;
  else fam.kind = GammaFamily::Kind::Interior;

  const double pp = model.pm10 * model.p10;
  const double qq = model.p0m1 * model.p01;

  // tan^2 and cot^2 of gamma, with the infinities at the endpoints
  const bool tan_inf = fam.kind == GammaFamily::Kind::AtHalfPi;
  const bool cot_inf = fam.kind == GammaFamily::Kind::AtZero;
  const double tg = tan_inf ? 0.0 : std::tan(gamma);
  const double c = tg * tg;
  const double ct = cot_inf ? 0.0 : 1.0 / std::tan(gamma);
  const double ctt = ct * ct;

  fam.r = radius(c, tan_inf, pp, qq, model.p10);
  if (!split_pair(fam.r, model.pm10 / model.p10, fam.sp, fam.sm))
    fail(ErrorCode::FormulaInconsistency, "discriminant of s negative");

  // published transposed radius (p10 in the denominator)
  fam.rt_published = radius(ctt, cot_inf, qq, pp, model.p10);
  fam.rt = fam.rt_published;
  if (!split_pair(fam.rt, model.p0m1 / model.p01, fam.stp, fam.stm)) {
    fam.stp = fam.stm = std::numeric_limits<double>::quiet_NaN();
  }

  const WalkModel walk = model.to_walk_model();
  constexpr int kCheckBox = 12;
  fam.residual_published = family_residual(fam, walk, kCheckBox);
  fam.residual = fam.residual_published;

  if (fam.residual_published > kResidualTol) {
    // kernel condition 2 p10 r + 2 p01 rt = 1 pins the transposed radius
    fam.adjudicated = true;
    fam.rt = (1.0 - 2.0 * model.p10 * fam.r) / (2.0 * model.p01);
    if (!split_pair(fam.rt, model.p0m1 / model.p01, fam.stp, fam.stm))
      fail(ErrorCode::FormulaInconsistency, "corrected discriminant still negative");
    fam.residual = family_residual(fam, walk, kCheckBox);
    if (fam.residual > kResidualTol)
      fail(ErrorCode::FormulaInconsistency,
           "harmonicity residual " + std::to_string(fam.residual) +
               " after correction (published " + std::to_string(fam.residual_published) + ")");
  }
  return fam;
}

double f_gamma(const GammaFamily& fam, int i0, int j0) {
  if (i0 <= 0 || j0 <= 0) return 0.0;
  const double xs = std::pow(fam.sp, i0) - std::pow(fam.sm, i0);
  const double yt = std::pow(fam.stp, j0) - std::pow(fam.stm, j0);
  switch (fam.kind) {
    case GammaFamily::Kind::AtZero:
      return xs * j0 * std::pow(fam.stp, j0);
    case GammaFamily::Kind::AtHalfPi:
      return i0 * std::pow(fam.sp, i0) * yt;
    case GammaFamily::Kind::Interior:
      return xs * yt;
  }
  return 0.0;
}

std::vector<double> convergence_check(const std::vector<double>& drifts, double gamma,
                                      int box) {
  std::vector<double> errors;
  errors.reserve(drifts.size());
  for (const double eps : drifts) {
    DriftedSRW m;
    m.p10 = m.p01 = 0.25 + eps / 2.0;
    m.pm10 = m.p0m1 = 0.25 - eps / 2.0;
    m.validate();  // rejects eps == 0
    const GammaFamily fam = gamma_family(m, gamma);
    const double f11 = f_gamma(fam, 1, 1);
    double err = 0;
    for (int i = 1; i <= box; ++i)
      for (int j = 1; j <= box; ++j)
        err = std::max(err, std::abs(f_gamma(fam, i, j) / f11 -
                                     static_cast<double>(i) * j));
    errors.push_back(err);
  }
  return errors;
}

}  // namespace quadwalk
